#pragma once

// Dense univariate polynomials over an exact field (BigRat or a number-field
// element). The coefficient type must provide +, -, *, / and the ring hooks
// is_zero / zero_like / one_like found by ADL or in apforge::exact.

#include "apforge/exact/bigint.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apforge::exact {

namespace detail {
// Free-function dispatch; class members named is_zero would otherwise hide
// the ADL hooks.
template <class T>
bool coeff_is_zero(const T& c) {
  return is_zero(c);
}
}  // namespace detail

template <class T>
class UniPoly {
 public:
  /// The zero polynomial.
  UniPoly() = default;

  /// Coefficients in ascending degree; trailing zeros are trimmed.
  explicit UniPoly(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }

  static UniPoly from_descending(std::vector<T> descending) {
    return UniPoly(std::vector<T>(descending.rbegin(), descending.rend()));
  }

  static UniPoly constant(const T& c) { return UniPoly(std::vector<T>{c}); }

  static UniPoly monomial(const T& coeff, std::size_t exponent) {
    std::vector<T> c(exponent + 1, zero_like(coeff));
    c[exponent] = coeff;
    return UniPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }

  std::size_t degree() const {
    if (c_.empty()) throw std::domain_error("degree of the zero polynomial");
    return c_.size() - 1;
  }

  const std::vector<T>& coeffs() const { return c_; }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return c_.back();
  }

  /// Coefficient of x^i; `zero` is returned past the degree.
  T coeff_or(std::size_t i, const T& zero) const { return i < c_.size() ? c_[i] : zero; }

  T operator()(const T& x) const {
    if (c_.empty()) return zero_like(x);
    T acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<T> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * BigRat(static_cast<long>(i)));
    return UniPoly(std::move(d));
  }

  UniPoly scaled(const T& s) const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c * s);
    return UniPoly(std::move(r));
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::size_t n = std::max(a.c_.size(), b.c_.size());
    const T zero = zero_like(a.c_.front());
    std::vector<T> r;
    r.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.push_back(a.coeff_or(i, zero) + b.coeff_or(i, zero));
    return UniPoly(std::move(r));
  }

  friend UniPoly operator-(const UniPoly& a) {
    std::vector<T> r;
    r.reserve(a.c_.size());
    for (const auto& c : a.c_) r.push_back(zero_like(c) - c);
    return UniPoly(std::move(r));
  }

  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_.front()));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!detail::coeff_is_zero(T(a.c_[i] - b.c_[i]))) return false;
    return true;
  }

  std::string to_string(const std::string& var = "X") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (detail::coeff_is_zero(c_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << coeff_text(c_[i]) << ")";
      if (i >= 1) os << "*" << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  static std::string coeff_text(const BigRat& q) { return exact::to_string(q); }
  template <class U>
  static std::string coeff_text(const U& u) {
    return u.to_string();
  }

  std::vector<T> c_;
};

/// Quotient and remainder; the divisor must be nonzero.
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> divmod(const UniPoly<T>& a, const UniPoly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero() || a.degree() < b.degree()) return {UniPoly<T>(), a};
  std::vector<T> rem = a.coeffs();
  const std::size_t db = b.degree();
  std::vector<T> quot(a.degree() - db + 1, zero_like(b.leading()));
  for (std::size_t i = quot.size(); i-- > 0;) {
    T q = rem[i + db] / b.leading();
    quot[i] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[i + j] = rem[i + j] - q * b.coeffs()[j];
  }
  rem.resize(db);
  return {UniPoly<T>(std::move(quot)), UniPoly<T>(std::move(rem))};
}

/// Determinant over a field by Gaussian elimination with nonzero pivoting.
template <class T>
T determinant(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  T det = one_like(m[0][0]);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && detail::coeff_is_zero(m[piv][col])) ++piv;
    if (piv == n) return zero_like(m[0][0]);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = zero_like(det) - det;
    }
    det = det * m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (detail::coeff_is_zero(m[r][col])) continue;
      T f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - f * m[col][c];
    }
  }
  return det;
}

/// Res(p, q) as the determinant of the Sylvester matrix (p's rows first), so
/// Res(p, q) = lc(p)^deg(q) * prod q(roots of p).
template <class T>
T uni_resultant(const UniPoly<T>& p, const UniPoly<T>& q) {
  if (p.is_zero() || q.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  const std::size_t m = p.degree();
  const std::size_t n = q.degree();
  if (m == 0 && n == 0) return one_like(p.leading());
  if (n == 0) {
    T r = one_like(q.leading());
    for (std::size_t i = 0; i < m; ++i) r = r * q.leading();
    return r;
  }
  if (m == 0) {
    T r = one_like(p.leading());
    for (std::size_t i = 0; i < n; ++i) r = r * p.leading();
    return r;
  }
  const std::size_t size = m + n;
  const T zero = zero_like(p.leading());
  std::vector<std::vector<T>> s(size, std::vector<T>(size, zero));
  // Row i of p-block holds p's coefficients, highest degree first, shifted by i.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = p.coeffs()[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = q.coeffs()[n - j];
  return determinant(std::move(s));
}

using RatPoly = UniPoly<BigRat>;

/// Builds a rational polynomial from descending integer/rational literals.
RatPoly rat_poly_desc(const std::vector<std::string>& descending);

}  // namespace apforge::exact
