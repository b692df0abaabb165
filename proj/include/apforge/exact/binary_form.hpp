#pragma once

// Homogeneous polynomials in (x, y). Index j of the coefficient vector holds
// the coefficient of x^(d-j) * y^j. A form keeps its degree even when all
// coefficients vanish, so identities like 2b^2 - a^2 - c^3 == 0 stay typed.

#include "apforge/exact/bigint.hpp"
#include "apforge/exact/uni_poly.hpp"

#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace apforge::exact {

template <class T>
class BasicBinaryForm {
 public:
  /// Degree is coeffs.size() - 1; coeffs must be non-empty.
  explicit BasicBinaryForm(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("binary form needs at least one coefficient");
  }

  static BasicBinaryForm zero(std::size_t degree, const T& zero) {
    return BasicBinaryForm(std::vector<T>(degree + 1, zero));
  }

  std::size_t degree() const { return c_.size() - 1; }
  const std::vector<T>& coeffs() const { return c_; }
  const T& coeff(std::size_t j) const { return c_.at(j); }

  bool is_zero() const {
    for (const auto& c : c_)
      if (!detail::coeff_is_zero(c)) return false;
    return true;
  }

  T eval(const T& x, const T& y) const {
    // Horner in x with running powers of y.
    const std::size_t d = degree();
    T acc = c_[0];
    T ypow = one_like(x);
    for (std::size_t j = 1; j <= d; ++j) {
      ypow = ypow * y;
      acc = acc * x + c_[j] * ypow;
    }
    return acc;
  }

  BasicBinaryForm pow(unsigned k) const {
    BasicBinaryForm r(std::vector<T>{one_like(c_[0])});
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  BasicBinaryForm scaled(const T& s) const {
    std::vector<T> r;
    r.reserve(c_.size());
    for (const auto& c : c_) r.push_back(c * s);
    return BasicBinaryForm(std::move(r));
  }

  /// f(p*x + q*y, r*x + s*y).
  BasicBinaryForm substitute(const T& p, const T& q, const T& r, const T& s) const {
    const BasicBinaryForm lx(std::vector<T>{p, q});
    const BasicBinaryForm ly(std::vector<T>{r, s});
    BasicBinaryForm acc = zero_form(degree(), zero_like(c_[0]));
    const std::size_t d = degree();
    for (std::size_t j = 0; j <= d; ++j) {
      if (detail::coeff_is_zero(c_[j])) continue;
      acc = acc + (lx.pow(static_cast<unsigned>(d - j)) * ly.pow(static_cast<unsigned>(j))).scaled(c_[j]);
    }
    return acc;
  }

  /// f(x, 1) as a polynomial in x.
  UniPoly<T> dehomogenize() const { return UniPoly<T>(std::vector<T>(c_.rbegin(), c_.rend())); }

  friend BasicBinaryForm operator+(const BasicBinaryForm& a, const BasicBinaryForm& b) {
    require_same_degree(a, b);
    std::vector<T> r;
    r.reserve(a.c_.size());
    for (std::size_t j = 0; j < a.c_.size(); ++j) r.push_back(a.c_[j] + b.c_[j]);
    return BasicBinaryForm(std::move(r));
  }

  friend BasicBinaryForm operator-(const BasicBinaryForm& a, const BasicBinaryForm& b) {
    require_same_degree(a, b);
    std::vector<T> r;
    r.reserve(a.c_.size());
    for (std::size_t j = 0; j < a.c_.size(); ++j) r.push_back(a.c_[j] - b.c_[j]);
    return BasicBinaryForm(std::move(r));
  }

  friend BasicBinaryForm operator*(const BasicBinaryForm& a, const BasicBinaryForm& b) {
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return BasicBinaryForm(std::move(r));
  }

  friend bool operator==(const BasicBinaryForm& a, const BasicBinaryForm& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t j = 0; j < a.c_.size(); ++j)
      if (!detail::coeff_is_zero(T(a.c_[j] - b.c_[j]))) return false;
    return true;
  }

 private:
  static BasicBinaryForm zero_form(std::size_t d, const T& z) { return BasicBinaryForm::zero(d, z); }

  static void require_same_degree(const BasicBinaryForm& a, const BasicBinaryForm& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("adding binary forms of different degree");
  }

  std::vector<T> c_;
};

using BinaryForm = BasicBinaryForm<BigRat>;

BinaryForm form_from_ints(const std::vector<long>& coeffs);
BinaryForm form_from_strings(const std::vector<std::string>& coeffs);

inline BinaryForm form_mul(const BinaryForm& a, const BinaryForm& b) { return a * b; }
inline BigRat form_eval(const BinaryForm& f, const BigRat& x, const BigRat& y) { return f.eval(x, y); }

/// g with g^k == f, computed top-down by matching coefficients. The leading
/// coefficient of g is the rational k-th root of f's leading term (positive
/// for even k). nullopt when no such form exists over Q.
std::optional<BinaryForm> form_exact_root(const BinaryForm& f, unsigned k);

/// Exact division of every coefficient; throws if the divisor is zero.
BinaryForm form_divide(const BinaryForm& f, const BigRat& divisor);

/// "x^6 + 18*x^5*y - ..." rendering.
std::string form_to_string(const BinaryForm& f);

/// Coefficient vectors that differ, one "index: expected vs actual" line each.
std::string form_diff(const BinaryForm& expected, const BinaryForm& actual);

}  // namespace apforge::exact
