#include "apforge/exact/binary_form.hpp"

#include <sstream>

namespace apforge::exact {

BinaryForm form_from_ints(const std::vector<long>& coeffs) {
  std::vector<BigRat> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return BinaryForm(std::move(c));
}

BinaryForm form_from_strings(const std::vector<std::string>& coeffs) {
  std::vector<BigRat> c;
  c.reserve(coeffs.size());
  for (const auto& s : coeffs) c.push_back(parse_rational(s));
  return BinaryForm(std::move(c));
}

BinaryForm form_divide(const BinaryForm& f, const BigRat& divisor) {
  if (sgn(divisor) == 0) throw std::domain_error("form division by zero");
  std::vector<BigRat> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.emplace_back(v / divisor);
  return BinaryForm(std::move(c));
}

std::optional<BinaryForm> form_exact_root(const BinaryForm& f, unsigned k) {
  if (k == 0) throw std::invalid_argument("form_exact_root: k must be positive");
  if (k == 1) return f;
  const std::size_t n = f.degree();
  if (n % k != 0) return std::nullopt;
  const std::size_t m = n / k;
  if (f.is_zero()) return BinaryForm::zero(m, BigRat(0));

  // f = y^t * f1 with f1's x^(n-t) coefficient nonzero.
  std::size_t t = 0;
  while (sgn(f.coeffs()[t]) == 0) ++t;
  if (t % k != 0) return std::nullopt;
  const std::size_t shift = t / k;
  const std::size_t m1 = m - shift;  // degree in x of the root's leading part

  auto lead = rat_kth_root(f.coeffs()[t], k);
  if (!lead) return std::nullopt;

  // g = sum_{j=0}^{m1} g_j x^(m1-j) y^(shift+j); match coefficients of f at
  // indices t, t+1, ... The coefficient at t+j is k*g0^(k-1)*g_j plus terms in
  // g_1..g_{j-1}.
  std::vector<BigRat> g(m + 1, BigRat(0));
  g[shift] = *lead;
  const BigRat denom = BigRat(static_cast<long>(k)) * pow(*lead, k - 1);
  for (std::size_t j = 1; j <= m1; ++j) {
    BinaryForm trial(g);
    BinaryForm gk = trial.pow(k);
    BigRat residual = f.coeffs()[t + j] - gk.coeffs()[t + j];
    g[shift + j] = residual / denom;
  }
  BinaryForm root(g);
  if (!(root.pow(k) == f)) return std::nullopt;
  return root;
}

std::string form_to_string(const BinaryForm& f) {
  std::ostringstream os;
  const std::size_t d = f.degree();
  bool first = true;
  for (std::size_t j = 0; j <= d; ++j) {
    const BigRat& c = f.coeffs()[j];
    if (sgn(c) == 0) continue;
    const std::size_t ex = d - j;
    const std::size_t ey = j;
    const bool bare = ex == 0 && ey == 0;
    BigRat mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || bare) {
      os << to_string(mag);
      if (!bare) os << "*";
    }
    if (ex > 0) {
      os << "x";
      if (ex > 1) os << "^" << ex;
      if (ey > 0) os << "*";
    }
    if (ey > 0) {
      os << "y";
      if (ey > 1) os << "^" << ey;
    }
  }
  if (first) os << "0";
  return os.str();
}

std::string form_diff(const BinaryForm& expected, const BinaryForm& actual) {
  std::ostringstream os;
  if (expected.degree() != actual.degree()) {
    os << "degree " << expected.degree() << " vs " << actual.degree();
    return os.str();
  }
  for (std::size_t j = 0; j <= expected.degree(); ++j) {
    if (expected.coeffs()[j] != actual.coeffs()[j])
      os << "[x^" << expected.degree() - j << " y^" << j << "] " << to_string(expected.coeffs()[j]) << " vs "
         << to_string(actual.coeffs()[j]) << "; ";
  }
  return os.str();
}

}  // namespace apforge::exact
