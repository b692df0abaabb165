#include "apforge/curve/hyper_curve.hpp"

#include <numeric>
#include <tuple>

namespace apforge::curve {

namespace {

BigInt square_cover(const BigInt& d) {
  // Smallest c with d | c^2.
  BigInt c = 1, rest = d;
  for (unsigned long p = 2; rest > 1; ++p) {
    if (BigInt(p) * p > rest) {
      c *= rest;
      break;
    }
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < (e + 1) / 2; ++i) c *= p;
  }
  return c;
}

long mod_p(const BigInt& v, long p) {
  long r = mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p));
  return r;
}

}  // namespace

std::pair<std::vector<BigInt>, BigInt> integral_square_model(const RatPoly& f) {
  BigInt den = 1;
  for (const auto& c : f.coeffs()) den = lcm(den, BigInt(c.get_den()));
  BigInt scale = square_cover(den);
  const BigRat s2 = BigRat(scale * scale);
  std::vector<BigInt> model;
  for (const auto& c : f.coeffs()) model.push_back(BigRat(c * s2).get_num());
  return {std::move(model), std::move(scale)};
}

HyperCurve::HyperCurve(std::string label, RatPoly f) : label_(std::move(label)), f_(std::move(f)) {
  if (f_.is_zero() || (f_.degree() != 5 && f_.degree() != 6))
    throw std::invalid_argument(label_ + ": genus-2 model needs degree 5 or 6");
  if (sgn(exact::uni_resultant(f_, f_.derivative())) == 0) throw std::invalid_argument(label_ + ": f is not squarefree");
  std::tie(model_, scale_) = integral_square_model(f_);
  std::vector<BigRat> asc(model_.begin(), model_.end());
  RatPoly m(asc);
  disc_ = exact::uni_resultant(m, m.derivative()).get_num();
}

bool HyperCurve::good_reduction(long p) const {
  if (p < 3) return false;
  if (mod_p(model_.back(), p) == 0) return false;
  return mod_p(disc_, p) != 0;
}

long count_points(const HyperCurve& curve, long p, unsigned extension_degree) {
  if (extension_degree != 1 && extension_degree != 2) throw std::invalid_argument("count_points: only F_p and F_{p^2}");
  if (!curve.good_reduction(p)) throw BadReduction(curve.label() + " has bad reduction at " + std::to_string(p));
  const auto& model = curve.integral_model();
  const std::size_t d = model.size() - 1;
  std::vector<long> c(d + 1);
  for (std::size_t i = 0; i <= d; ++i) c[i] = mod_p(model[i], p);
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (long y = 1; y < p; ++y) chi[y * y % p] = 1;

  long total = 0;
  if (extension_degree == 1) {
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (long x = 0; x < p; ++x) {
      long v = c[d];
      for (std::size_t i = d; i-- > 0;) v = (v * x + c[i]) % p;
      total += 1 + chi[v];
    }
    const long infinity = d == 6 ? (chi[c[d]] == 1 ? 2 : 0) : 1;
    return total + infinity;
  }

  // F_{p^2} = F_p[w], w^2 = n with n the smallest non-residue. An element is
  // a square iff its norm a^2 - n b^2 is a square in F_p.
  long n = 2;
  while (chi[n] != -1) ++n;
#pragma omp parallel for reduction(+ : total) schedule(static)
  for (long a = 0; a < p; ++a) {
    long part = 0;
    for (long b = 0; b < p; ++b) {
      long va = c[d], vb = 0;
      for (std::size_t i = d; i-- > 0;) {
        long na = (va * a + n * (vb * b % p)) % p;
        long nb = (va * b + vb * a) % p;
        va = (na + c[i]) % p;
        vb = nb;
      }
      long norm = ((va * va - n * (vb * vb % p)) % p + p) % p;
      part += (va == 0 && vb == 0) ? 1 : 1 + chi[norm];
    }
    total += part;
  }
  // lc lies in F_p, and all of F_p is square in F_{p^2}.
  return total + (d == 6 ? 2 : 1);
}

LPolynomial l_polynomial(const HyperCurve& curve, long p) {
  LPolynomial l{};
  l.p = p;
  l.n1 = count_points(curve, p, 1);
  l.n2 = count_points(curve, p, 2);
  l.c1 = l.n1 - (p + 1);
  const long twice_c2 = l.n2 - p * p - 1 + l.c1 * l.c1;
  if (twice_c2 % 2 != 0) throw std::logic_error("inconsistent point counts for " + curve.label());
  l.c2 = twice_c2 / 2;
  return l;
}

long jacobian_order(const HyperCurve& curve, long p) { return l_polynomial(curve, p).at_one(); }

long torsion_gcd_bound(const HyperCurve& curve, const std::vector<long>& primes) {
  if (primes.empty()) throw std::invalid_argument("torsion_gcd_bound needs at least one prime");
  long g = 0;
  for (long p : primes) g = std::gcd(g, jacobian_order(curve, p));
  return g;
}

bool within_weil_bound(long order, long p) {
  if (order < 1) return false;
  // order <= p^2 + 6p + 1 + sqrt(p) (4p + 4)
  const BigInt lhs = BigInt(order) - BigInt(p) * p - 6 * BigInt(p) - 1;
  if (lhs <= 0) return true;
  const BigInt k = 4 * BigInt(p) + 4;
  return lhs * lhs <= BigInt(p) * k * k;
}

}  // namespace apforge::curve
