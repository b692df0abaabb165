#pragma once

// Genus-2 curves y^2 = f(x), deg f in {5, 6}, with point counts over F_p and
// F_{p^2} and the Jacobian order derived from them.

#include "apforge/exact/uni_poly.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace apforge::curve {

using exact::BigInt;
using exact::BigRat;
using exact::RatPoly;

class BadReduction : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class HyperCurve {
 public:
  /// Throws std::invalid_argument unless deg f in {5, 6} and f is squarefree.
  HyperCurve(std::string label, RatPoly f);

  const std::string& label() const { return label_; }
  const RatPoly& f() const { return f_; }
  std::size_t degree() const { return f_.degree(); }
  unsigned genus() const { return 2; }

  /// F = c^2 f with integer coefficients and c minimal; points map as
  /// (X, Y) -> (X, c*Y).
  const std::vector<BigInt>& integral_model() const { return model_; }
  const BigInt& model_scale() const { return scale_; }
  /// Res(F, F') of the integral model.
  const BigInt& model_discriminant() const { return disc_; }

  bool good_reduction(long p) const;

 private:
  std::string label_;
  RatPoly f_;
  std::vector<BigInt> model_;
  BigInt scale_;
  BigInt disc_;
};

/// Integer coefficients (ascending) of c^2 f with c minimal, and c.
std::pair<std::vector<BigInt>, BigInt> integral_square_model(const RatPoly& f);

/// q is p or p^2 with p odd and of good reduction; throws BadReduction.
long count_points(const HyperCurve& curve, long p, unsigned extension_degree);

struct LPolynomial {
  long p;
  long n1, n2;
  long c1, c2;  // L(T) = 1 + c1 T + c2 T^2 + p c1 T^3 + p^2 T^4
  long at_one() const { return 1 + c1 + c2 + p * c1 + p * p; }
};

LPolynomial l_polynomial(const HyperCurve& curve, long p);
long jacobian_order(const HyperCurve& curve, long p);

/// gcd of Jacobian orders over the listed primes.
long torsion_gcd_bound(const HyperCurve& curve, const std::vector<long>& primes);

/// Weil interval 1 <= #J(F_p) <= (sqrt(p) + 1)^4, checked exactly.
bool within_weil_bound(long order, long p);

}  // namespace apforge::curve
