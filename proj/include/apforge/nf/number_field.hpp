#pragma once

// Exact arithmetic in Q[a]/(m(a)) for small fixed fields. Elements are
// coordinate vectors on the power basis 1, a, ..., a^(d-1).
//
// "S-unit" here is a test on the rational norm only: an element passes when
// the numerator and denominator of its norm factor over S. This is weaker
// than checking valuations place by place; ideals are not modelled.

#include "apforge/exact/bigint.hpp"
#include "apforge/exact/uni_poly.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apforge::nf {

using exact::BigInt;
using exact::BigRat;
using exact::RatPoly;

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NumberField;
using FieldRef = std::shared_ptr<const NumberField>;

class NumberField {
 public:
  /// minpoly is normalized to monic; degree must be 2..4.
  static FieldRef create(std::string name, const RatPoly& minpoly);

  const std::string& name() const { return name_; }
  std::size_t degree() const { return degree_; }
  const RatPoly& minpoly() const { return minpoly_; }

  /// Res(m, m'), nonzero for a separable minimal polynomial.
  const BigRat& discriminant_resultant() const { return disc_; }

 private:
  NumberField(std::string name, RatPoly minpoly);

  std::string name_;
  RatPoly minpoly_;
  std::size_t degree_;
  BigRat disc_;
};

class FieldElem {
 public:
  FieldElem(FieldRef field, std::vector<BigRat> coords);

  static FieldElem zero(const FieldRef& field);
  static FieldElem one(const FieldRef& field);
  static FieldElem rational(const FieldRef& field, const BigRat& value);
  /// The root a of the defining polynomial.
  static FieldElem generator(const FieldRef& field);
  /// Coordinates given as rational literals, ascending powers of a.
  static FieldElem parse(const FieldRef& field, const std::vector<std::string>& coords);

  const FieldRef& field() const { return field_; }
  const std::vector<BigRat>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;

  /// Coordinates as a polynomial in a.
  RatPoly as_poly() const;

  FieldElem pow(unsigned e) const;

  friend FieldElem operator+(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator-(const FieldElem& a);
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator*(const FieldElem& a, const BigRat& s);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b);
  friend bool operator==(const FieldElem& a, const FieldElem& b);

  /// "1 + 2*a - 3/4*a^2".
  std::string to_string() const;

 private:
  void require_same_field(const FieldElem& other) const;

  FieldRef field_;
  std::vector<BigRat> coords_;
};

// Ring hooks for the polynomial templates.
inline bool is_zero(const FieldElem& x) { return x.is_zero(); }
inline FieldElem zero_like(const FieldElem& x) { return FieldElem::zero(x.field()); }
inline FieldElem one_like(const FieldElem& x) { return FieldElem::one(x.field()); }

FieldElem nf_mul(const FieldElem& a, const FieldElem& b);
/// Inverse via the extended Euclidean algorithm on (coords-polynomial, minpoly).
/// Throws std::domain_error for zero.
FieldElem nf_inv(const FieldElem& a);
/// Product of conjugates, computed as Res(m, a(x)) / lc(m)^deg a.
BigRat nf_norm(const FieldElem& a);

/// Norm numerator and denominator both factor over `primes` (up to sign).
bool nf_is_s_unit(const FieldElem& a, const std::vector<long>& primes);
bool rational_is_s_unit(const BigRat& q, const std::vector<long>& primes);

enum class SquareStatus { Square, NotASquare, Undecided };

struct SquareResult {
  SquareStatus status;
  std::optional<FieldElem> root;  // set iff Square
  std::string evidence;           // precision used or the witness prime
};

struct SquareOptions {
  unsigned start_bits = 64;
  unsigned max_bits = 1024;
  unsigned witness_primes = 50;
};

/// Square root by numerical recovery in every complex embedding followed by
/// exact verification; NotASquare requires a modular witness. Throws
/// std::domain_error for zero.
SquareResult nf_is_square(const FieldElem& a, const SquareOptions& options = {});

std::string to_string(SquareStatus s);

}  // namespace apforge::nf
