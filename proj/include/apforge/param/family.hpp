#pragma once

// Parametrized solution families of A a^2 + B b^2 = C c^k (k = 2 or 3).
// Each branch gives a(x, y), b(x, y) as binary forms; the c-form is derived by
// exact root extraction and compared against the pinned corpus copy.

#include "apforge/exact/binary_form.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apforge::param {

using exact::BigInt;
using exact::BigRat;
using exact::BinaryForm;

class IntegralityViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Branch {
  BinaryForm a, b;
  std::optional<BinaryForm> c_pinned;
};

struct ParamFamily {
  std::string id;  // "i" .. "viii"
  long A, B, C;    // A a^2 + B b^2 = C c^k
  unsigned k;
  std::vector<Branch> branches;
  std::string sign_rule = "signs of a and b independent";
  /// Parity condition on (x, y) for integral output; empty if none.
  std::string integrality_rule;
  /// x = y (mod 2) is needed for integral a; the cover check also tries the
  /// other parity class, scaling the triple to primitive form.
  bool same_parity = false;

  std::string equation() const;
};

struct TernarySolution {
  BigInt a, b, c;
  friend bool operator==(const TernarySolution&, const TernarySolution&) = default;
};

/// sign_a, sign_b in {+1, -1}; branch is 1-based. Throws IntegralityViolation
/// when a, b or c is not an integer; std::out_of_range for a bad branch.
TernarySolution param_eval(const ParamFamily& f, unsigned branch, int sign_a, int sign_b, long x, long y);

/// A a^2 + B b^2 recomputed from the forms divided by C.
BinaryForm combination(const ParamFamily& f, unsigned branch);

struct IdentityReport {
  bool holds;
  std::optional<BinaryForm> derived_c;
  std::string detail;
};

/// The combination must be an exact k-th power; the derived c must equal the
/// pinned c when one is present.
IdentityReport param_verify_identity(const ParamFamily& f, unsigned branch);

struct CoverEntry {
  long a, b, c;  // a, b >= 0
};

struct CoverReport {
  std::string family;
  long bound = 0;
  long radius = 0;
  bool radius_doubled = false;
  std::size_t solutions = 0;  // primitive (|a|, |b|) pairs found
  std::size_t matched = 0;
  /// Matched only by (x, y) of opposite parity, as (x^2 - 3y^2, 2xy, x^2 + 3y^2)
  /// reduced by its gcd.
  std::vector<CoverEntry> opposite_convention;
  std::vector<CoverEntry> unmatched;
};

long cover_radius(const ParamFamily& f, long bound);

/// Brute-force primitive solutions with |a|, |b| <= bound and look each one up
/// among the parametrized values with |x|, |y| <= radius. bound <= max_bound.
CoverReport param_cover_check(const ParamFamily& f, long bound, long max_bound = 500);

/// Serial, map-free version of the same check for cross-validation.
CoverReport param_cover_check_reference(const ParamFamily& f, long bound, long max_bound = 500);

}  // namespace apforge::param
