#pragma once

// Checks attached to the superelliptic equation f(x, y) = 2 z^3 and to the
// parity obstruction for squares and cubes in progression.

#include "apforge/exact/binary_form.hpp"

#include <cstdint>
#include <stdexcept>

namespace apforge::curve {

class NoRepresentation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// f(-3y, x) == -27 f(x, y) as forms.
bool involution_check(const exact::BinaryForm& f);

struct DescentStep {
  long s;
  exact::BigInt u, v;  // x1 + x3 = 2 s u^2, x1^2 - x1 x3 + x3^2 = s v^2, u, v >= 0
  /// For s = 3: no integer x0 has 2 x0^3 = 3 x1^3 - x3^3 modulo 9, so the pair
  /// cannot extend to a progression of cubes, cube, square, cube.
  bool excluded_mod9 = false;
};

/// Requires gcd(x1, x3) = 1, x1 + x3 != 0 and x1^3 + x3^3 = 2 w^2; otherwise
/// throws NoRepresentation.
DescentStep cube_pair_descent_step(long x1, long x3);

/// Residue patterns (x0, x1, x2, x3) mod 4 with x0^2, x1^3, x2^3, x3^2 in
/// progression mod 4, no two consecutive terms even, and 2 | x1 x2.
std::uint64_t mod4_obstruction_count();

}  // namespace apforge::curve
