#pragma once

// Rational points of bounded height on y^2 = f(x) and local solvability of
// the same equation over Q_p and R.

#include "apforge/curve/hyper_curve.hpp"

#include <vector>

namespace apforge::curve {

struct RationalPoint {
  BigRat x, y;
  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct PointSet {
  std::vector<RationalPoint> affine;  // sorted by (x, y)
  unsigned at_infinity = 0;           // rational points above x = infinity
};

/// All (r/s, y) with gcd(r, s) = 1, s > 0, |r|, |s| <= height. f may have any
/// degree <= 6; odd degree contributes one point at infinity, even degree two
/// when the leading coefficient is a rational square.
PointSet rational_points_search(const RatPoly& f, long height);
/// Serial big-integer version of the same scan, kept for cross-checking.
PointSet rational_points_search_reference(const RatPoly& f, long height);

inline PointSet rational_points_search(const HyperCurve& c, long height) { return rational_points_search(c.f(), height); }

enum class LocalStatus { Solvable, NotSolvable, Undecided };

std::string to_string(LocalStatus s);

/// Decides whether y^2 = f(x) has a Q_p-point (including points above
/// infinity) by refining residue classes of x; gives up as Undecided past
/// depth 2 v_p(disc) + 3.
LocalStatus locally_solvable(const RatPoly& f, long p);
bool locally_solvable_real(const RatPoly& f);

/// Number of distinct real roots, by a Sturm sequence.
unsigned real_root_count(const RatPoly& f);

}  // namespace apforge::curve
