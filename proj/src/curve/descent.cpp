#include "apforge/curve/descent.hpp"

#include <numeric>

namespace apforge::curve {

using exact::BigInt;
using exact::BinaryForm;
using exact::BigRat;

bool involution_check(const BinaryForm& f) {
  // f(p x + q y, r x + s y) with (p, q, r, s) = (0, -3, 1, 0)
  BinaryForm image = f.substitute(BigRat(0), BigRat(-3), BigRat(1), BigRat(0));
  return image == f.scaled(BigRat(-27));
}

DescentStep cube_pair_descent_step(long x1, long x3) {
  if (std::gcd(x1, x3) != 1) throw NoRepresentation("x1 and x3 must be coprime");
  const BigInt a = BigInt(x1) + x3;
  if (a == 0) throw NoRepresentation("x1 + x3 = 0 is degenerate");
  const BigInt b = BigInt(x1) * x1 - BigInt(x1) * x3 + BigInt(x3) * x3;
  const BigInt total = a * b;
  if (total < 0 || total % 2 != 0 || !mpz_perfect_square_p(BigInt(total / 2).get_mpz_t()))
    throw NoRepresentation("x1^3 + x3^3 is not twice a square");
  for (long s : {1L, 3L}) {
    if (a % (2 * s) != 0 || b % s != 0) continue;
    auto u = exact::int_kth_root(BigInt(a / (2 * s)), 2);
    auto v = exact::int_kth_root(BigInt(b / s), 2);
    if (!u || !v) continue;
    DescentStep step{s, *u, *v, false};
    if (s == 3) {
      long rhs = ((3 * x1 % 9 * x1 % 9 * x1 - x3 % 9 * x3 % 9 * x3) % 9 + 9) % 9;
      bool hit = false;
      for (long x0 = 0; x0 < 9; ++x0)
        if (2 * x0 * x0 * x0 % 9 == rhs) hit = true;
      step.excluded_mod9 = !hit;
    }
    return step;
  }
  throw NoRepresentation("no factorization data with s dividing 3");
}

std::uint64_t mod4_obstruction_count() {
  std::uint64_t count = 0;
  for (int x0 = 0; x0 < 4; ++x0)
    for (int x1 = 0; x1 < 4; ++x1)
      for (int x2 = 0; x2 < 4; ++x2)
        for (int x3 = 0; x3 < 4; ++x3) {
          if ((x1 * x2) % 2 != 0) continue;
          const int h[4] = {x0 * x0 % 4, x1 * x1 * x1 % 4, x2 * x2 * x2 % 4, x3 * x3 % 4};
          if ((h[0] - 2 * h[1] + h[2]) % 4 != 0 || (h[1] - 2 * h[2] + h[3]) % 4 != 0) continue;
          bool coprime_pairs = true;
          for (int i = 0; i < 3; ++i)
            if (h[i] % 2 == 0 && h[i + 1] % 2 == 0) coprime_pairs = false;
          if (coprime_pairs) ++count;
        }
  return count;
}

}  // namespace apforge::curve
