#include "apforge/exact/int128.hpp"

#include <stdexcept>

namespace apforge::exact {

i128 to_i128(const BigInt& n) {
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > 125) throw std::overflow_error("value exceeds 126-bit kernel range");
  BigInt m = abs(n);
  BigInt hi = m >> 64;
  BigInt lo = m - (hi << 64);
  u128 v = (static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui());
  i128 r = static_cast<i128>(v);
  return n < 0 ? -r : r;
}

namespace {

// |x|^l compared to target without overflow: returns -1, 0, 1.
int compare_power(u128 x, unsigned l, u128 target) {
  u128 acc = 1;
  for (unsigned i = 0; i < l; ++i) {
    if (x != 0 && acc > target / x) return 1;
    acc *= x;
  }
  return acc < target ? -1 : (acc == target ? 0 : 1);
}

}  // namespace

std::optional<std::int64_t> exact_root128(i128 h, unsigned l) {
  if (l == 0) return std::nullopt;
  if (l == 1) {
    if (h > INT64_MAX || h < INT64_MIN) return std::nullopt;
    return static_cast<std::int64_t>(h);
  }
  const bool neg = h < 0;
  if (neg && l % 2 == 0) return std::nullopt;
  const u128 m = static_cast<u128>(neg ? -h : h);
  if (m <= 1) return static_cast<std::int64_t>(neg ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m));
  long double est = l == 2 ? std::sqrt(static_cast<long double>(m))
                           : (l == 3 ? std::cbrt(static_cast<long double>(m))
                                     : std::pow(static_cast<long double>(m), 1.0L / l));
  auto r = static_cast<u128>(est + 0.5L);
  if (r == 0) r = 1;
  // The estimate is within a few units; walk to the exact floor root.
  while (r > 1 && compare_power(r, l, m) > 0) --r;
  while (compare_power(r + 1, l, m) <= 0) ++r;
  if (compare_power(r, l, m) != 0) return std::nullopt;
  auto x = static_cast<std::int64_t>(r);
  return neg ? -x : x;
}

}  // namespace apforge::exact
