#pragma once

// Fixed-width helpers for the hot search kernels. Values that may leave the
// 127-bit range must go through BigInt instead; callers check magnitudes.

#include "apforge/exact/bigint.hpp"

#include <cmath>
#include <cstdint>
#include <optional>

namespace apforge::exact {

using i128 = __int128;
using u128 = unsigned __int128;

inline BigInt to_bigint(i128 v) {
  const bool neg = v < 0;
  u128 m = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  BigInt hi = static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64));
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(m));
  BigInt r = (hi << 64) + lo;
  return neg ? BigInt(-r) : r;
}

/// Throws std::overflow_error when |n| >= 2^126.
i128 to_i128(const BigInt& n);

inline i128 abs128(i128 v) { return v < 0 ? -v : v; }

inline u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline std::uint64_t gcd64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// floor(sqrt(n)) for 0 <= n < 2^126.
inline std::uint64_t isqrt128(u128 n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

/// x with x^l == h exactly, |x| < 2^63; even l demands h >= 0 and returns x >= 0.
std::optional<std::int64_t> exact_root128(i128 h, unsigned l);

}  // namespace apforge::exact
