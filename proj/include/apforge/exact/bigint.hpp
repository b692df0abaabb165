#pragma once

// Arbitrary-precision integers and rationals (GMP-backed) plus the
// exact root extraction used by every layer above.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace apforge::exact {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// r with r^k == n, or nullopt. Odd k allows negative n (root is negative).
/// Integer Newton iteration followed by an exact check.
std::optional<BigInt> int_kth_root(const BigInt& n, unsigned k);

/// k-th root of a rational in lowest terms: both numerator and denominator
/// must be exact k-th powers.
std::optional<BigRat> rat_kth_root(const BigRat& q, unsigned k);

/// Parses "17", "-3", "57/4". Throws std::invalid_argument on malformed input.
BigRat parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

std::string to_string(const BigInt& n);
std::string to_string(const BigRat& q);

inline bool is_integer(const BigRat& q) { return q.get_den() == 1; }

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long e);
BigRat pow(const BigRat& base, unsigned long e);

/// v_p(n) for n != 0.
unsigned valuation(const BigInt& n, const BigInt& p);

// Ring hooks consumed by the polynomial templates. Number-field elements
// provide the same three functions in their own namespace.
inline bool is_zero(const BigRat& x) { return sgn(x) == 0; }
inline BigRat zero_like(const BigRat&) { return BigRat(0); }
inline BigRat one_like(const BigRat&) { return BigRat(1); }

}  // namespace apforge::exact
