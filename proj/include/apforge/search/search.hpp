#pragma once

// Enumeration of primitive progressions h_i = eta_i x_i^l_i. The outer loop
// runs over pairs (x0, x1); every later term is tested for being a twisted
// power after a residue sieve modulo 720720.

#include "apforge/exact/bigint.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apforge::search {

using exact::BigInt;

class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PowerTerm {
  BigInt x;
  unsigned l;
  BigInt eta;
  BigInt h;  // eta * x^l
  friend bool operator==(const PowerTerm&, const PowerTerm&) = default;
};

struct Progression {
  std::vector<PowerTerm> terms;
  BigInt n;  // h1 - h0

  std::vector<unsigned> exponents() const;
  std::vector<BigInt> values() const;
  /// Terms agree with eta x^l and have constant difference n.
  bool valid() const;
  bool is_constant() const;
  friend bool operator==(const Progression&, const Progression&) = default;
};

/// Exponent vector, then h0, h1, then the remaining fields.
bool canonical_less(const Progression& a, const Progression& b);
std::string to_string(const Progression& p);

/// l-th power residue tables modulo 720720 for l = 2..7.
class PowerSieve {
 public:
  static constexpr std::uint32_t modulus = 720720;
  static const PowerSieve& instance();
  bool admits(std::int64_t residue_source, unsigned l) const;
  bool admits_residue(std::uint32_t r, unsigned l) const { return bits_[l - 2][r]; }
  double density(unsigned l) const;

 private:
  PowerSieve();
  std::vector<std::vector<bool>> bits_;
};

/// x with x^l = h: negative h only for odd l; even l gives x >= 0.
std::optional<BigInt> is_power_value(const BigInt& h, unsigned l);

struct SearchConfig {
  unsigned k = 4;
  unsigned min_l = 2;
  unsigned max_l = 3;
  /// |x| bound per exponent; index l. Missing entries use default_bound.
  std::vector<long> bound_by_l;
  long default_bound = 1000;
  /// gcd(h0, h1) <= D; nullopt disables the condition.
  std::optional<long> max_gcd = 1;
  std::vector<long> primes;  // S
  long eta_cap = 1000000;
  /// Only vectors with this prefix/pattern; empty = all.
  std::vector<unsigned> exponent_filter;
  /// Estimated inner iterations allowed before ResourceLimit.
  double iteration_ceiling = 2e10;
  bool use_sieve = true;
  /// -eta joins the twist set for even l.
  bool negative_twists = true;

  long bound_for(unsigned l) const;
};

/// l-th-power-free S-units of absolute value <= cap; -eta is added for even l.
std::vector<BigInt> twist_set(const std::vector<long>& primes, unsigned l, long cap);
std::vector<BigInt> twist_set(const std::vector<long>& primes, unsigned l, long cap, bool negative);

/// Estimated number of (x0, x1) pairs visited.
double estimate_iterations(const SearchConfig& cfg);

/// Parallel sieved search, canonical output order.
std::vector<Progression> search_general(const SearchConfig& cfg);
/// Serial search on big integers without the sieve.
std::vector<Progression> search_general_reference(const SearchConfig& cfg);

/// k = 4, exponents in {2, 3}, eta = 1, gcd(h0, h1) = 1.
SearchConfig theorem3_config(long bound_squares, long bound_cubes);
std::vector<Progression> search_theorem3(long bound_squares, long bound_cubes);

struct CubicTwin {
  long x, y, z;
  friend bool operator==(const CubicTwin&, const CubicTwin&) = default;
  friend auto operator<=>(const CubicTwin&, const CubicTwin&) = default;
};

/// Coprime nonzero x^3 + y^3 = 2 z^3 with |x|, |y|, |z| <= bound.
std::vector<CubicTwin> search_cubic_twin(long bound, bool diagonal_only = false);

}  // namespace apforge::search
