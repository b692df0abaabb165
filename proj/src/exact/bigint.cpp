#include "apforge/exact/bigint.hpp"

#include <stdexcept>

namespace apforge::exact {

namespace {

// floor(n^(1/k)) for n >= 0, k >= 2.
BigInt floor_root(const BigInt& n, unsigned k) {
  if (n < 2) return n;
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  // 2^ceil(bits/k) is an upper bound for the root.
  BigInt x = BigInt(1) << static_cast<mp_bitcnt_t>((bits + k - 1) / k);
  while (true) {
    BigInt xk1 = pow(x, k - 1);
    BigInt y = ((k - 1) * x + n / xk1) / k;
    if (y >= x) break;
    x = y;
  }
  return x;
}

}  // namespace

std::optional<BigInt> int_kth_root(const BigInt& n, unsigned k) {
  if (k == 0) throw std::invalid_argument("int_kth_root: k must be positive");
  if (k == 1) return n;
  if (n < 0) {
    if (k % 2 == 0) return std::nullopt;
    auto r = int_kth_root(-n, k);
    if (!r) return std::nullopt;
    return BigInt(-*r);
  }
  BigInt r = floor_root(n, k);
  if (pow(r, k) != n) return std::nullopt;
  return r;
}

std::optional<BigRat> rat_kth_root(const BigRat& q, unsigned k) {
  auto num = int_kth_root(q.get_num(), k);
  if (!num) return std::nullopt;
  auto den = int_kth_root(q.get_den(), k);
  if (!den) return std::nullopt;
  BigRat r(*num, *den);
  r.canonicalize();
  return r;
}

BigRat parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  BigRat q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  BigInt n;
  if (s.empty() || n.set_str(s, 10) != 0) throw std::invalid_argument("malformed integer literal: " + s);
  return n;
}

std::string to_string(const BigInt& n) { return n.get_str(10); }
std::string to_string(const BigRat& q) { return q.get_str(10); }

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigRat pow(const BigRat& base, unsigned long e) {
  BigRat r(pow(BigInt(base.get_num()), e), pow(BigInt(base.get_den()), e));
  r.canonicalize();
  return r;
}

unsigned valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw std::domain_error("valuation of zero");
  BigInt m = abs(n);
  unsigned v = 0;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace apforge::exact
