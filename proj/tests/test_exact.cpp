#include "apforge/exact/binary_form.hpp"
#include "apforge/exact/int128.hpp"
#include "apforge/exact/uni_poly.hpp"

#include "doctest.h"

#include <random>

using namespace apforge::exact;

TEST_CASE("int_kth_root examples") {
  CHECK(int_kth_root(BigInt(389017), 3) == BigInt(73));
  CHECK(int_kth_root(BigInt(0), 5) == BigInt(0));
  CHECK(int_kth_root(BigInt(-8), 3) == BigInt(-2));
  CHECK_FALSE(int_kth_root(BigInt(-8), 2).has_value());
  CHECK_FALSE(int_kth_root(BigInt(389018), 3).has_value());
  CHECK(int_kth_root(BigInt(1), 7) == BigInt(1));
}

TEST_CASE("int_kth_root round trip over small bases") {
  for (unsigned k = 2; k <= 7; ++k) {
    for (long r = -1000; r <= 1000; ++r) {
      BigInt n = pow(BigInt(r), k);
      auto got = int_kth_root(n, k);
      REQUIRE(got.has_value());
      if (k % 2 == 0) CHECK(*got == abs(BigInt(r)));
      else CHECK(*got == BigInt(r));
      if (r > 1) CHECK_FALSE(int_kth_root(n + 1, k).has_value());
    }
  }
}

TEST_CASE("rational roots and parsing") {
  CHECK(parse_rational("57/4") == BigRat(57, 4));
  CHECK(parse_rational("-6/4") == BigRat(-3, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
  CHECK(rat_kth_root(BigRat(8, 27), 3) == BigRat(2, 3));
  CHECK_FALSE(rat_kth_root(BigRat(2, 9), 2).has_value());
  CHECK(valuation(BigInt(48), BigInt(2)) == 4);
}

TEST_CASE("int128 helpers") {
  CHECK(exact_root128(static_cast<i128>(389017), 3) == std::optional<std::int64_t>(73));
  CHECK(exact_root128(static_cast<i128>(-389017), 3) == std::optional<std::int64_t>(-73));
  CHECK_FALSE(exact_root128(static_cast<i128>(-4), 2).has_value());
  i128 big = static_cast<i128>(1000000007LL) * 1000000007LL;
  CHECK(exact_root128(big, 2) == std::optional<std::int64_t>(1000000007LL));
  CHECK_FALSE(exact_root128(big + 1, 2).has_value());
  CHECK(isqrt128(static_cast<u128>(big) - 1) == 1000000006ULL);
  CHECK(to_bigint(static_cast<i128>(-5)) == -5);
  CHECK(to_i128(BigInt("123456789012345678901234567")) == static_cast<i128>(123456789012345678LL) * 1000000000 + 901234567);
}

TEST_CASE("binary form arithmetic") {
  auto a = form_from_ints({1, 1});
  auto b = form_from_ints({1, -1});
  CHECK(form_mul(a, b) == form_from_ints({1, 0, -1}));
  auto g = form_from_ints({0, 3, 0, 2});  // 3x^2y + 2y^3
  CHECK(g.pow(2) == form_from_ints({0, 0, 9, 0, 12, 0, 4}));
  auto f = form_from_ints({1, 8, 2, -8, 1});
  CHECK(form_eval(f, 1, 0) == 1);
  CHECK(form_to_string(form_from_ints({1, 0, -1})) == "x^2 - y^2");
}

TEST_CASE("form_exact_root") {
  auto c = form_from_ints({-1, 0, 2});
  auto r = form_exact_root(c.pow(3), 3);
  REQUIRE(r.has_value());
  CHECK(*r == c);
  CHECK(form_exact_root(form_from_ints({1, 2, 1}), 2) == form_from_ints({1, 1}));
  CHECK_FALSE(form_exact_root(form_from_ints({1, 0, 0, 0, 0, 0, 1}), 3).has_value());
  CHECK_FALSE(form_exact_root(form_from_ints({1, 0, 1}), 2).has_value());
}

TEST_CASE("resultants") {
  RatPoly p(std::vector<BigRat>{-1, 1});
  RatPoly q(std::vector<BigRat>{1, 1});
  CHECK(uni_resultant(p, q) == 2);
  // (x-1)(x-2) and (x-2)(x+5) share a root
  RatPoly s = rat_poly_desc({"1", "-3", "2"});
  RatPoly t = rat_poly_desc({"1", "3", "-10"});
  CHECK(uni_resultant(s, t) == 0);
  CHECK(uni_resultant(s, rat_poly_desc({"1", "3", "-11"})) != 0);
}

TEST_CASE("form evaluation is multiplicative on random data") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-9, 9), deg(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<long> ca(deg(rng) + 1), cb(deg(rng) + 1);
    for (auto& c : ca) c = coef(rng);
    for (auto& c : cb) c = coef(rng);
    auto a = form_from_ints(ca);
    auto b = form_from_ints(cb);
    BigRat x(coef(rng), 1 + std::abs(coef(rng)));
    BigRat y(coef(rng), 1 + std::abs(coef(rng)));
    x.canonicalize();
    y.canonicalize();
    CHECK(form_eval(form_mul(a, b), x, y) == form_eval(a, x, y) * form_eval(b, x, y));
  }
}
