#include "apforge/param/family.hpp"
#include "apforge/search/poly_family.hpp"
#include "apforge/search/search.hpp"

#include "doctest.h"

#include <numeric>
#include <random>

using namespace apforge::param;
using namespace apforge::search;
using apforge::exact::BigRat;
using apforge::exact::form_from_ints;

namespace {

Branch br(std::vector<long> a, std::vector<long> b) { return {form_from_ints(a), form_from_ints(b), std::nullopt}; }

std::vector<ParamFamily> families() {
  std::vector<ParamFamily> f;
  f.push_back({"i", -1, 2, 1, 3, {br({1, 0, 6, 0}, {0, 3, 0, 2}), br({1, 6, 6, 4}, {1, 3, 6, 2})}});
  f.push_back({"ii", 1, 1, 2, 3, {br({1, -3, -3, 1}, {1, 3, -3, -1})}});
  f.push_back({"iii", 1, 2, 3, 3, {br({1, -6, -6, 4}, {1, 3, -6, -2})}});
  f.push_back({"iv", -1, 3, 2, 3, {br({1, 9, 9, 9}, {1, 3, 9, 3}), br({5, 27, 45, 27}, {3, 15, 27, 15})}});
  f.push_back({"v", -2, 3, 1, 3, {br({1, 9, 18, 18}, {1, 6, 18, 12}), br({11, 81, 198, 162}, {9, 66, 162, 132})}});
  f.push_back({"vi", 1, 1, 2, 2, {br({1, -2, -1}, {1, 2, -1})}});
  f.push_back({"vii", 2, 1, 3, 2, {br({1, 2, -2}, {1, -4, -2})}});
  ParamFamily viii{"viii", 1, 3, 1, 2,
                   {{apforge::exact::form_from_strings({"1/2", "0", "-3/2"}), form_from_ints({0, 1, 0}), std::nullopt}}};
  viii.same_parity = true;
  f.push_back(viii);
  return f;
}

const ParamFamily& family(const std::string& id) {
  static const auto all = families();
  for (const auto& f : all)
    if (f.id == id) return f;
  throw std::out_of_range(id);
}

}  // namespace

TEST_CASE("parametrization identities") {
  std::size_t branches = 0;
  for (const auto& f : families())
    for (unsigned b = 1; b <= f.branches.size(); ++b) {
      INFO(f.id << " branch " << b);
      auto rep = param_verify_identity(f, b);
      CHECK(rep.holds);
      ++branches;
    }
  CHECK(branches == 11);
  CHECK(*param_verify_identity(family("i"), 1).derived_c == form_from_ints({-1, 0, 2}));
  CHECK(*param_verify_identity(family("ii"), 1).derived_c == form_from_ints({1, 0, 1}));
  CHECK(*param_verify_identity(family("viii"), 1).derived_c == apforge::exact::form_from_strings({"1/2", "0", "3/2"}));
}

TEST_CASE("pinned c-forms are compared") {
  ParamFamily f = family("ii");
  f.branches[0].c_pinned = form_from_ints({1, 0, 2});
  auto rep = param_verify_identity(f, 1);
  CHECK_FALSE(rep.holds);
  CHECK(rep.detail.find("differs") != std::string::npos);
  f.branches[0].c_pinned = form_from_ints({1, 0, 1});
  CHECK(param_verify_identity(f, 1).holds);
}

TEST_CASE("param_eval examples") {
  auto s = param_eval(family("i"), 1, 1, 1, 1, 1);
  CHECK(s == TernarySolution{7, 5, 1});
  CHECK(param_eval(family("vi"), 1, 1, 1, 2, 1) == TernarySolution{-1, 7, 5});
  CHECK(param_eval(family("viii"), 1, 1, 1, 1, 1) == TernarySolution{-1, 1, 2});
  CHECK_THROWS_AS(param_eval(family("viii"), 1, 1, 1, 1, 2), IntegralityViolation);
  CHECK_THROWS_AS(param_eval(family("ii"), 2, 1, 1, 1, 2), std::out_of_range);
  CHECK_THROWS_AS(param_eval(family("ii"), 1, 2, 1, 1, 2), std::invalid_argument);
}

TEST_CASE("param_eval satisfies the equation on random input") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-60, 60);
  for (const auto& f : families()) {
    for (int trial = 0; trial < 10000; ++trial) {
      long x = d(rng), y = d(rng);
      if (f.same_parity && (x - y) % 2 != 0) ++x;
      const unsigned b = 1 + static_cast<unsigned>(trial % f.branches.size());
      const int sa = trial % 3 ? 1 : -1, sb = trial % 5 ? 1 : -1;
      auto s = param_eval(f, b, sa, sb, x, y);
      const BigInt lhs = f.A * s.a * s.a + f.B * s.b * s.b;
      if (lhs != f.C * apforge::exact::pow(s.c, f.k)) {
        FAIL(f.id << " x=" << x << " y=" << y);
        break;
      }
    }
  }
}

TEST_CASE("gcd of family i values stays small") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-500, 500);
  for (int trial = 0; trial < 2000; ++trial) {
    const long x = d(rng), y = d(rng);
    if (std::gcd(x, y) != 1) continue;
    for (unsigned b = 1; b <= 2; ++b) {
      auto s = param_eval(family("i"), b, 1, 1, x, y);
      CHECK(BigInt(8) % apforge::exact::gcd(s.a, s.b) == 0);
    }
  }
}

TEST_CASE("cover check at bound 200") {
  const std::vector<std::pair<std::string, std::size_t>> expected{{"i", 23},   {"ii", 9},   {"iii", 9},  {"iv", 11},
                                                                  {"v", 13},   {"vi", 51},  {"vii", 53}, {"viii", 81}};
  for (const auto& [id, count] : expected) {
    INFO(id);
    auto rep = param_cover_check(family(id), 200);
    CHECK(rep.solutions == count);
    CHECK(rep.unmatched.empty());
    if (id == "viii") {
      CHECK(rep.opposite_convention.size() == 41);
      CHECK(rep.matched + rep.opposite_convention.size() == count);
    } else {
      CHECK(rep.opposite_convention.empty());
      CHECK(rep.matched == count);
    }
  }
  CHECK(param_cover_check(family("iii"), 50).unmatched.empty());
  CHECK_THROWS(param_cover_check(family("i"), 501));
  CHECK(cover_radius(family("i"), 200) == 13);
  CHECK(cover_radius(family("vi"), 200) == 27);
}

TEST_CASE("cover check agrees with the reference") {
  for (const auto& f : families()) {
    INFO(f.id);
    auto a = param_cover_check(f, 60);
    auto b = param_cover_check_reference(f, 60);
    CHECK(a.solutions == b.solutions);
    CHECK(a.matched == b.matched);
    CHECK(a.opposite_convention.size() == b.opposite_convention.size());
    CHECK(a.unmatched.size() == b.unmatched.size());
  }
}

TEST_CASE("is_power_value") {
  CHECK(*is_power_value(64, 2) == 8);
  CHECK(*is_power_value(64, 3) == 4);
  CHECK(*is_power_value(5329, 2) == 73);
  CHECK(*is_power_value(-27, 3) == -3);
  CHECK_FALSE(is_power_value(-4, 2));
  CHECK_FALSE(is_power_value(65, 2));
  CHECK(*is_power_value(0, 5) == 0);
}

TEST_CASE("sieve never rejects a power") {
  const auto& s = PowerSieve::instance();
  for (unsigned l = 2; l <= 7; ++l) {
    for (long x = -2000; x <= 2000; ++x) {
      BigInt v = apforge::exact::pow(BigInt(x), l);
      if (l % 2 == 0 && x < 0) continue;
      CHECK(*is_power_value(v, l) == (l % 2 == 0 ? BigInt(std::abs(x)) : BigInt(x)));
      const long r = static_cast<long>(mpz_fdiv_ui(v.get_mpz_t(), PowerSieve::modulus));
      if (!s.admits_residue(static_cast<std::uint32_t>(r), l)) FAIL("rejected " << x << "^" << l);
    }
  }
  // squares and cubes are the exponents the desk searches use
  CHECK(s.density(2) < 0.05);
  CHECK(s.density(3) < 0.05);
}

TEST_CASE("twist sets") {
  CHECK(twist_set({}, 3, 1000000) == std::vector<BigInt>{1});
  CHECK(twist_set({}, 2, 1000000) == std::vector<BigInt>{1, -1});
  CHECK(twist_set({73}, 2, 1000000, false) == std::vector<BigInt>{1, 73});
  CHECK(twist_set({2, 3}, 3, 1000000, false) == std::vector<BigInt>{1, 2, 3, 4, 6, 9, 12, 18, 36});
  CHECK(twist_set({2}, 3, 3, false) == std::vector<BigInt>{1, 2});
}

TEST_CASE("small desk search") {
  auto r = search_theorem3(1, 1);
  REQUIRE(r.size() == 17);
  for (const auto& p : r) {
    CHECK(p.is_constant());
    CHECK(abs(p.terms[0].h) == 1);
    CHECK(p.valid());
  }
  auto big = search_theorem3(300, 60);
  CHECK(big.size() == 17);
  CHECK_THROWS(search_theorem3(0, 1));
}

TEST_CASE("filtered and unfiltered searches agree") {
  auto cfg = theorem3_config(200, 40);
  auto a = search_general(cfg);
  cfg.use_sieve = false;
  auto b = search_general(cfg);
  CHECK(a == b);
  CHECK(a == search_general_reference(cfg));

  SearchConfig g;
  g.k = 3;
  g.max_l = 3;
  g.default_bound = 40;
  auto c = search_general(g);
  g.use_sieve = false;
  CHECK(c == search_general(g));
  CHECK(c == search_general_reference(g));
}

TEST_CASE("three-term progressions exist") {
  SearchConfig g;
  g.k = 3;
  g.max_l = 3;
  g.default_bound = 100;
  auto r = search_general(g);
  bool found = false;
  for (const auto& p : r)
    if (p.values() == std::vector<BigInt>{1, 25, 49}) found = true;
  CHECK(found);
  for (const auto& p : r) CHECK(p.valid());
}

TEST_CASE("search output is canonical and symmetric") {
  SearchConfig g;
  g.k = 3;
  g.max_l = 3;
  g.default_bound = 60;
  g.negative_twists = false;
  auto r = search_general(g);
  CHECK(std::is_sorted(r.begin(), r.end(), canonical_less));
  for (const auto& p : r) {
    Progression rev;
    rev.terms.assign(p.terms.rbegin(), p.terms.rend());
    rev.n = rev.terms[1].h - rev.terms[0].h;
    CHECK(std::find(r.begin(), r.end(), rev) != r.end());
    bool odd = true;
    for (const auto& t : p.terms) odd = odd && t.l % 2 == 1;
    if (!odd) continue;
    Progression neg = p;
    for (auto& t : neg.terms) {
      t.x = -t.x;
      t.h = -t.h;
    }
    neg.n = -neg.n;
    CHECK(std::find(r.begin(), r.end(), neg) != r.end());
  }
}

TEST_CASE("twisted search finds the 73 example") {
  SearchConfig g;
  g.k = 4;
  g.max_l = 2;
  g.primes = {73};
  g.default_bound = 100;
  auto r = search_general(g);
  bool found = false;
  for (const auto& p : r) {
    if (p.is_constant()) continue;
    if (p.terms[3].eta == 73 && p.terms[0].eta == 1 && p.terms[1].eta == 1 && p.terms[2].eta == 1) found = true;
  }
  CHECK(found);
}

TEST_CASE("five squares") {
  SearchConfig g;
  g.k = 5;
  g.max_l = 2;
  g.default_bound = 200;
  auto r = search_general(g);
  REQUIRE(!r.empty());
  for (const auto& p : r) {
    CHECK(p.is_constant());
    CHECK(abs(p.terms[0].h) == 1);
  }
}

TEST_CASE("resource ceiling") {
  SearchConfig g;
  g.iteration_ceiling = 1000;
  CHECK_THROWS_AS(search_general(g), ResourceLimit);
  CHECK_THROWS_AS(search_general_reference(g), ResourceLimit);
  g.k = 2;
  CHECK_THROWS_AS(search_general(g), std::invalid_argument);
}

TEST_CASE("cubic twin") {
  const std::vector<CubicTwin> trivial{{-1, -1, -1}, {1, 1, 1}};
  CHECK(search_cubic_twin(1) == trivial);
  CHECK(search_cubic_twin(100, true) == trivial);
  CHECK(search_cubic_twin(150) == trivial);
}

TEST_CASE("polynomial families are progressions") {
  CHECK(verify_poly_families());
  for (const auto& f : builtin_poly_families()) {
    auto rep = check_poly_family(f);
    INFO(f.id);
    CHECK(rep.symbolic);
    CHECK(rep.spot_failures == 0);
    CHECK(rep.spot_checks == 169);
  }
  auto f = builtin_poly_families()[0];
  std::vector<BigInt> h;
  for (const auto& t : f.terms()) h.push_back(t.eval(BigRat(2), BigRat(1)).get_num());
  CHECK(h == std::vector<BigInt>{5329, 133225, 261121, 389017});
  CHECK(h[1] - h[0] == 127896);
  for (const auto& t : f.terms()) CHECK(t.eval(BigRat(1), BigRat(0)) == 1);
  auto broken = f;
  broken.exponents[3] = 2;
  CHECK_FALSE(check_poly_family(broken).ok());
}
