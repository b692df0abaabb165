#include "apforge/nf/number_field.hpp"

#include "doctest.h"

#include <random>

using namespace apforge::nf;
using apforge::exact::rat_poly_desc;

namespace {

FieldRef cbrt2() { return NumberField::create("Q(cbrt2)", rat_poly_desc({"1", "0", "0", "-2"})); }
FieldRef sqrt2() { return NumberField::create("Q(sqrt2)", rat_poly_desc({"1", "0", "-2"})); }
FieldRef sqrt3() { return NumberField::create("Q(sqrt3)", rat_poly_desc({"1", "0", "-3"})); }

std::vector<FieldRef> corpus_fields() {
  return {sqrt2(),
          NumberField::create("Q(i)", rat_poly_desc({"1", "0", "1"})),
          NumberField::create("Q(sqrt-2)", rat_poly_desc({"1", "0", "2"})),
          sqrt3(),
          NumberField::create("Q(sqrt6)", rat_poly_desc({"1", "0", "-6"})),
          cbrt2(),
          NumberField::create("quartic", rat_poly_desc({"1", "2", "0", "4", "2"})),
          NumberField::create("K4", rat_poly_desc({"1", "57/4", "39", "1"}))};
}

FieldElem random_elem(const FieldRef& k, std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<BigRat> c(k->degree());
  for (auto& v : c) {
    v = BigRat(d(rng), 1 + std::abs(d(rng)) % 4);
    v.canonicalize();
  }
  return FieldElem(k, c);
}

}  // namespace

TEST_CASE("cube root of two identities") {
  auto k = cbrt2();
  auto a = FieldElem::generator(k);
  auto one = FieldElem::one(k);
  CHECK((a - one) * (a + one).pow(3) == FieldElem::rational(k, 3));
  CHECK(nf_norm(a + one) == 3);
  CHECK(nf_norm(a - one) == 1);
  CHECK(a.pow(3) == FieldElem::rational(k, 2));
  CHECK(nf_inv(a) == a * a * BigRat(1, 2));
}

TEST_CASE("quadratic fields") {
  auto k = sqrt2();
  auto r = FieldElem::generator(k);
  auto one = FieldElem::one(k);
  CHECK((one + r) * (r - one) == one);
  CHECK(nf_inv(one + r) == r - one);
  CHECK(nf_norm(one + r) == -1);
  CHECK(nf_norm(FieldElem::rational(k, 3)) == 9);
  CHECK(nf_inv(one) == one);
  auto m2 = NumberField::create("Q(sqrt-2)", rat_poly_desc({"1", "0", "2"}));
  auto s = FieldElem::generator(m2);
  CHECK(-(s * s) == FieldElem::rational(m2, 2));
  CHECK_THROWS_AS(one + s, FieldMismatch);
  CHECK_THROWS_AS(nf_inv(FieldElem::zero(k)), std::domain_error);
}

TEST_CASE("S-unit tests on norms") {
  auto k = sqrt2();
  // 6 + 2*sqrt2 has norm 28; 7 is not in S
  CHECK_FALSE(nf_is_s_unit(FieldElem::parse(k, {"6", "2"}), {2, 3}));
  // 8 + 4*sqrt2 has norm 32
  CHECK(nf_is_s_unit(FieldElem::parse(k, {"8", "4"}), {2, 3}));
  CHECK(rational_is_s_unit(48, {2, 3}));
  CHECK_FALSE(rational_is_s_unit(-7, {2, 3}));
  CHECK(rational_is_s_unit(BigRat(-1, 6), {2, 3}));
}

TEST_CASE("square recovery") {
  auto k = sqrt2();
  auto r = nf_is_square(FieldElem::rational(k, 4));
  REQUIRE(r.status == SquareStatus::Square);
  CHECK((*r.root * *r.root) == FieldElem::rational(k, 4));
  auto u = FieldElem::parse(k, {"1", "1"});
  auto s = nf_is_square(u * u);
  REQUIRE(s.status == SquareStatus::Square);
  CHECK((*s.root == u || *s.root == -u));
  auto n = nf_is_square(FieldElem::rational(sqrt3(), 2));
  CHECK(n.status == SquareStatus::NotASquare);
  CHECK(nf_is_square(FieldElem::rational(k, 2)).status == SquareStatus::Square);
  CHECK_THROWS_AS(nf_is_square(FieldElem::zero(k)), std::domain_error);
}

TEST_CASE("random field properties") {
  std::mt19937_64 rng(11);
  for (const auto& k : corpus_fields()) {
    for (int trial = 0; trial < 40; ++trial) {
      auto a = random_elem(k, rng, 20);
      auto b = random_elem(k, rng, 20);
      CHECK(nf_norm(a * b) == nf_norm(a) * nf_norm(b));
      if (!a.is_zero()) CHECK(a * nf_inv(a) == FieldElem::one(k));
    }
    for (int trial = 0; trial < 8; ++trial) {
      auto b = random_elem(k, rng, 12);
      if (b.is_zero()) continue;
      auto r = nf_is_square(b * b);
      INFO(k->name(), " ", b.to_string(), " ", r.evidence);
      REQUIRE(r.status == SquareStatus::Square);
      CHECK((*r.root == b || *r.root == -b));
    }
  }
}
