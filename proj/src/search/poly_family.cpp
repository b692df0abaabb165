#include "apforge/search/poly_family.hpp"

#include "apforge/exact/bigint.hpp"

namespace apforge::search {

using exact::BigRat;
using exact::BinaryForm;
using exact::form_from_ints;

std::vector<BinaryForm> PolyFamily::terms() const {
  if (exponents.size() != bases.size()) throw std::invalid_argument("polynomial family " + id + ": size mismatch");
  std::vector<BinaryForm> t;
  for (std::size_t i = 0; i < bases.size(); ++i) t.push_back(bases[i].pow(exponents[i]));
  return t;
}

std::vector<PolyFamily> builtin_poly_families() {
  const BinaryForm f = form_from_ints({1, 8, 2, -8, 1});
  const BinaryForm g = form_from_ints({1, 4, 8, -8, 4});
  const BinaryForm one = form_from_ints({1});
  return {
      {"2223",
       {2, 2, 2, 3},
       {form_from_ints({1, -2, -1}) * f, form_from_ints({1, 0, 1}) * f, form_from_ints({1, 2, -1}) * f, f}},
      {"2232",
       {2, 2, 3, 2},
       {form_from_ints({1, -2, -2}) * g, form_from_ints({1, 0, 2}) * g, g, form_from_ints({1, 4, -2}) * g}},
  };
}

PolyFamilyCheck check_poly_family(const PolyFamily& family, long spot) {
  PolyFamilyCheck rep;
  rep.id = family.id;
  const auto t = family.terms();
  if (t.size() < 3) throw std::invalid_argument("polynomial family needs three terms");
  bool same_degree = true;
  for (const auto& term : t) same_degree = same_degree && term.degree() == t[0].degree();
  if (same_degree) {
    const BinaryForm d = t[1] - t[0];
    rep.symbolic = true;
    for (std::size_t i = 2; i < t.size(); ++i) rep.symbolic = rep.symbolic && (t[i] - t[i - 1]) == d;
    rep.difference = exact::form_to_string(d);
  }
  for (long u = -spot; u <= spot; ++u)
    for (long v = -spot; v <= spot; ++v) {
      ++rep.spot_checks;
      std::vector<BigRat> h;
      for (std::size_t i = 0; i < t.size(); ++i) {
        const BigRat base = family.bases[i].eval(BigRat(u), BigRat(v));
        h.push_back(exact::pow(base, family.exponents[i]));
        if (h.back() != t[i].eval(BigRat(u), BigRat(v))) ++rep.spot_failures;
      }
      for (std::size_t i = 2; i < h.size(); ++i)
        if (h[i] - h[i - 1] != h[1] - h[0]) {
          ++rep.spot_failures;
          break;
        }
    }
  return rep;
}

bool verify_poly_families() {
  for (const auto& f : builtin_poly_families())
    if (!check_poly_family(f).ok()) return false;
  return true;
}

}  // namespace apforge::search
