#include "apforge/curve/genus.hpp"

#include <stdexcept>

namespace apforge::curve {

using exact::BigRat;

namespace {

void require_exponents(const std::vector<unsigned>& lvec) {
  for (unsigned l : lvec)
    if (l < 2) throw std::invalid_argument("exponents must be at least 2");
}

BigRat reciprocal_sum(const std::vector<unsigned>& lvec) {
  BigRat s = 0;
  for (unsigned l : lvec) s += BigRat(1, l);
  return s;
}

}  // namespace

GenusVerdict rh_genus_bound(unsigned k, const std::vector<unsigned>& lvec) {
  if (k < 3 || k > 5) throw std::invalid_argument("k must be 3, 4 or 5");
  if (lvec.size() != k) throw std::invalid_argument("exponent vector length must equal k");
  require_exponents(lvec);
  if (k == 3) {
    ChiVerdict v = chi_classify(lvec[0], lvec[1], lvec[2]);
    BigRat def = 1 - v.chi;
    return {v.kind == ChiClass::GenusGT1 ? GenusBound::GenusAtLeast2 : GenusBound::AllGenusLE1Possible, def};
  }
  BigRat def = BigRat(static_cast<long>(k) - 2) - reciprocal_sum(lvec);
  return {sgn(def) > 0 ? GenusBound::GenusAtLeast2 : GenusBound::AllGenusLE1Possible, def};
}

ChiVerdict chi_classify(unsigned r, unsigned s, unsigned t) {
  require_exponents({r, s, t});
  BigRat chi = reciprocal_sum({r, s, t});
  if (chi > 1) return {ChiClass::GenusZero, chi, BigRat(2) / chi};
  if (chi == 1) return {ChiClass::GenusOne, chi, BigRat(0)};
  return {ChiClass::GenusGT1, chi, BigRat(0)};
}

std::string to_string(GenusBound b) {
  return b == GenusBound::GenusAtLeast2 ? "GenusAtLeast2" : "AllGenusLE1Possible";
}

std::string to_string(ChiClass c) {
  switch (c) {
    case ChiClass::GenusZero: return "GenusZero";
    case ChiClass::GenusOne: return "GenusOne";
    case ChiClass::GenusGT1: return "GenusGT1";
  }
  return "?";
}

}  // namespace apforge::curve
