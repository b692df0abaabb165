#include "apforge/exact/uni_poly.hpp"

namespace apforge::exact {

RatPoly rat_poly_desc(const std::vector<std::string>& descending) {
  std::vector<BigRat> c;
  c.reserve(descending.size());
  for (const auto& s : descending) c.push_back(parse_rational(s));
  return RatPoly::from_descending(std::move(c));
}

}  // namespace apforge::exact
