#pragma once

// Polynomial families of non-primitive progressions: term i is base_i(u, v)
// raised to exponent l_i, and consecutive differences agree as forms.

#include "apforge/exact/binary_form.hpp"

#include <string>
#include <vector>

namespace apforge::search {

struct PolyFamily {
  std::string id;  // exponent vector, e.g. "2223"
  std::vector<unsigned> exponents;
  std::vector<exact::BinaryForm> bases;

  std::vector<exact::BinaryForm> terms() const;
};

struct PolyFamilyCheck {
  std::string id;
  bool symbolic = false;
  std::size_t spot_checks = 0;
  std::size_t spot_failures = 0;
  std::string difference;  // the common difference, rendered
  bool ok() const { return symbolic && spot_failures == 0; }
};

std::vector<PolyFamily> builtin_poly_families();

/// Symbolic AP test plus evaluation at every (u, v) with |u|, |v| <= spot.
PolyFamilyCheck check_poly_family(const PolyFamily& family, long spot = 6);

bool verify_poly_families();

}  // namespace apforge::search
