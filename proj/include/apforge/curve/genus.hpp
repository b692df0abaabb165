#pragma once

// Genus classification of the covers attached to progressions of powers.

#include "apforge/exact/bigint.hpp"

#include <string>
#include <vector>

namespace apforge::curve {

enum class GenusBound { AllGenusLE1Possible, GenusAtLeast2 };

struct GenusVerdict {
  GenusBound bound;
  exact::BigRat deficiency;  // k-2 - sum 1/l_i for k >= 4; 1 - chi for k = 3
};

/// k in {3, 4, 5}, exponents >= 2, lvec.size() == k.
GenusVerdict rh_genus_bound(unsigned k, const std::vector<unsigned>& lvec);

enum class ChiClass { GenusZero, GenusOne, GenusGT1 };

struct ChiVerdict {
  ChiClass kind;
  exact::BigRat chi;
  exact::BigRat degree;  // 2/chi, meaningful for GenusZero only
};

ChiVerdict chi_classify(unsigned r, unsigned s, unsigned t);

std::string to_string(GenusBound b);
std::string to_string(ChiClass c);

}  // namespace apforge::curve
