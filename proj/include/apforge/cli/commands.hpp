#pragma once

// The subcommands as library calls; the executable only parses flags.

#include "apforge/cli/report.hpp"
#include "apforge/corpus/cases.hpp"
#include "apforge/corpus/corpus.hpp"
#include "apforge/search/search.hpp"

#include <optional>
#include <string>
#include <vector>

namespace apforge::cli {

/// Identity check per branch; with bound > 0 also a cover check per family.
/// Unknown family ids throw std::invalid_argument.
RunReport cmd_verify_lemma(const corpus::Corpus& corpus, const std::optional<std::string>& family, long bound);

/// Throws search::ResourceLimit past the iteration ceiling.
RunReport cmd_search(const search::SearchConfig& cfg);
RunReport cmd_search_theorem3(long bound_squares, long bound_cubes);
RunReport cmd_search_cubic_twin(long bound, bool diagonal_only);

/// filter: empty or "all" for every case plus the polynomial families.
RunReport cmd_cases(const corpus::Corpus& corpus, const std::string& filter, const corpus::CaseOptions& options);

RunReport cmd_genus_scan(unsigned k, unsigned max_l);
RunReport cmd_genus_vector(unsigned k, const std::vector<unsigned>& lvec);
RunReport cmd_genus_chi(unsigned r, unsigned s, unsigned t);

/// Stamps corpus version and hash.
void stamp(RunReport& report, const corpus::Corpus& corpus);

}  // namespace apforge::cli
