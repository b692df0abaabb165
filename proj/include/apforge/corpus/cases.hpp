#pragma once

// Replays a case derivation from the corpus and evaluates its typed facts.

#include "apforge/cli/report.hpp"
#include "apforge/corpus/corpus.hpp"
#include "apforge/curve/elliptic.hpp"
#include "apforge/curve/hyper_curve.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace apforge::corpus {

class DerivationMismatch : public std::runtime_error {
 public:
  DerivationMismatch(const std::string& where, std::string diff)
      : std::runtime_error(where + ": derived form differs from the corpus\n" + diff), diff_(std::move(diff)) {}
  const std::string& diff() const { return diff_; }

 private:
  std::string diff_;
};

using CaseTarget = std::variant<curve::HyperCurve, curve::RationalElliptic, BinaryForm>;

struct Derivation {
  std::map<std::string, BinaryForm> values;
  /// The form named by the curve entry, before any chart is applied.
  BinaryForm source{std::vector<BigRat>{BigRat(0)}};
  /// Univariate model after the chart (descending); empty for kind "form".
  std::vector<BigRat> model;
  std::vector<cli::CheckRecord> records;  // steps with an expect, AP checks, the curve
  bool ok() const;
};

/// Runs the step script. Mismatches become failing records; malformed
/// scripts throw CorpusError.
Derivation derive_case_records(const Corpus& corpus, const CaseRecord& c);

/// Same script, but the first mismatch throws DerivationMismatch. Returns
/// the target curve or form.
CaseTarget derive_case(const Corpus& corpus, const CaseRecord& c);

/// Applies "dehomogenize", "even_y" and "scale r" in order; descending output.
std::vector<BigRat> apply_chart(const BinaryForm& f, const std::vector<std::string>& chart);

struct CaseOptions {
  std::optional<long> height;         // overrides every points fact
  std::optional<long> local_primes;   // overrides primes_up_to
  std::vector<long> extra_primes;     // extra Jacobian orders, Weil-checked
};

/// Derivation records, then one record per fact, then one unchecked-claim
/// record per claim. Never throws for mathematical failures.
std::vector<cli::CheckRecord> run_case(const Corpus& corpus, const CaseRecord& c, const CaseOptions& options = {});

/// Symbolic AP check plus a spot grid for each polynomial family.
std::vector<cli::CheckRecord> run_poly_families(const Corpus& corpus);

}  // namespace apforge::corpus
