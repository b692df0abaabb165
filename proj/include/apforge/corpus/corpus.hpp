#pragma once

// The case corpus: fields, parametrization families, polynomial progression
// families and one derivation record per exponent case. Exact numbers are
// stored as decimal strings.

#include "apforge/exact/binary_form.hpp"
#include "apforge/nf/number_field.hpp"
#include "apforge/param/family.hpp"
#include "apforge/search/poly_family.hpp"

#include "json.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apforge::corpus {

using exact::BigRat;
using exact::BinaryForm;

class CorpusError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SumTerm {
  BigRat coef;
  std::vector<std::string> factors;
};

struct Step {
  enum class Kind { Literal, Family, Sum, Progression };
  Kind kind = Kind::Literal;
  std::string let;
  std::optional<BinaryForm> literal;
  std::string family;
  unsigned branch = 1;
  char part = 'a';
  std::vector<SumTerm> terms;
  std::vector<std::string> progression;  // names whose values must be in AP
  std::optional<BinaryForm> expect;
};

struct CurveEntry {
  std::string from;
  std::vector<std::string> chart;  // "dehomogenize", "even_y", "scale r"
  std::string kind;                // "hyper", "elliptic" or "form"
  std::string label;
  std::vector<BigRat> expect;  // descending coefficients
};

struct CaseRecord {
  std::string id;
  std::vector<unsigned> exponents;
  std::vector<std::string> aliases;
  std::vector<std::string> families;
  std::string title;
  std::vector<Step> steps;
  CurveEntry curve;
  nlohmann::json facts = nlohmann::json::array();
  std::vector<std::string> claims;

  /// id, id without its letter suffix, or an alias.
  bool matches(const std::string& filter) const;
};

struct Corpus {
  std::string version;
  std::string hash;    // FNV-1a of the corpus text
  std::string source;  // path or "bundled"
  std::vector<std::pair<std::string, nf::FieldRef>> fields;
  std::vector<param::ParamFamily> families;
  std::vector<search::PolyFamily> poly_families;
  std::vector<CaseRecord> cases;

  nf::FieldRef field(const std::string& id) const;
  const param::ParamFamily& family(const std::string& id) const;
  /// Empty filter or "all" selects every case; unknown filters throw.
  std::vector<const CaseRecord*> select(const std::string& filter) const;
};

Corpus parse_corpus(const std::string& text, const std::string& source);
Corpus load_corpus_file(const std::string& path);
const std::string& bundled_corpus_text();
/// path if given, else $APFORGE_CORPUS, else the bundled copy.
Corpus load_corpus(const std::optional<std::string>& path = std::nullopt);

std::string fnv1a_hex(const std::string& text);

/// Ascending coordinates as decimal strings.
nf::FieldElem parse_elem(const nf::FieldRef& k, const nlohmann::json& j);
/// Descending coefficients, each a field element.
exact::UniPoly<nf::FieldElem> parse_field_poly(const nf::FieldRef& k, const nlohmann::json& j);
BinaryForm parse_form(const nlohmann::json& j);
std::vector<BigRat> parse_rationals(const nlohmann::json& j);

}  // namespace apforge::corpus
