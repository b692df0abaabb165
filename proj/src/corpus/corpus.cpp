#include "apforge/corpus/corpus.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace apforge::corpus {

namespace detail {
extern const char* const bundled_corpus_json;
}

using nlohmann::json;

namespace {

std::string text_of(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw CorpusError("expected a number literal, got " + j.dump());
}

const json& need(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw CorpusError(where + ": missing \"" + key + "\"");
  return j.at(key);
}

Step parse_step(const json& j, const std::string& where) {
  Step s;
  if (j.contains("ap")) {
    s.kind = Step::Kind::Progression;
    s.progression = j.at("ap").get<std::vector<std::string>>();
    return s;
  }
  s.let = need(j, "let", where).get<std::string>();
  const std::string here = where + "/" + s.let;
  if (j.contains("coeffs")) {
    s.kind = Step::Kind::Literal;
    s.literal = parse_form(j.at("coeffs"));
  } else if (j.contains("family")) {
    s.kind = Step::Kind::Family;
    s.family = j.at("family").get<std::string>();
    s.branch = need(j, "branch", here).get<unsigned>();
    const auto part = need(j, "part", here).get<std::string>();
    if (part != "a" && part != "b" && part != "c") throw CorpusError(here + ": part must be a, b or c");
    s.part = part[0];
  } else if (j.contains("sum")) {
    s.kind = Step::Kind::Sum;
    for (const auto& t : j.at("sum"))
      s.terms.push_back({exact::parse_rational(text_of(need(t, "coef", here))),
                         need(t, "factors", here).get<std::vector<std::string>>()});
    if (s.terms.empty()) throw CorpusError(here + ": empty sum");
  } else {
    throw CorpusError(here + ": step needs coeffs, family, sum or ap");
  }
  if (j.contains("expect")) s.expect = parse_form(j.at("expect"));
  return s;
}

CaseRecord parse_case(const json& j) {
  CaseRecord c;
  c.id = need(j, "id", "case").get<std::string>();
  const std::string where = "case " + c.id;
  c.exponents = need(j, "exponents", where).get<std::vector<unsigned>>();
  if (j.contains("aliases")) c.aliases = j.at("aliases").get<std::vector<std::string>>();
  if (j.contains("families")) c.families = j.at("families").get<std::vector<std::string>>();
  if (j.contains("title")) c.title = j.at("title").get<std::string>();
  for (const auto& s : need(j, "steps", where)) c.steps.push_back(parse_step(s, where));
  const json& cv = need(j, "curve", where);
  c.curve.from = need(cv, "from", where).get<std::string>();
  if (cv.contains("chart")) c.curve.chart = cv.at("chart").get<std::vector<std::string>>();
  c.curve.kind = need(cv, "kind", where).get<std::string>();
  if (c.curve.kind != "hyper" && c.curve.kind != "elliptic" && c.curve.kind != "form")
    throw CorpusError(where + ": unknown curve kind " + c.curve.kind);
  c.curve.label = cv.value("label", c.id);
  c.curve.expect = parse_rationals(need(cv, "expect", where));
  if (j.contains("facts")) c.facts = j.at("facts");
  if (j.contains("claims")) c.claims = j.at("claims").get<std::vector<std::string>>();
  return c;
}

param::ParamFamily parse_family(const json& j) {
  param::ParamFamily f;
  f.id = need(j, "id", "family").get<std::string>();
  const std::string where = "family " + f.id;
  const auto eq = need(j, "equation", where).get<std::vector<long>>();
  if (eq.size() != 4 || eq[3] < 2) throw CorpusError(where + ": equation must be [A, B, C, k]");
  f.A = eq[0];
  f.B = eq[1];
  f.C = eq[2];
  f.k = static_cast<unsigned>(eq[3]);
  f.same_parity = j.value("same_parity", false);
  f.integrality_rule = j.value("integrality_rule", "");
  for (const auto& b : need(j, "branches", where)) {
    param::Branch br{parse_form(need(b, "a", where)), parse_form(need(b, "b", where)), std::nullopt};
    if (b.contains("c")) br.c_pinned = parse_form(b.at("c"));
    f.branches.push_back(std::move(br));
  }
  if (f.branches.empty()) throw CorpusError(where + ": no branches");
  return f;
}

search::PolyFamily parse_poly_family(const json& j) {
  search::PolyFamily r;
  r.id = need(j, "id", "polynomial family").get<std::string>();
  const std::string where = "polynomial family " + r.id;
  r.exponents = need(j, "exponents", where).get<std::vector<unsigned>>();
  std::map<std::string, BinaryForm> named;
  if (j.contains("forms"))
    for (const auto& [name, coeffs] : j.at("forms").items()) named.emplace(name, parse_form(coeffs));
  for (const auto& b : need(j, "bases", where)) {
    BinaryForm base = parse_form(need(b, "coeffs", where));
    if (b.contains("times")) {
      auto it = named.find(b.at("times").get<std::string>());
      if (it == named.end()) throw CorpusError(where + ": unknown form " + b.at("times").dump());
      base = base * it->second;
    }
    r.bases.push_back(std::move(base));
  }
  if (r.bases.size() != r.exponents.size()) throw CorpusError(where + ": bases and exponents differ in length");
  return r;
}

}  // namespace

std::vector<BigRat> parse_rationals(const json& j) {
  if (!j.is_array()) throw CorpusError("expected an array of rationals, got " + j.dump());
  std::vector<BigRat> out;
  for (const auto& v : j) out.push_back(exact::parse_rational(text_of(v)));
  return out;
}

BinaryForm parse_form(const json& j) {
  auto c = parse_rationals(j);
  if (c.empty()) throw CorpusError("empty form");
  return BinaryForm(std::move(c));
}

nf::FieldElem parse_elem(const nf::FieldRef& k, const json& j) {
  auto c = parse_rationals(j);
  if (c.size() > k->degree()) throw CorpusError("element has more coordinates than the degree of " + k->name());
  c.resize(k->degree(), BigRat(0));
  return nf::FieldElem(k, std::move(c));
}

exact::UniPoly<nf::FieldElem> parse_field_poly(const nf::FieldRef& k, const json& j) {
  std::vector<nf::FieldElem> desc;
  for (const auto& e : j) desc.push_back(parse_elem(k, e));
  return exact::UniPoly<nf::FieldElem>::from_descending(std::move(desc));
}

bool CaseRecord::matches(const std::string& filter) const {
  if (filter == id) return true;
  std::string stem = id;
  while (!stem.empty() && std::isalpha(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  if (filter == stem) return true;
  for (const auto& a : aliases)
    if (filter == a) return true;
  return false;
}

nf::FieldRef Corpus::field(const std::string& id) const {
  for (const auto& [name, k] : fields)
    if (name == id) return k;
  throw CorpusError("unknown field " + id);
}

const param::ParamFamily& Corpus::family(const std::string& id) const {
  for (const auto& f : families)
    if (f.id == id) return f;
  throw CorpusError("unknown family " + id);
}

std::vector<const CaseRecord*> Corpus::select(const std::string& filter) const {
  std::vector<const CaseRecord*> out;
  for (const auto& c : cases)
    if (filter.empty() || filter == "all" || c.matches(filter)) out.push_back(&c);
  if (out.empty()) throw CorpusError("unknown case " + filter);
  return out;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

Corpus parse_corpus(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CorpusError(source + ": " + e.what());
  }
  Corpus c;
  c.source = source;
  c.hash = fnv1a_hex(text);
  try {
    c.version = need(j, "version", source).get<std::string>();
    for (const auto& f : need(j, "fields", source)) {
      const auto id = need(f, "id", "field").get<std::string>();
      auto minpoly = exact::RatPoly::from_descending(parse_rationals(need(f, "minpoly", id)));
      c.fields.emplace_back(id, nf::NumberField::create(id, minpoly));
    }
    for (const auto& f : need(j, "families", source)) c.families.push_back(parse_family(f));
    if (j.contains("poly_families"))
      for (const auto& r : j.at("poly_families")) c.poly_families.push_back(parse_poly_family(r));
    for (const auto& k : need(j, "cases", source)) c.cases.push_back(parse_case(k));
  } catch (const json::exception& e) {
    throw CorpusError(source + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw CorpusError(source + ": " + e.what());
  }
  return c;
}

Corpus load_corpus_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CorpusError("cannot open corpus " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str(), path);
}

const std::string& bundled_corpus_text() {
  static const std::string text(detail::bundled_corpus_json);
  return text;
}

Corpus load_corpus(const std::optional<std::string>& path) {
  if (path && !path->empty()) return load_corpus_file(*path);
  if (const char* env = std::getenv("APFORGE_CORPUS"); env && *env) return load_corpus_file(env);
  return parse_corpus(bundled_corpus_text(), "bundled");
}

}  // namespace apforge::corpus
