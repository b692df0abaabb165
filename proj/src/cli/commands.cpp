#include "apforge/cli/commands.hpp"

#include "apforge/curve/genus.hpp"
#include "apforge/param/family.hpp"

#include <chrono>
#include <stdexcept>

namespace apforge::cli {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string vec_text(const std::vector<unsigned>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

bool is_unit_constant(const search::Progression& p) {
  if (!p.is_constant()) return false;
  for (const auto& t : p.terms)
    if (abs(t.h) != 1) return false;
  return true;
}

void add_progressions(RunReport& rep, const std::vector<search::Progression>& found) {
  for (std::size_t i = 0; i < found.size(); ++i) {
    const auto& p = found[i];
    rep.add("progression " + std::to_string(i + 1) + " " + vec_text(p.exponents()), p.valid(),
            "valid progression", search::to_string(p));
  }
}

// Finiteness pattern: for k = 3 a hyperbolic triple, for k = 4 anything but
// four squares, for k = 5 everything.
curve::GenusBound expected_bound(unsigned k, const std::vector<unsigned>& l) {
  bool high = true;
  if (k == 3) {
    exact::BigRat s = 0;
    for (unsigned e : l) s += exact::BigRat(1, e);
    high = s < 1;
  } else if (k == 4) {
    high = !(l[0] == 2 && l[1] == 2 && l[2] == 2 && l[3] == 2);
  }
  return high ? curve::GenusBound::GenusAtLeast2 : curve::GenusBound::AllGenusLE1Possible;
}

}  // namespace

void stamp(RunReport& report, const corpus::Corpus& corpus) {
  report.corpus_version = corpus.version;
  report.corpus_hash = corpus.hash;
}

RunReport cmd_verify_lemma(const corpus::Corpus& corpus, const std::optional<std::string>& family, long bound) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  RunReport rep;
  stamp(rep, corpus);
  bool seen = false;
  for (const auto& f : corpus.families) {
    if (family && *family != f.id) continue;
    seen = true;
    for (unsigned b = 1; b <= f.branches.size(); ++b) {
      const auto t0 = Clock::now();
      const auto r = param::param_verify_identity(f, b);
      std::string actual = r.holds ? "holds" : "fails";
      if (!r.detail.empty())
        actual += "; " + r.detail;
      else if (r.derived_c)
        actual += ", c = " + exact::form_to_string(*r.derived_c);
      rep.add("lemma " + f.id + " branch " + std::to_string(b) + " identity", r.holds, f.equation(), actual,
              ms_since(t0));
    }
    if (bound == 0) continue;
    const auto t0 = Clock::now();
    const auto c = param::param_cover_check(f, bound);
    std::string actual = std::to_string(c.solutions) + " solutions, " + std::to_string(c.matched) + " matched, " +
                         std::to_string(c.unmatched.size()) + " unmatched";
    if (!c.opposite_convention.empty())
      actual += " (" + std::to_string(c.opposite_convention.size()) + " through the opposite parity class)";
    actual += ", radius " + std::to_string(c.radius);
    rep.add("lemma " + f.id + " cover |a|,|b| <= " + std::to_string(bound), c.unmatched.empty(), "0 unmatched",
            actual, ms_since(t0));
  }
  if (family && !seen) throw std::invalid_argument("unknown family " + *family);
  return rep;
}

RunReport cmd_search(const search::SearchConfig& cfg) {
  RunReport rep;
  const auto t0 = Clock::now();
  const auto found = search::search_general(cfg);
  rep.add("search k=" + std::to_string(cfg.k) + " l<=" + std::to_string(cfg.max_l), true, "enumeration completes",
          std::to_string(found.size()) + " progressions", ms_since(t0));
  add_progressions(rep, found);
  return rep;
}

RunReport cmd_search_theorem3(long bound_squares, long bound_cubes) {
  RunReport rep;
  const auto t0 = Clock::now();
  const auto found = search::search_theorem3(bound_squares, bound_cubes);
  std::size_t nontrivial = 0;
  for (const auto& p : found)
    if (!is_unit_constant(p)) ++nontrivial;
  rep.add("theorem3 |x| <= " + std::to_string(bound_squares) + " (squares), " + std::to_string(bound_cubes) +
              " (cubes)",
          nontrivial == 0 && !found.empty(), "only +-(1,1,1,1)",
          std::to_string(found.size()) + " progressions, " + std::to_string(nontrivial) + " non-trivial",
          ms_since(t0));
  add_progressions(rep, found);
  return rep;
}

RunReport cmd_search_cubic_twin(long bound, bool diagonal_only) {
  RunReport rep;
  const auto t0 = Clock::now();
  const auto found = search::search_cubic_twin(bound, diagonal_only);
  bool only_units = !found.empty();
  std::string actual;
  for (const auto& s : found) {
    const bool unit = (s.x == 1 && s.y == 1 && s.z == 1) || (s.x == -1 && s.y == -1 && s.z == -1);
    only_units = only_units && unit;
    actual += (actual.empty() ? "" : ", ") + std::string("(") + std::to_string(s.x) + "," + std::to_string(s.y) +
              "," + std::to_string(s.z) + ")";
  }
  rep.add(std::string("cubic twin x^3 + y^3 = 2z^3, bound ") + std::to_string(bound) +
              (diagonal_only ? " (x = y)" : ""),
          only_units, "(1,1,1), (-1,-1,-1)", actual.empty() ? "none" : actual, ms_since(t0));
  return rep;
}

RunReport cmd_cases(const corpus::Corpus& corpus, const std::string& filter, const corpus::CaseOptions& options) {
  RunReport rep;
  stamp(rep, corpus);
  const auto selected = corpus.select(filter);
  std::vector<std::vector<CheckRecord>> per_case(selected.size());
  // Cases are independent; results merge in corpus order.
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < selected.size(); ++i) per_case[i] = corpus::run_case(corpus, *selected[i], options);
  for (auto& recs : per_case)
    for (auto& r : recs) rep.add(std::move(r));
  if (filter.empty() || filter == "all")
    for (auto& r : corpus::run_poly_families(corpus)) rep.add(std::move(r));
  return rep;
}

RunReport cmd_genus_scan(unsigned k, unsigned max_l) {
  if (k < 3 || k > 5) throw std::invalid_argument("k must be 3, 4 or 5");
  if (max_l < 2 || max_l > 12) throw std::invalid_argument("scan bound must lie in [2, 12]");
  RunReport rep;
  std::vector<unsigned> l(k, 2);
  while (true) {
    const auto v = curve::rh_genus_bound(k, l);
    const auto want = expected_bound(k, l);
    rep.add("genus k=" + std::to_string(k) + " " + vec_text(l), v.bound == want, curve::to_string(want),
            curve::to_string(v.bound) + " (deficiency " + exact::to_string(v.deficiency) + ")");
    std::size_t i = k;
    while (i-- > 0) {
      if (l[i] < max_l) {
        ++l[i];
        break;
      }
      l[i] = 2;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  return rep;
}

RunReport cmd_genus_vector(unsigned k, const std::vector<unsigned>& lvec) {
  RunReport rep;
  const auto v = curve::rh_genus_bound(k, lvec);
  const auto want = expected_bound(k, lvec);
  std::string actual = curve::to_string(v.bound) + " (deficiency " + exact::to_string(v.deficiency) + ")";
  if (k == 3) {
    const auto c = curve::chi_classify(lvec[0], lvec[1], lvec[2]);
    actual += ", chi " + exact::to_string(c.chi) + " " + curve::to_string(c.kind);
  }
  rep.add("genus k=" + std::to_string(k) + " " + vec_text(lvec), v.bound == want, curve::to_string(want), actual);
  return rep;
}

RunReport cmd_genus_chi(unsigned r, unsigned s, unsigned t) {
  RunReport rep;
  const auto c = curve::chi_classify(r, s, t);
  const exact::BigRat sum = exact::BigRat(1, r) + exact::BigRat(1, s) + exact::BigRat(1, t);
  const auto want = sum > 1 ? curve::ChiClass::GenusZero : sum == 1 ? curve::ChiClass::GenusOne : curve::ChiClass::GenusGT1;
  std::string actual = curve::to_string(c.kind) + ", chi = " + exact::to_string(c.chi);
  if (c.kind == curve::ChiClass::GenusZero) actual += ", d = 2/chi = " + exact::to_string(c.degree);
  rep.add("chi" + vec_text({r, s, t}), c.kind == want, curve::to_string(want), actual);
  return rep;
}

}  // namespace apforge::cli
