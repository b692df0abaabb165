#include "apforge/corpus/cases.hpp"

#include "apforge/curve/descent.hpp"
#include "apforge/curve/points.hpp"
#include "apforge/nf/number_field.hpp"
#include "apforge/param/family.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>

namespace apforge::corpus {

using cli::CheckRecord;
using cli::Status;
using nlohmann::json;
using nf::FieldElem;
using nf::FieldRef;
using FieldPoly = exact::UniPoly<FieldElem>;
using FieldForm = exact::BasicBinaryForm<FieldElem>;

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string join_rats(const std::vector<BigRat>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + exact::to_string(v[i]);
  return s + "]";
}

CheckRecord record(std::string id, bool ok, std::string expected, std::string actual) {
  return {std::move(id), ok ? Status::Pass : Status::Fail, std::move(expected), std::move(actual), 0};
}

const BinaryForm& lookup(const std::map<std::string, BinaryForm>& values, const std::string& name,
                         const std::string& where) {
  auto it = values.find(name);
  if (it == values.end()) throw CorpusError(where + ": unknown name " + name);
  return it->second;
}

BinaryForm family_part(const Corpus& corpus, const Step& s, const std::string& where) {
  const auto& fam = corpus.family(s.family);
  if (s.branch < 1 || s.branch > fam.branches.size())
    throw CorpusError(where + ": family " + s.family + " has no branch " + std::to_string(s.branch));
  const auto& br = fam.branches[s.branch - 1];
  if (s.part == 'a') return br.a;
  if (s.part == 'b') return br.b;
  auto rep = param::param_verify_identity(fam, s.branch);
  if (!rep.derived_c) throw CorpusError(where + ": family " + s.family + " gives no c-form: " + rep.detail);
  return *rep.derived_c;
}

template <class F>
Derivation run_steps(const Corpus& corpus, const CaseRecord& c, F&& on_mismatch) {
  Derivation d;
  for (const auto& s : c.steps) {
    const std::string where = c.id + "/" + (s.kind == Step::Kind::Progression ? std::string("ap") : s.let);
    if (s.kind == Step::Kind::Progression) {
      if (s.progression.size() < 3) throw CorpusError(where + ": progression needs three names");
      std::vector<BinaryForm> terms;
      for (const auto& n : s.progression) terms.push_back(lookup(d.values, n, where));
      const BinaryForm diff = terms[1] - terms[0];
      bool ap = true;
      for (std::size_t i = 2; i < terms.size(); ++i) ap = ap && (terms[i] - terms[i - 1] == diff);
      std::string names;
      for (const auto& n : s.progression) names += (names.empty() ? "" : ", ") + n;
      auto r = record(where, ap, "common difference", ap ? "difference " + exact::form_to_string(diff) : "not in progression");
      r.id = c.id + "/ap(" + names + ")";
      d.records.push_back(std::move(r));
      if (!ap) on_mismatch(where, std::string("terms not in progression\n"));
      continue;
    }
    if (d.values.count(s.let)) throw CorpusError(where + ": name bound twice");
    BinaryForm v{std::vector<BigRat>{BigRat(0)}};
    switch (s.kind) {
      case Step::Kind::Literal: v = *s.literal; break;
      case Step::Kind::Family: v = family_part(corpus, s, where); break;
      case Step::Kind::Sum: {
        std::optional<BinaryForm> acc;
        for (const auto& t : s.terms) {
          if (t.factors.empty()) throw CorpusError(where + ": term without factors");
          BinaryForm p = lookup(d.values, t.factors[0], where);
          for (std::size_t i = 1; i < t.factors.size(); ++i) p = p * lookup(d.values, t.factors[i], where);
          p = p.scaled(t.coef);
          if (acc && acc->degree() != p.degree()) throw CorpusError(where + ": terms of different degree");
          acc = acc ? *acc + p : p;
        }
        v = *acc;
        break;
      }
      case Step::Kind::Progression: break;
    }
    if (s.expect) {
      const bool same = *s.expect == v;
      d.records.push_back(record(where, same, exact::form_to_string(*s.expect), exact::form_to_string(v)));
      if (!same) on_mismatch(where, exact::form_diff(*s.expect, v));
    }
    d.values.emplace(s.let, std::move(v));
  }

  d.source = lookup(d.values, c.curve.from, c.id + "/curve");
  const std::string where = c.id + "/curve " + c.curve.label;
  if (c.curve.kind == "form") {
    const BinaryForm want(c.curve.expect);
    const bool same = want == d.source;
    d.records.push_back(record(where, same, exact::form_to_string(want), exact::form_to_string(d.source)));
    if (!same) on_mismatch(where, exact::form_diff(want, d.source));
    return d;
  }
  d.model = apply_chart(d.source, c.curve.chart);
  const bool same = d.model == c.curve.expect;
  const auto got = exact::RatPoly::from_descending(d.model);
  const auto want = exact::RatPoly::from_descending(c.curve.expect);
  d.records.push_back(record(where, same, "Y^2 = " + want.to_string(), "Y^2 = " + got.to_string()));
  if (!same) on_mismatch(where, "expected " + join_rats(c.curve.expect) + "\nactual   " + join_rats(d.model) + "\n");
  return d;
}

CaseTarget make_target(const CaseRecord& c, const Derivation& d) {
  if (c.curve.kind == "form") return d.source;
  auto f = exact::RatPoly::from_descending(d.model);
  if (c.curve.kind == "elliptic") return curve::RationalElliptic(c.curve.label, f);
  return curve::HyperCurve(c.curve.label, f);
}

// ---- facts --------------------------------------------------------------

struct Ctx {
  const Corpus& corpus;
  const CaseRecord& c;
  const CaseOptions& opt;
  const CaseTarget& target;
  std::string id;  // case id prefix
};

const curve::HyperCurve& hyper(const Ctx& x, const std::string& type) {
  if (auto* h = std::get_if<curve::HyperCurve>(&x.target)) return *h;
  throw CorpusError(x.id + ": fact " + type + " needs a genus-two curve");
}

exact::RatPoly target_poly(const Ctx& x, const std::string& type) {
  if (auto* h = std::get_if<curve::HyperCurve>(&x.target)) return h->f();
  if (auto* e = std::get_if<curve::RationalElliptic>(&x.target)) return e->rhs();
  throw CorpusError(x.id + ": fact " + type + " needs a univariate model");
}

const BinaryForm& target_form(const Ctx& x, const std::string& type) {
  if (auto* f = std::get_if<BinaryForm>(&x.target)) return *f;
  throw CorpusError(x.id + ": fact " + type + " needs a binary form target");
}

FieldPoly lift(const FieldRef& k, const exact::RatPoly& f) {
  std::vector<FieldElem> c;
  for (const auto& q : f.coeffs()) c.push_back(FieldElem::rational(k, q));
  return FieldPoly(std::move(c));
}

FieldForm lift(const FieldRef& k, const BinaryForm& f) {
  std::vector<FieldElem> c;
  for (const auto& q : f.coeffs()) c.push_back(FieldElem::rational(k, q));
  return FieldForm(std::move(c));
}

FieldForm parse_field_form(const FieldRef& k, const json& j) {
  std::vector<FieldElem> c;
  for (const auto& e : j) c.push_back(parse_elem(k, e));
  if (c.empty()) throw CorpusError("empty form over " + k->name());
  return FieldForm(std::move(c));
}

FieldElem product_of(const FieldRef& k, const json& j) {
  FieldElem acc = FieldElem::one(k);
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw CorpusError("product entries are [element, power]");
    acc = acc * parse_elem(k, pair[0]).pow(pair[1].get<unsigned>());
  }
  return acc;
}

std::string points_text(const std::vector<curve::RationalPoint>& pts, unsigned inf) {
  std::string s = "{";
  for (std::size_t i = 0; i < pts.size(); ++i)
    s += (i ? ", (" : "(") + exact::to_string(pts[i].x) + ", " + exact::to_string(pts[i].y) + ")";
  return s + "} + " + std::to_string(inf) + " at infinity";
}

void fact_jacobian(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const long p = f.at("p").get<long>();
  const long want = f.at("value").get<long>();
  const long got = curve::jacobian_order(hyper(x, "jacobian_order"), p);
  out.push_back(record(x.id + "/#J(F_" + std::to_string(p) + ")", got == want, std::to_string(want), std::to_string(got)));
}

void fact_torsion(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const auto primes = f.at("primes").get<std::vector<long>>();
  const long g = curve::torsion_gcd_bound(hyper(x, "torsion_gcd"), primes);
  std::string ps;
  for (long p : primes) ps += (ps.empty() ? "" : ",") + std::to_string(p);
  const std::string id = x.id + "/torsion gcd{" + ps + "}";
  if (f.contains("value")) {
    const long want = f.at("value").get<long>();
    out.push_back(record(id, g == want, std::to_string(want), std::to_string(g)));
  } else {
    const long d = f.at("divisible_by").get<long>();
    out.push_back(record(id, g % d == 0, "divisible by " + std::to_string(d), std::to_string(g)));
  }
}

void fact_points(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const long height = x.opt.height.value_or(f.at("height").get<long>());
  std::vector<curve::RationalPoint> want;
  for (const auto& p : f.at("affine")) {
    auto xy = parse_rationals(p);
    if (xy.size() != 2) throw CorpusError(x.id + ": points are [x, y]");
    want.push_back({xy[0], xy[1]});
  }
  std::sort(want.begin(), want.end(), [](const auto& a, const auto& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  const unsigned want_inf = f.at("at_infinity").get<unsigned>();
  const auto got = curve::rational_points_search(target_poly(x, "points"), height);
  const bool ok = got.affine == want && got.at_infinity == want_inf;
  out.push_back(record(x.id + "/points height " + std::to_string(height), ok, points_text(want, want_inf),
                       points_text(got.affine, got.at_infinity)));
}

void fact_local(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const long bound = x.opt.local_primes.value_or(f.at("primes_up_to").get<long>());
  const auto poly = target_poly(x, "local_solvability");
  std::vector<long> bad, unknown;
  long count = 0;
  for (long p = 2; p <= bound; ++p) {
    bool prime = true;
    for (long q = 2; q * q <= p; ++q)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    ++count;
    switch (curve::locally_solvable(poly, p)) {
      case curve::LocalStatus::Solvable: break;
      case curve::LocalStatus::NotSolvable: bad.push_back(p); break;
      case curve::LocalStatus::Undecided: unknown.push_back(p); break;
    }
  }
  auto list = [](const std::vector<long>& v) {
    std::string s;
    for (long p : v) s += (s.empty() ? "" : ",") + std::to_string(p);
    return s;
  };
  CheckRecord r{x.id + "/locally solvable p <= " + std::to_string(bound), Status::Pass,
                "solvable at all " + std::to_string(count) + " primes", "", 0};
  if (!bad.empty()) {
    r.status = Status::Fail;
    r.actual = "not solvable at " + list(bad);
  } else if (!unknown.empty()) {
    r.status = Status::Undecided;
    r.actual = "undecided at " + list(unknown);
  } else {
    r.actual = "solvable at all " + std::to_string(count) + " primes";
  }
  out.push_back(std::move(r));
  if (f.contains("real")) {
    const bool want = f.at("real").get<bool>();
    const bool got = curve::locally_solvable_real(poly);
    out.push_back(record(x.id + "/locally solvable over R", want == got, want ? "solvable" : "not solvable",
                         got ? "solvable" : "not solvable"));
  }
}

void fact_factorization(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const FieldRef k = x.corpus.field(f.at("field").get<std::string>());
  std::vector<FieldPoly> factors;
  for (const auto& p : f.at("factors")) factors.push_back(parse_field_poly(k, p));
  FieldPoly prod = FieldPoly::constant(FieldElem::one(k));
  for (const auto& p : factors) prod = prod * p;
  const FieldPoly base = lift(k, target_poly(x, "factorization"));
  const std::string id = x.id + "/factorization over " + k->name();
  out.push_back(record(id, prod == base, base.to_string(), prod.to_string()));
  if (!f.contains("resultant")) return;
  if (factors.size() != 2) throw CorpusError(id + ": resultant needs exactly two factors");
  const FieldElem res = exact::uni_resultant(factors[0], factors[1]);
  const json& r = f.at("resultant");
  if (r.contains("equals")) {
    const FieldElem want = parse_elem(k, r.at("equals"));
    out.push_back(record(x.id + "/resultant", res == want, want.to_string(), res.to_string()));
  }
  if (r.contains("s_unit")) {
    const auto primes = r.at("s_unit").get<std::vector<long>>();
    std::string ps;
    for (long p : primes) ps += (ps.empty() ? "" : ",") + std::to_string(p);
    const bool ok = nf::nf_is_s_unit(res, primes);
    out.push_back(record(x.id + "/resultant S-unit {" + ps + "}", ok, "norm supported on {" + ps + "}",
                         "resultant " + res.to_string() + ", norm " + exact::to_string(nf::nf_norm(res))));
  }
}

void fact_elliptic(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const FieldRef k = x.corpus.field(f.at("field").get<std::string>());
  const std::string label = f.at("label").get<std::string>();
  const curve::FieldElliptic e(label, parse_field_poly(k, f.at("rhs")));
  for (const auto& p : f.at("points")) {
    const FieldElem px = parse_elem(k, p.at("x"));
    std::optional<FieldElem> py;
    if (p.contains("y")) py = parse_elem(k, p.at("y"));
    const auto chk = curve::ec_point_check(e, px, py);
    std::string id = x.id + "/" + label + " point X=" + px.to_string();
    if (py) id += " Y=" + py->to_string();
    Status st = chk.status == curve::PointStatus::OnCurve      ? Status::Pass
                : chk.status == curve::PointStatus::NotOnCurve ? Status::Fail
                                                               : Status::Undecided;
    out.push_back({id, st, "on curve", curve::to_string(chk.status) + (chk.detail.empty() ? "" : ": " + chk.detail), 0});
  }
}

void fact_field_identity(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const FieldRef k = x.corpus.field(f.at("field").get<std::string>());
  const FieldElem got = product_of(k, f.at("product"));
  const FieldElem want = parse_elem(k, f.at("value"));
  out.push_back(record(x.id + "/" + f.value("label", "identity") + " in " + k->name(), got == want, want.to_string(),
                       got.to_string()));
}

void fact_norm(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const FieldRef k = x.corpus.field(f.at("field").get<std::string>());
  const FieldElem e = parse_elem(k, f.at("element"));
  const BigRat want = exact::parse_rational(f.at("value").get<std::string>());
  const BigRat got = nf::nf_norm(e);
  out.push_back(record(x.id + "/norm(" + e.to_string() + ")", got == want, exact::to_string(want), exact::to_string(got)));
}

void fact_poly_value(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const FieldRef k = x.corpus.field(f.at("field").get<std::string>());
  const FieldPoly p = parse_field_poly(k, f.at("poly"));
  const BigRat at = exact::parse_rational(f.at("at").get<std::string>());
  const FieldElem got = p(FieldElem::rational(k, at));
  const FieldElem want = parse_elem(k, f.at("value"));
  out.push_back(record(x.id + "/" + f.value("label", "value"), got == want, want.to_string(), got.to_string()));
}

void fact_square_values(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const FieldRef k = x.corpus.field(f.at("field").get<std::string>());
  const FieldPoly g = parse_field_poly(k, f.at("poly"));
  const std::size_t d = g.degree();
  for (const auto& pt : f.at("points")) {
    auto xz = parse_rationals(pt);
    if (xz.size() != 2) throw CorpusError(x.id + ": square_values points are [x, z]");
    // Homogenized value sum g_i x^i z^(d - i).
    FieldElem v = FieldElem::zero(k);
    for (std::size_t i = 0; i <= d; ++i) {
      BigRat m = 1;
      for (std::size_t j = 0; j < i; ++j) m *= xz[0];
      for (std::size_t j = i; j < d; ++j) m *= xz[1];
      v = v + g.coeffs()[i] * m;
    }
    const std::string id =
        x.id + "/G(" + exact::to_string(xz[0]) + ", " + exact::to_string(xz[1]) + ") square in " + k->name();
    if (v.is_zero()) {
      out.push_back(record(id, true, "square", "zero"));
      continue;
    }
    const auto sq = nf::nf_is_square(v);
    Status st = sq.status == nf::SquareStatus::Square       ? Status::Pass
                : sq.status == nf::SquareStatus::NotASquare ? Status::Fail
                                                            : Status::Undecided;
    std::string actual = nf::to_string(sq.status);
    if (sq.root) actual += " (" + sq.root->to_string() + ")^2";
    out.push_back({id, st, "square", actual, 0});
  }
}

void fact_form_value(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const auto at = parse_rationals(f.at("at"));
  if (at.size() != 2) throw CorpusError(x.id + ": form_value needs [x, y]");
  const BigRat want = exact::parse_rational(f.at("value").get<std::string>());
  const BigRat got = target_form(x, "form_value").eval(at[0], at[1]);
  out.push_back(record(x.id + "/f(" + exact::to_string(at[0]) + ", " + exact::to_string(at[1]) + ")", got == want,
                       exact::to_string(want), exact::to_string(got)));
}

void fact_descent(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const long want = f.at("s").get<long>();
  for (const auto& pr : f.at("pairs")) {
    const long x1 = pr.at(0).get<long>(), x3 = pr.at(1).get<long>();
    const std::string id = x.id + "/descent (" + std::to_string(x1) + ", " + std::to_string(x3) + ")";
    try {
      const auto st = curve::cube_pair_descent_step(x1, x3);
      out.push_back(record(id, st.s == want, "s = " + std::to_string(want),
                           "s = " + std::to_string(st.s) + ", u = " + exact::to_string(st.u) +
                               ", v = " + exact::to_string(st.v)));
    } catch (const curve::NoRepresentation& e) {
      out.push_back(record(id, false, "s = " + std::to_string(want), e.what()));
    }
  }
}

void fact_form_factorization(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const FieldRef k = x.corpus.field(f.at("field").get<std::string>());
  std::optional<FieldForm> prod;
  for (const auto& g : f.at("factors")) {
    FieldForm h = parse_field_form(k, g);
    prod = prod ? *prod * h : h;
  }
  if (!prod) throw CorpusError(x.id + ": form_factorization without factors");
  const FieldForm base = lift(k, target_form(x, "form_factorization"));
  const bool ok = *prod == base;
  auto render = [](const FieldForm& g) {
    std::string s = "[";
    for (std::size_t i = 0; i < g.coeffs().size(); ++i) s += (i ? ", " : "") + g.coeffs()[i].to_string();
    return s + "]";
  };
  out.push_back(record(x.id + "/form factorization over " + k->name(), ok, render(base), render(*prod)));
}

void fact_form_value_field(const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
  const FieldRef k = x.corpus.field(f.at("field").get<std::string>());
  const FieldForm g = parse_field_form(k, f.at("form"));
  const auto at = parse_rationals(f.at("at"));
  if (at.size() != 2) throw CorpusError(x.id + ": form_value_field needs [x, y]");
  const FieldElem got = g.eval(FieldElem::rational(k, at[0]), FieldElem::rational(k, at[1]));
  const FieldElem want = product_of(k, f.at("value_product"));
  out.push_back(record(x.id + "/" + f.value("label", "form value"), got == want, want.to_string(), got.to_string()));
}

using FactFn = void (*)(const Ctx&, const json&, std::vector<CheckRecord>&);

const std::map<std::string, FactFn>& fact_table() {
  static const std::map<std::string, FactFn> t = {
      {"jacobian_order", fact_jacobian},
      {"torsion_gcd", fact_torsion},
      {"points", fact_points},
      {"local_solvability", fact_local},
      {"factorization", fact_factorization},
      {"elliptic_points", fact_elliptic},
      {"field_identity", fact_field_identity},
      {"norm", fact_norm},
      {"poly_value", fact_poly_value},
      {"square_values", fact_square_values},
      {"form_value", fact_form_value},
      {"descent", fact_descent},
      {"form_factorization", fact_form_factorization},
      {"form_value_field", fact_form_value_field},
      {"involution",
       [](const Ctx& x, const json&, std::vector<CheckRecord>& out) {
         const bool ok = curve::involution_check(target_form(x, "involution"));
         out.push_back(record(x.id + "/f(-3y, x) = -27 f(x, y)", ok, "identity", ok ? "identity" : "differs"));
       }},
      {"mod4_obstruction",
       [](const Ctx& x, const json& f, std::vector<CheckRecord>& out) {
         const auto want = f.at("value").get<std::uint64_t>();
         const auto got = curve::mod4_obstruction_count();
         out.push_back(record(x.id + "/mod 4 patterns with 2 | x1 x2", got == want, std::to_string(want),
                              std::to_string(got)));
       }},
  };
  return t;
}

}  // namespace

bool Derivation::ok() const {
  return std::all_of(records.begin(), records.end(), [](const auto& r) { return r.status == Status::Pass; });
}

std::vector<BigRat> apply_chart(const BinaryForm& f, const std::vector<std::string>& chart) {
  std::vector<BigRat> cur = f.coeffs();  // descending in x once y = 1
  bool dehomogenized = false;
  for (const auto& step : chart) {
    if (step == "dehomogenize") {
      if (dehomogenized) throw CorpusError("chart dehomogenizes twice");
      dehomogenized = true;
    } else if (step == "even_y") {
      // x = 1 and X = y^2: the coefficient of y^(2m) becomes that of X^m.
      if (dehomogenized) throw CorpusError("even_y applies to the form itself");
      std::vector<BigRat> asc;
      for (std::size_t j = 0; j < cur.size(); ++j) {
        if (j % 2 == 1) {
          if (cur[j] != 0) throw CorpusError("even_y needs a form even in y");
          continue;
        }
        asc.push_back(cur[j]);
      }
      while (asc.size() > 1 && asc.back() == 0) asc.pop_back();
      cur.assign(asc.rbegin(), asc.rend());
      dehomogenized = true;
    } else if (step.rfind("scale ", 0) == 0) {
      const BigRat r = exact::parse_rational(step.substr(6));
      for (auto& q : cur) q *= r;
    } else {
      throw CorpusError("unknown chart step " + step);
    }
  }
  if (!dehomogenized) throw CorpusError("chart must dehomogenize");
  while (cur.size() > 1 && cur.front() == 0) cur.erase(cur.begin());
  return cur;
}

Derivation derive_case_records(const Corpus& corpus, const CaseRecord& c) {
  return run_steps(corpus, c, [](const std::string&, const std::string&) {});
}

CaseTarget derive_case(const Corpus& corpus, const CaseRecord& c) {
  const Derivation d = run_steps(corpus, c, [](const std::string& where, const std::string& diff) {
    throw DerivationMismatch(where, diff);
  });
  return make_target(c, d);
}

std::vector<CheckRecord> run_case(const Corpus& corpus, const CaseRecord& c, const CaseOptions& options) {
  std::vector<CheckRecord> out;
  auto t0 = Clock::now();
  Derivation d;
  try {
    d = derive_case_records(corpus, c);
  } catch (const std::exception& e) {
    out.push_back(record(c.id + "/derivation", false, "script runs", e.what()));
    return out;
  }
  const double derive_ms = ms_since(t0);
  for (auto& r : d.records) {
    r.runtime_ms = derive_ms / static_cast<double>(d.records.size());
    out.push_back(r);
  }

  std::optional<CaseTarget> target;
  try {
    target = make_target(c, d);
  } catch (const std::exception& e) {
    out.push_back(record(c.id + "/model " + c.curve.label, false, "valid model", e.what()));
  }

  if (target) {
    const Ctx ctx{corpus, c, options, *target, c.id};
    for (const auto& f : c.facts) {
      const std::string type = f.value("type", "");
      auto it = fact_table().find(type);
      t0 = Clock::now();
      const std::size_t before = out.size();
      try {
        if (it == fact_table().end()) throw CorpusError(c.id + ": unknown fact type " + type);
        it->second(ctx, f, out);
      } catch (const std::exception& e) {
        out.resize(before);
        out.push_back(record(c.id + "/" + type, false, "fact evaluates", e.what()));
      }
      const double ms = ms_since(t0);
      for (std::size_t i = before; i < out.size(); ++i) out[i].runtime_ms = ms / static_cast<double>(out.size() - before);
    }
    if (const auto* h = std::get_if<curve::HyperCurve>(&*target)) {
      for (long p : options.extra_primes) {
        const std::string id = c.id + "/#J(F_" + std::to_string(p) + ") Weil band";
        t0 = Clock::now();
        try {
          const long n = curve::jacobian_order(*h, p);
          auto r = record(id, curve::within_weil_bound(n, p), "within Weil band", std::to_string(n));
          r.runtime_ms = ms_since(t0);
          out.push_back(std::move(r));
        } catch (const curve::BadReduction&) {
          out.push_back({id, Status::Undecided, "within Weil band", "bad reduction", 0});
        } catch (const std::invalid_argument& e) {
          out.push_back({id, Status::Undecided, "within Weil band", e.what(), 0});
        }
      }
    }
  }

  for (std::size_t i = 0; i < c.claims.size(); ++i)
    out.push_back({c.id + "/claim " + std::to_string(i + 1), Status::UncheckedClaim, c.claims[i], "not checked", 0});
  return out;
}

std::vector<CheckRecord> run_poly_families(const Corpus& corpus) {
  std::vector<CheckRecord> out;
  for (const auto& fam : corpus.poly_families) {
    const auto t0 = Clock::now();
    const auto chk = search::check_poly_family(fam);
    auto r = record("polyap/" + fam.id, chk.ok(), "forms in progression, all spot checks equal",
                    std::string(chk.symbolic ? "symbolic AP" : "not an AP") + ", " +
                        std::to_string(chk.spot_checks - chk.spot_failures) + "/" + std::to_string(chk.spot_checks) +
                        " spot checks, difference " + chk.difference);
    r.runtime_ms = ms_since(t0);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace apforge::corpus
