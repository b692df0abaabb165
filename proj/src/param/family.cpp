#include "apforge/param/family.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

namespace apforge::param {

namespace {

std::string term(long coeff, const char* var, bool first) {
  std::ostringstream os;
  if (coeff < 0) os << (first ? "-" : " - ");
  else if (!first) os << " + ";
  long m = coeff < 0 ? -coeff : coeff;
  if (m != 1) os << m;
  os << var;
  return os.str();
}

const Branch& branch_at(const ParamFamily& f, unsigned branch) {
  if (branch < 1 || branch > f.branches.size())
    throw std::out_of_range("family " + f.id + " has no branch " + std::to_string(branch));
  return f.branches[branch - 1];
}

BinaryForm c_form(const ParamFamily& f, unsigned branch) {
  const Branch& br = branch_at(f, branch);
  if (br.c_pinned) return *br.c_pinned;
  auto root = exact::form_exact_root(combination(f, branch), f.k);
  if (!root) throw std::logic_error("family " + f.id + " combination is not a perfect power");
  return *root;
}

BigInt integral(const BigRat& v, const char* what, const ParamFamily& f) {
  if (!exact::is_integer(v))
    throw IntegralityViolation("family " + f.id + ": " + what + " = " + exact::to_string(v) + " is not an integer");
  return v.get_num();
}

// Smallest r >= 0 with r^k >= n.
long ceil_root(long n, unsigned k) {
  long r = 0;
  auto pw = [k](long v) {
    long p = 1;
    for (unsigned i = 0; i < k; ++i) p *= v;
    return p;
  };
  while (pw(r) < n) ++r;
  return r;
}

using Key = std::pair<long, long>;

struct Coverage {
  std::set<Key> main;
  std::set<Key> opposite;
};

long to_long(const BigRat& v) { return v.get_num().get_si(); }

Coverage coverage(const ParamFamily& f, long radius) {
  Coverage cov;
  for (long x = -radius; x <= radius; ++x) {
    for (long y = -radius; y <= radius; ++y) {
      if (std::gcd(x, y) != 1) continue;
      const bool same = ((x - y) % 2) == 0;
      for (const auto& br : f.branches) {
        BigRat a = abs(BigRat(br.a.eval(BigRat(x), BigRat(y))));
        BigRat b = abs(BigRat(br.b.eval(BigRat(x), BigRat(y))));
        if (!f.same_parity || same) {
          cov.main.insert({to_long(a), to_long(b)});
          continue;
        }
        // Other parity class: double the triple, then make it primitive.
        BigInt a2 = BigRat(2 * a).get_num(), b2 = BigRat(2 * b).get_num();
        BigInt g = exact::gcd(a2, b2);
        cov.opposite.insert({BigInt(a2 / g).get_si(), BigInt(b2 / g).get_si()});
      }
    }
  }
  return cov;
}

std::vector<CoverEntry> brute_force(const ParamFamily& f, long bound, bool parallel) {
  std::vector<std::vector<CoverEntry>> rows(bound + 1);
  auto scan_row = [&](long a) {
    for (long b = 0; b <= bound; ++b) {
      if (a == 0 && b == 0) continue;
      const BigInt n = BigInt(f.A) * a * a + BigInt(f.B) * b * b;
      if (n % f.C != 0) continue;
      auto c = exact::int_kth_root(BigInt(n / f.C), f.k);
      if (!c) continue;
      if (exact::gcd(exact::gcd(BigInt(a), BigInt(b)), *c) != 1) continue;
      rows[a].push_back({a, b, c->get_si()});
    }
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (long a = 0; a <= bound; ++a) scan_row(a);
  } else {
    for (long a = 0; a <= bound; ++a) scan_row(a);
  }
  std::vector<CoverEntry> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  return out;
}

void check_bound(long bound, long max_bound) {
  if (bound < 1 || bound > max_bound)
    throw std::invalid_argument("cover bound must lie in [1, " + std::to_string(max_bound) + "]");
}

}  // namespace

std::string ParamFamily::equation() const {
  std::ostringstream os;
  if (A < 0) os << term(B, "b^2", true) << term(A, "a^2", false);
  else os << term(A, "a^2", true) << term(B, "b^2", false);
  os << " = " << (C == 1 ? "" : std::to_string(C)) << "c^" << k;
  return os.str();
}

BinaryForm combination(const ParamFamily& f, unsigned branch) {
  const Branch& br = branch_at(f, branch);
  BinaryForm lhs = br.a.pow(2).scaled(BigRat(f.A)) + br.b.pow(2).scaled(BigRat(f.B));
  return exact::form_divide(lhs, BigRat(f.C));
}

TernarySolution param_eval(const ParamFamily& f, unsigned branch, int sign_a, int sign_b, long x, long y) {
  if ((sign_a != 1 && sign_a != -1) || (sign_b != 1 && sign_b != -1))
    throw std::invalid_argument("signs must be +1 or -1");
  const Branch& br = branch_at(f, branch);
  const BigRat bx(x), by(y);
  TernarySolution s;
  s.a = integral(br.a.eval(bx, by) * sign_a, "a", f);
  s.b = integral(br.b.eval(bx, by) * sign_b, "b", f);
  s.c = integral(c_form(f, branch).eval(bx, by), "c", f);
  return s;
}

IdentityReport param_verify_identity(const ParamFamily& f, unsigned branch) {
  const Branch& br = branch_at(f, branch);
  BinaryForm comb = combination(f, branch);
  IdentityReport rep{false, exact::form_exact_root(comb, f.k), ""};
  if (!rep.derived_c) {
    rep.detail = "combination " + exact::form_to_string(comb) + " is not a perfect power";
    return rep;
  }
  if (br.c_pinned) {
    if (!(*rep.derived_c == *br.c_pinned)) {
      rep.detail = "derived c differs from pinned: " + exact::form_diff(*br.c_pinned, *rep.derived_c);
      return rep;
    }
    if (!(br.c_pinned->pow(f.k) == comb)) {
      rep.detail = "pinned c does not reproduce the combination";
      return rep;
    }
  }
  rep.holds = true;
  rep.detail = "c = " + exact::form_to_string(*rep.derived_c);
  return rep;
}

long cover_radius(const ParamFamily& f, long bound) {
  if (f.k == 3) return ceil_root(6 * bound, 3) + 2;
  return ceil_root(3 * bound, 2) + 2;
}

CoverReport param_cover_check(const ParamFamily& f, long bound, long max_bound) {
  check_bound(bound, max_bound);
  CoverReport rep;
  rep.family = f.id;
  rep.bound = bound;
  rep.radius = cover_radius(f, bound);
  std::vector<CoverEntry> sols = brute_force(f, bound, true);
  rep.solutions = sols.size();

  Coverage cov = coverage(f, rep.radius);
  std::vector<CoverEntry> missing;
  for (const auto& s : sols) {
    if (cov.main.count({s.a, s.b})) ++rep.matched;
    else missing.push_back(s);
  }
  if (!missing.empty()) {
    rep.radius_doubled = true;
    cov = coverage(f, 2 * rep.radius);
    for (const auto& s : missing) {
      if (cov.main.count({s.a, s.b})) ++rep.matched;
      else if (cov.opposite.count({s.a, s.b})) rep.opposite_convention.push_back(s);
      else rep.unmatched.push_back(s);
    }
  }
  return rep;
}

CoverReport param_cover_check_reference(const ParamFamily& f, long bound, long max_bound) {
  check_bound(bound, max_bound);
  CoverReport rep;
  rep.family = f.id;
  rep.bound = bound;
  rep.radius = cover_radius(f, bound);
  std::vector<CoverEntry> sols = brute_force(f, bound, false);
  rep.solutions = sols.size();
  // 0: strict parity, 1: opposite parity
  auto hit = [&](const CoverEntry& s, long radius, int mode) {
    for (long x = -radius; x <= radius; ++x)
      for (long y = -radius; y <= radius; ++y) {
        if (std::gcd(x, y) != 1) continue;
        const bool same = ((x - y) % 2) == 0;
        if (f.same_parity && (mode == 0) != same) continue;
        if (!f.same_parity && mode == 1) return false;
        for (const auto& br : f.branches) {
          BigRat a = abs(BigRat(br.a.eval(BigRat(x), BigRat(y))));
          BigRat b = abs(BigRat(br.b.eval(BigRat(x), BigRat(y))));
          if (mode == 1) {
            BigInt a2 = BigRat(2 * a).get_num(), b2 = BigRat(2 * b).get_num();
            BigInt g = exact::gcd(a2, b2);
            a = BigRat(a2 / g);
            b = BigRat(b2 / g);
          }
          if (a == s.a && b == s.b) return true;
        }
      }
    return false;
  };
  for (const auto& s : sols) {
    if (hit(s, rep.radius, 0)) {
      ++rep.matched;
      continue;
    }
    rep.radius_doubled = true;
    if (hit(s, 2 * rep.radius, 0)) ++rep.matched;
    else if (hit(s, 2 * rep.radius, 1)) rep.opposite_convention.push_back(s);
    else rep.unmatched.push_back(s);
  }
  return rep;
}

}  // namespace apforge::param
