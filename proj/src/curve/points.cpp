#include "apforge/curve/points.hpp"

#include "apforge/exact/int128.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>

namespace apforge::curve {

using exact::i128;
using exact::u128;

namespace {

std::size_t even_weight(std::size_t degree) { return degree % 2 == 0 ? degree : degree + 1; }

unsigned infinity_points(const RatPoly& f) {
  if (f.degree() % 2 == 1) return 1;
  return exact::rat_kth_root(f.leading(), 2) ? 2 : 0;
}

struct SquareFilter {
  std::array<bool, 64> mod64{};
  std::vector<bool> mod_m;
  static constexpr std::uint64_t m = 63ULL * 65 * 11;  // 45045
  std::uint64_t two64_mod_m;

  SquareFilter() : mod_m(m, false) {
    for (std::uint64_t i = 0; i < 64; ++i) mod64[i * i % 64] = true;
    for (std::uint64_t i = 0; i < m; ++i) mod_m[i * i % m] = true;
    u128 t = (static_cast<u128>(1) << 64) % m;
    two64_mod_m = static_cast<std::uint64_t>(t);
  }

  bool maybe_square(u128 v) const {
    if (!mod64[static_cast<std::uint64_t>(v) & 63]) return false;
    const std::uint64_t hi = static_cast<std::uint64_t>(v >> 64) % m;
    const std::uint64_t lo = static_cast<std::uint64_t>(v) % m;
    return mod_m[(hi * two64_mod_m + lo) % m];
  }
};

const SquareFilter& square_filter() {
  static const SquareFilter filter;
  return filter;
}

void push_points(std::vector<RationalPoint>& out, long r, long s, const BigInt& root, const BigInt& denom) {
  BigRat x(r, s);
  x.canonicalize();
  BigRat y(root, denom);
  y.canonicalize();
  out.push_back({x, y});
  if (sgn(y) != 0) out.push_back({x, -y});
}

void finish(PointSet& set) {
  std::sort(set.affine.begin(), set.affine.end(), [](const RationalPoint& a, const RationalPoint& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
}

bool fits_kernel(const std::vector<BigInt>& model, long height, std::size_t w) {
  BigInt sum = 0;
  for (const auto& c : model) sum += abs(c);
  BigInt bound = sum * exact::pow(BigInt(height), w);
  return mpz_sizeinbase(bound.get_mpz_t(), 2) <= 124;
}

}  // namespace

PointSet rational_points_search_reference(const RatPoly& f, long height) {
  if (height < 1) throw std::invalid_argument("height bound must be positive");
  auto [model, scale] = integral_square_model(f);
  const std::size_t deg = f.degree();
  const std::size_t w = even_weight(deg);
  PointSet set;
  set.at_infinity = infinity_points(f);
  for (long s = 1; s <= height; ++s) {
    for (long r = -height; r <= height; ++r) {
      if (std::gcd(r, s) != 1) continue;
      BigInt v = 0;
      for (std::size_t i = 0; i <= deg; ++i) v += model[i] * exact::pow(BigInt(r), i) * exact::pow(BigInt(s), w - i);
      if (sgn(v) < 0 || !mpz_perfect_square_p(v.get_mpz_t())) continue;
      BigInt root = sqrt(v);
      push_points(set.affine, r, s, root, scale * exact::pow(BigInt(s), w / 2));
    }
  }
  finish(set);
  return set;
}

PointSet rational_points_search(const RatPoly& f, long height) {
  if (height < 1) throw std::invalid_argument("height bound must be positive");
  auto [model, scale] = integral_square_model(f);
  const std::size_t deg = f.degree();
  const std::size_t w = even_weight(deg);
  if (!fits_kernel(model, height, w)) return rational_points_search_reference(f, height);

  std::vector<i128> e(deg + 1);
  for (std::size_t i = 0; i <= deg; ++i) e[i] = exact::to_i128(model[i]);
  const SquareFilter& filter = square_filter();

  PointSet set;
  set.at_infinity = infinity_points(f);
  std::vector<std::vector<RationalPoint>> partial;

#pragma omp parallel
  {
    std::vector<RationalPoint> local;
    std::vector<i128> t(deg + 1);
#pragma omp for schedule(dynamic, 16) nowait
    for (long s = 1; s <= height; ++s) {
      // t_i = e_i s^(w-i); V(r) = sum t_i r^i
      i128 spow = 1;
      for (std::size_t k = 0; k < w - deg; ++k) spow *= s;
      for (std::size_t i = deg + 1; i-- > 0;) {
        t[i] = e[i] * spow;
        spow *= s;
      }
      for (long r = -height; r <= height; ++r) {
        i128 v = t[deg];
        for (std::size_t i = deg; i-- > 0;) v = v * r + t[i];
        if (v < 0) continue;
        const u128 uv = static_cast<u128>(v);
        if (uv != 0 && !filter.maybe_square(uv)) continue;
        const std::uint64_t root = exact::isqrt128(uv);
        if (static_cast<u128>(root) * root != uv) continue;
        if (std::gcd(r, s) != 1) continue;
        push_points(local, r, s, BigInt(static_cast<unsigned long>(root)), scale * exact::pow(BigInt(s), w / 2));
      }
    }
#pragma omp critical
    partial.push_back(std::move(local));
  }
  for (auto& part : partial) set.affine.insert(set.affine.end(), part.begin(), part.end());
  finish(set);
  return set;
}

std::string to_string(LocalStatus s) {
  switch (s) {
    case LocalStatus::Solvable: return "solvable";
    case LocalStatus::NotSolvable: return "not-solvable";
    case LocalStatus::Undecided: return "undecided";
  }
  return "?";
}

namespace {

using IntPoly = std::vector<BigInt>;  // ascending

long valuation_or(const BigInt& v, long p, long none) {
  if (sgn(v) == 0) return none;
  return static_cast<long>(exact::valuation(v, BigInt(p)));
}

bool is_padic_square(const BigInt& g, long p) {
  const BigInt bp(p);
  unsigned v = exact::valuation(g, bp);
  if (v % 2 != 0) return false;
  BigInt u = g / exact::pow(bp, v);
  if (p == 2) return mpz_fdiv_ui(u.get_mpz_t(), 8) == 1;
  return mpz_legendre(u.get_mpz_t(), bp.get_mpz_t()) == 1;
}

// G(j + p u)
IntPoly shift_scale(const IntPoly& g, long j, long p) {
  IntPoly r = g;
  const std::size_t n = r.size();
  // Taylor shift by j (synthetic division repeated).
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 1; i > k; --i) r[i - 1] += r[i] * j;
  BigInt pk = 1;
  for (std::size_t i = 0; i < n; ++i) {
    r[i] *= pk;
    pk *= p;
  }
  return r;
}

LocalStatus refine(const IntPoly& g, long p, unsigned depth, unsigned limit) {
  const BigInt& g0 = g[0];
  if (sgn(g0) == 0 || is_padic_square(g0, p)) return LocalStatus::Solvable;
  const long v0 = valuation_or(g0, p, 0);
  long vmin = -1;
  for (std::size_t i = 1; i < g.size(); ++i) {
    long v = valuation_or(g[i], p, -1);
    if (v >= 0 && (vmin < 0 || v < vmin)) vmin = v;
  }
  const long margin = p == 2 ? 3 : 1;
  // Every value in the class shares the square class of g(0).
  if (vmin < 0 || vmin >= v0 + margin) return LocalStatus::NotSolvable;
  if (depth >= limit) return LocalStatus::Undecided;
  bool undecided = false;
  for (long j = 0; j < p; ++j) {
    LocalStatus s = refine(shift_scale(g, j, p), p, depth + 1, limit);
    if (s == LocalStatus::Solvable) return s;
    if (s == LocalStatus::Undecided) undecided = true;
  }
  return undecided ? LocalStatus::Undecided : LocalStatus::NotSolvable;
}

}  // namespace

LocalStatus locally_solvable(const RatPoly& f, long p) {
  if (p < 2) throw std::invalid_argument("locally_solvable needs a prime");
  auto [model, scale] = integral_square_model(f);
  (void)scale;
  RatPoly m(std::vector<BigRat>(model.begin(), model.end()));
  BigInt disc = exact::uni_resultant(m, m.derivative()).get_num();
  const unsigned limit = 2 * static_cast<unsigned>(valuation_or(disc, p, 0)) + 3;

  const std::size_t w = even_weight(f.degree());
  LocalStatus finite = refine(model, p, 0, limit);
  if (finite == LocalStatus::Solvable) return finite;
  // x = 1/u with u in pZ_p: y^2 = u^-w rev(u).
  IntPoly rev(w + 1, BigInt(0));
  for (std::size_t i = 0; i < model.size(); ++i) rev[w - i] = model[i];
  IntPoly at_infinity = shift_scale(rev, 0, p);
  LocalStatus inf = refine(at_infinity, p, 0, limit);
  if (inf == LocalStatus::Solvable) return inf;
  if (finite == LocalStatus::Undecided || inf == LocalStatus::Undecided) return LocalStatus::Undecided;
  return LocalStatus::NotSolvable;
}

unsigned real_root_count(const RatPoly& f) {
  std::vector<RatPoly> seq{f, f.derivative()};
  while (!seq.back().is_zero() && seq.back().degree() > 0) {
    RatPoly r = exact::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(-r);
  }
  auto changes = [&](bool at_plus) {
    int count = 0, last = 0;
    for (const auto& p : seq) {
      if (p.is_zero()) continue;
      int s = sgn(p.leading());
      if (!at_plus && p.degree() % 2 == 1) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return static_cast<unsigned>(changes(false) - changes(true));
}

bool locally_solvable_real(const RatPoly& f) {
  if (f.degree() % 2 == 1 || sgn(f.leading()) > 0) return true;
  return real_root_count(f) > 0;
}

}  // namespace apforge::curve
