#include "apforge/search/search.hpp"

#include "apforge/exact/int128.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace apforge::search {

using exact::i128;

// ---------------------------------------------------------------- values

std::vector<unsigned> Progression::exponents() const {
  std::vector<unsigned> e;
  for (const auto& t : terms) e.push_back(t.l);
  return e;
}

std::vector<BigInt> Progression::values() const {
  std::vector<BigInt> v;
  for (const auto& t : terms) v.push_back(t.h);
  return v;
}

bool Progression::valid() const {
  if (terms.size() < 2) return false;
  if (terms[1].h - terms[0].h != n) return false;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (t.l < 2 || t.eta == 0) return false;
    if (t.eta * exact::pow(t.x, t.l) != t.h) return false;
    if (t.h != terms[0].h + BigInt(static_cast<long>(i)) * n) return false;
  }
  return true;
}

bool Progression::is_constant() const { return n == 0; }

bool canonical_less(const Progression& a, const Progression& b) {
  auto ea = a.exponents(), eb = b.exponents();
  if (ea != eb) return ea < eb;
  for (std::size_t i = 0; i < 2; ++i)
    if (a.terms[i].h != b.terms[i].h) return a.terms[i].h < b.terms[i].h;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].eta != b.terms[i].eta) return a.terms[i].eta < b.terms[i].eta;
    if (a.terms[i].x != b.terms[i].x) return a.terms[i].x < b.terms[i].x;
  }
  return false;
}

std::string to_string(const Progression& p) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < p.terms.size(); ++i) {
    const auto& t = p.terms[i];
    if (i) os << ", ";
    if (t.eta != 1) os << exact::to_string(t.eta) << "*";
    os << "(" << exact::to_string(t.x) << ")^" << t.l;
  }
  os << ") = (";
  for (std::size_t i = 0; i < p.terms.size(); ++i) os << (i ? ", " : "") << exact::to_string(p.terms[i].h);
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- sieve

PowerSieve::PowerSieve() : bits_(6, std::vector<bool>(modulus, false)) {
  for (unsigned l = 2; l <= 7; ++l) {
    auto& b = bits_[l - 2];
    for (std::uint64_t x = 0; x < modulus; ++x) {
      std::uint64_t v = 1;
      for (unsigned i = 0; i < l; ++i) v = v * x % modulus;
      b[v] = true;
    }
  }
}

const PowerSieve& PowerSieve::instance() {
  static const PowerSieve sieve;
  return sieve;
}

bool PowerSieve::admits(std::int64_t v, unsigned l) const {
  if (l < 2 || l > 7) return true;
  std::int64_t r = v % static_cast<std::int64_t>(modulus);
  if (r < 0) r += modulus;
  return bits_[l - 2][static_cast<std::uint32_t>(r)];
}

double PowerSieve::density(unsigned l) const {
  const auto& b = bits_.at(l - 2);
  return static_cast<double>(std::count(b.begin(), b.end(), true)) / modulus;
}

std::optional<BigInt> is_power_value(const BigInt& h, unsigned l) {
  if (l < 1) throw std::invalid_argument("exponent must be positive");
  if (l % 2 == 0 && h < 0) return std::nullopt;
  if (l >= 2 && l <= 7) {
    const long r = static_cast<long>(mpz_fdiv_ui(h.get_mpz_t(), PowerSieve::modulus));
    if (!PowerSieve::instance().admits_residue(static_cast<std::uint32_t>(r), l)) return std::nullopt;
  }
  return exact::int_kth_root(h, l);
}

// ---------------------------------------------------------------- config

long SearchConfig::bound_for(unsigned l) const {
  if (l < bound_by_l.size() && bound_by_l[l] > 0) return bound_by_l[l];
  return default_bound;
}

std::vector<BigInt> twist_set(const std::vector<long>& primes, unsigned l, long cap, bool negative) {
  std::vector<BigInt> out{BigInt(1)};
  for (long p : primes) {
    std::vector<BigInt> next;
    for (const auto& base : out) {
      BigInt v = base;
      for (unsigned e = 0; e < l && v <= cap; ++e) {
        next.push_back(v);
        v *= p;
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (negative && l % 2 == 0) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(-out[i]);
  }
  return out;
}

std::vector<BigInt> twist_set(const std::vector<long>& primes, unsigned l, long cap) {
  return twist_set(primes, l, cap, true);
}

namespace {

struct TermType {
  unsigned l;
  BigInt eta;
  long bound;
};

std::vector<TermType> term_types(const SearchConfig& cfg) {
  std::vector<TermType> types;
  for (unsigned l = cfg.min_l; l <= cfg.max_l; ++l)
    for (const auto& eta : twist_set(cfg.primes, l, cfg.eta_cap, cfg.negative_twists)) types.push_back({l, eta, cfg.bound_for(l)});
  return types;
}

bool position_allows(const SearchConfig& cfg, std::size_t pos, unsigned l) {
  return cfg.exponent_filter.empty() || cfg.exponent_filter[pos] == 0 || cfg.exponent_filter[pos] == l;
}

long range_size(const TermType& t) { return t.l % 2 == 0 ? t.bound + 1 : 2 * t.bound + 1; }
long range_start(const TermType& t) { return t.l % 2 == 0 ? 0 : -t.bound; }

void validate(const SearchConfig& cfg) {
  if (cfg.k < 3) throw std::invalid_argument("progressions need k >= 3");
  if (cfg.min_l < 2 || cfg.max_l < cfg.min_l) throw std::invalid_argument("exponents must satisfy 2 <= min_l <= L");
  if (cfg.max_l > 64) throw std::invalid_argument("exponent bound too large");
  if (!cfg.exponent_filter.empty() && cfg.exponent_filter.size() != cfg.k)
    throw std::invalid_argument("exponent filter length must equal k");
  for (long p : cfg.primes)
    if (p < 2) throw std::invalid_argument("S must consist of primes");
  if (cfg.max_gcd && *cfg.max_gcd < 1) throw std::invalid_argument("gcd cap must be positive");
}

struct Match {
  std::size_t type;
  BigInt x;
};

// Builds every progression from per-position representation lists.
void expand(const std::vector<TermType>& types, const std::vector<std::vector<Match>>& reps, const std::vector<BigInt>& h,
            std::vector<Progression>& out) {
  const std::size_t k = reps.size();
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    Progression p;
    p.n = h[1] - h[0];
    for (std::size_t i = 0; i < k; ++i) {
      const Match& m = reps[i][idx[i]];
      p.terms.push_back({m.x, types[m.type].l, types[m.type].eta, h[i]});
    }
    out.push_back(std::move(p));
    std::size_t pos = k;
    while (pos-- > 0) {
      if (++idx[pos] < reps[pos].size()) break;
      idx[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) break;
  }
}

bool gcd_ok(const BigInt& h0, const BigInt& h1, const std::optional<long>& cap) {
  BigInt g = exact::gcd(h0, h1);
  if (g == 0) return false;
  return !cap || g <= *cap;
}

template <class Int>
struct Kernel {
  const SearchConfig& cfg;
  const std::vector<TermType>& types;
  std::vector<Int> etas;
  std::vector<std::vector<Int>> powers;  // by type: eta * x^l over the x range
  std::vector<std::vector<std::size_t>> by_position;
  const PowerSieve& sieve = PowerSieve::instance();

  Kernel(const SearchConfig& c, const std::vector<TermType>& t) : cfg(c), types(t) {
    for (const auto& ty : types) {
      etas.push_back(static_cast<Int>(exact::to_i128(ty.eta)));
      std::vector<Int> pw;
      const long start = range_start(ty);
      for (long x = start; x < start + range_size(ty); ++x) {
        Int v = 1;
        for (unsigned i = 0; i < ty.l; ++i) v *= x;
        pw.push_back(v * etas.back());
      }
      powers.push_back(std::move(pw));
    }
    by_position.resize(cfg.k);
    for (std::size_t pos = 0; pos < cfg.k; ++pos)
      for (std::size_t i = 0; i < types.size(); ++i)
        if (position_allows(cfg, pos, types[i].l)) by_position[pos].push_back(i);
  }

  std::uint32_t residue(Int q) const {
    Int r = q % static_cast<Int>(PowerSieve::modulus);
    if (r < 0) r += PowerSieve::modulus;
    return static_cast<std::uint32_t>(r);
  }

  // All representations of h at position pos.
  void represent(Int h, std::size_t pos, std::vector<Match>& out) const {
    out.clear();
    for (std::size_t ti : by_position[pos]) {
      const TermType& ty = types[ti];
      const Int eta = etas[ti];
      if (h % eta != 0) continue;
      const Int q = h / eta;
      if (ty.l % 2 == 0 && q < 0) continue;
      if (cfg.use_sieve && ty.l <= 7 && !sieve.admits_residue(residue(q), ty.l)) continue;
      auto root = exact::exact_root128(static_cast<i128>(q), ty.l);
      if (!root) continue;
      const long x = *root;
      if (x > ty.bound || x < -ty.bound) continue;
      out.push_back({ti, BigInt(x)});
    }
  }

  void run(std::vector<Progression>& result) const {
    const std::size_t k = cfg.k;
    for (std::size_t t0 : by_position[0]) {
      for (std::size_t t1 : by_position[1]) {
        const auto& p0 = powers[t0];
        const auto& p1 = powers[t1];
        const long start0 = range_start(types[t0]);
        const long start1 = range_start(types[t1]);
        std::vector<std::vector<Progression>> partial;
#pragma omp parallel
        {
          std::vector<Progression> local;
          std::vector<std::vector<Match>> reps(k);
          std::vector<BigInt> hs(k);
#pragma omp for schedule(dynamic, 64) nowait
          for (long i0 = 0; i0 < static_cast<long>(p0.size()); ++i0) {
            const Int h0 = p0[i0];
            for (std::size_t i1 = 0; i1 < p1.size(); ++i1) {
              const Int h1 = p1[i1];
              const Int n = h1 - h0;
              bool ok = true;
              for (std::size_t pos = 2; pos < k && ok; ++pos) {
                represent(h0 + static_cast<Int>(pos) * n, pos, reps[pos]);
                ok = !reps[pos].empty();
              }
              if (!ok) continue;
              const BigInt b0 = exact::to_bigint(static_cast<i128>(h0));
              const BigInt b1 = exact::to_bigint(static_cast<i128>(h1));
              if (!gcd_ok(b0, b1, cfg.max_gcd)) continue;
              reps[0] = {{t0, BigInt(start0 + i0)}};
              reps[1] = {{t1, BigInt(start1 + static_cast<long>(i1))}};
              for (std::size_t pos = 0; pos < k; ++pos)
                hs[pos] = b0 + BigInt(static_cast<long>(pos)) * (b1 - b0);
              expand(types, reps, hs, local);
            }
          }
#pragma omp critical
          partial.push_back(std::move(local));
        }
        for (auto& part : partial) result.insert(result.end(), part.begin(), part.end());
      }
    }
  }
};

BigInt max_magnitude(const SearchConfig& cfg, const std::vector<TermType>& types) {
  BigInt m = 0;
  for (const auto& t : types) {
    BigInt v = abs(t.eta) * exact::pow(BigInt(t.bound), t.l);
    if (v > m) m = v;
  }
  // |h_i| <= |h0| + (k-1)(|h0| + |h1|)
  return m * (2 * static_cast<long>(cfg.k) - 1);
}

void finish(std::vector<Progression>& out) {
  std::sort(out.begin(), out.end(), canonical_less);
  for (const auto& p : out)
    if (!p.valid()) throw std::logic_error("search emitted an invalid progression: " + to_string(p));
}

}  // namespace

double estimate_iterations(const SearchConfig& cfg) {
  validate(cfg);
  auto types = term_types(cfg);
  double total = 0;
  for (const auto& a : types) {
    if (!position_allows(cfg, 0, a.l)) continue;
    for (const auto& b : types)
      if (position_allows(cfg, 1, b.l)) total += static_cast<double>(range_size(a)) * range_size(b);
  }
  return total;
}

std::vector<Progression> search_general(const SearchConfig& cfg) {
  const double est = estimate_iterations(cfg);
  if (est > cfg.iteration_ceiling) {
    std::ostringstream os;
    os << "estimated " << est << " pair iterations exceed the ceiling " << cfg.iteration_ceiling;
    throw ResourceLimit(os.str());
  }
  auto types = term_types(cfg);
  const BigInt mag = max_magnitude(cfg, types);
  std::vector<Progression> out;
  const std::size_t bits = mpz_sizeinbase(mag.get_mpz_t(), 2);
  if (bits <= 61) {
    Kernel<std::int64_t>(cfg, types).run(out);
  } else if (bits <= 124) {
    Kernel<i128>(cfg, types).run(out);
  } else {
    return search_general_reference(cfg);
  }
  finish(out);
  return out;
}

std::vector<Progression> search_general_reference(const SearchConfig& cfg) {
  const double est = estimate_iterations(cfg);
  if (est > cfg.iteration_ceiling) throw ResourceLimit("estimated iteration count exceeds the ceiling");
  auto types = term_types(cfg);
  const std::size_t k = cfg.k;
  std::vector<Progression> out;
  auto represent = [&](const BigInt& h, std::size_t pos, std::vector<Match>& reps) {
    reps.clear();
    for (std::size_t ti = 0; ti < types.size(); ++ti) {
      const auto& ty = types[ti];
      if (!position_allows(cfg, pos, ty.l)) continue;
      if (h % ty.eta != 0) continue;
      auto x = exact::int_kth_root(BigInt(h / ty.eta), ty.l);
      if (!x || abs(*x) > ty.bound) continue;
      reps.push_back({ti, *x});
    }
  };
  std::vector<std::vector<Match>> reps(k);
  std::vector<BigInt> hs(k);
  for (std::size_t t0 = 0; t0 < types.size(); ++t0) {
    if (!position_allows(cfg, 0, types[t0].l)) continue;
    for (std::size_t t1 = 0; t1 < types.size(); ++t1) {
      if (!position_allows(cfg, 1, types[t1].l)) continue;
      for (long x0 = range_start(types[t0]); x0 < range_start(types[t0]) + range_size(types[t0]); ++x0) {
        for (long x1 = range_start(types[t1]); x1 < range_start(types[t1]) + range_size(types[t1]); ++x1) {
          const BigInt h0 = types[t0].eta * exact::pow(BigInt(x0), types[t0].l);
          const BigInt h1 = types[t1].eta * exact::pow(BigInt(x1), types[t1].l);
          if (!gcd_ok(h0, h1, cfg.max_gcd)) continue;
          bool ok = true;
          for (std::size_t pos = 0; pos < k; ++pos) hs[pos] = h0 + BigInt(static_cast<long>(pos)) * (h1 - h0);
          for (std::size_t pos = 2; pos < k && ok; ++pos) {
            represent(hs[pos], pos, reps[pos]);
            ok = !reps[pos].empty();
          }
          if (!ok) continue;
          reps[0] = {{t0, BigInt(x0)}};
          reps[1] = {{t1, BigInt(x1)}};
          expand(types, reps, hs, out);
        }
      }
    }
  }
  finish(out);
  return out;
}

SearchConfig theorem3_config(long bound_squares, long bound_cubes) {
  if (bound_squares < 1 || bound_cubes < 1) throw std::invalid_argument("bounds must be positive");
  SearchConfig cfg;
  cfg.k = 4;
  cfg.min_l = 2;
  cfg.max_l = 3;
  cfg.bound_by_l = {0, 0, bound_squares, bound_cubes};
  cfg.max_gcd = 1;
  cfg.negative_twists = false;
  return cfg;
}

std::vector<Progression> search_theorem3(long bound_squares, long bound_cubes) {
  return search_general(theorem3_config(bound_squares, bound_cubes));
}

std::vector<CubicTwin> search_cubic_twin(long bound, bool diagonal_only) {
  if (bound < 1) throw std::invalid_argument("bound must be positive");
  std::vector<std::vector<CubicTwin>> rows(2 * bound + 1);
#pragma omp parallel for schedule(dynamic, 8)
  for (long x = -bound; x <= bound; ++x) {
    if (x == 0) continue;
    for (long y = diagonal_only ? x : -bound; y <= (diagonal_only ? x : bound); ++y) {
      if (y == 0) continue;
      const i128 s = static_cast<i128>(x) * x * x + static_cast<i128>(y) * y * y;
      if (s % 2 != 0) continue;
      auto z = exact::exact_root128(s / 2, 3);
      if (!z || *z == 0 || *z > bound || *z < -bound) continue;
      if (std::gcd(std::gcd(x, y), *z) != 1) continue;
      rows[x + bound].push_back({x, y, *z});
    }
  }
  std::vector<CubicTwin> out;
  for (auto& r : rows) out.insert(out.end(), r.begin(), r.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace apforge::search
