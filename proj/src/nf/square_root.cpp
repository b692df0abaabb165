// Square roots in a number field: approximate the root in every complex
// embedding, solve for power-basis coordinates, round to rationals and verify
// exactly. A negative answer needs a prime where the element reduces to a
// non-residue.

#include "apforge/nf/number_field.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>

namespace apforge::nf {

namespace {

namespace mp = boost::multiprecision;

template <unsigned Bits>
using Real = mp::number<mp::cpp_bin_float<Bits, mp::digit_base_2>, mp::et_off>;

template <class R>
struct Cx {
  R re{0}, im{0};
  friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend Cx operator/(const Cx& a, const Cx& b) {
    R den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
  }
  R abs() const { return mp::sqrt(re * re + im * im); }
};

template <class R>
Cx<R> csqrt(const Cx<R>& z) {
  R r = z.abs();
  R re = mp::sqrt((r + z.re) / 2);
  R im = mp::sqrt((r - z.re) / 2);
  if (z.im < 0) im = -im;
  return {re, im};
}

template <class R>
R to_real(const BigRat& q) {
  // Exact decimal strings round correctly at the target precision.
  R num(q.get_num().get_str());
  R den(q.get_den().get_str());
  return num / den;
}

template <class R>
Cx<R> eval_poly(const std::vector<R>& coeffs, const Cx<R>& z) {
  Cx<R> acc{coeffs.back(), R(0)};
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) acc = acc * z + Cx<R>{coeffs[i], R(0)};
  return acc;
}

// Roots of the monic minpoly: Durand-Kerner in long double, then Newton
// refinement at the working precision.
template <class R>
std::vector<Cx<R>> embedding_roots(const RatPoly& m, unsigned bits) {
  const std::size_t d = m.degree();
  std::vector<std::complex<long double>> z(d);
  std::vector<long double> cd(d + 1);
  for (std::size_t i = 0; i <= d; ++i) cd[i] = m.coeffs()[i].get_d();
  auto p_ld = [&](std::complex<long double> x) {
    std::complex<long double> acc = cd[d];
    for (std::size_t i = d; i-- > 0;) acc = acc * x + cd[i];
    return acc;
  };
  long double radius = 1;
  for (std::size_t i = 0; i < d; ++i) radius = std::max(radius, 1 + std::fabs(cd[i]));
  const std::complex<long double> seed(0.4L, 0.9L);
  for (std::size_t k = 0; k < d; ++k) z[k] = std::pow(seed, static_cast<int>(k)) * radius * 0.5L;
  for (int iter = 0; iter < 5000; ++iter) {
    long double delta = 0;
    for (std::size_t k = 0; k < d; ++k) {
      std::complex<long double> den = 1;
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) den *= z[k] - z[j];
      std::complex<long double> step = p_ld(z[k]) / den;
      z[k] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-17L) break;
  }

  std::vector<R> c(d + 1), dc(d);
  for (std::size_t i = 0; i <= d; ++i) c[i] = to_real<R>(m.coeffs()[i]);
  for (std::size_t i = 1; i <= d; ++i) dc[i - 1] = c[i] * R(static_cast<long>(i));
  std::vector<Cx<R>> roots(d);
  for (std::size_t k = 0; k < d; ++k) {
    Cx<R> x{R(static_cast<double>(z[k].real())), R(static_cast<double>(z[k].imag()))};
    // Doubling precision per step; bits/32 + 8 steps is plenty from 60 bits.
    for (unsigned it = 0; it < bits / 32 + 8; ++it) x = x - eval_poly(c, x) / eval_poly(dc, x);
    roots[k] = x;
  }
  return roots;
}

template <class R>
std::optional<std::vector<Cx<R>>> solve_linear(std::vector<std::vector<Cx<R>>> a, std::vector<Cx<R>> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (a[r][col].abs() > a[piv][col].abs()) piv = r;
    if (a[piv][col].abs() == 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      Cx<R> f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
      b[r] = b[r] - f * b[col];
    }
  }
  std::vector<Cx<R>> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Cx<R> s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s = s - a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return x;
}

template <class R>
BigRat exact_value(const R& x, unsigned bits) {
  if (x == 0) return 0;
  int e = 0;
  R m = mp::frexp(x, &e);
  R scaled = mp::ldexp(m, static_cast<int>(bits));
  mp::cpp_int mant = static_cast<mp::cpp_int>(mp::trunc(scaled));
  BigRat q(BigInt(mant.str()));
  const int shift = e - static_cast<int>(bits);
  if (shift >= 0) q *= BigRat(BigInt(1) << static_cast<mp_bitcnt_t>(shift));
  else q /= BigRat(BigInt(1) << static_cast<mp_bitcnt_t>(-shift));
  return q;
}

// First continued-fraction convergent within tol of q.
std::optional<BigRat> reconstruct(const BigRat& q, const BigRat& tol) {
  BigInt h1 = 1, h2 = 0, k1 = 0, k2 = 1;
  BigRat x = q;
  for (int step = 0; step < 400; ++step) {
    BigInt a;
    mpz_fdiv_q(a.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    BigInt h = a * h1 + h2;
    BigInt k = a * k1 + k2;
    BigRat conv(h, k);
    conv.canonicalize();
    if (abs(BigRat(q - conv)) <= tol) return conv;
    BigRat frac = x - BigRat(a);
    if (sgn(frac) == 0) return conv;
    x = 1 / frac;
    h2 = h1;
    h1 = h;
    k2 = k1;
    k1 = k;
  }
  return std::nullopt;
}

template <unsigned Bits>
std::optional<FieldElem> recover_root(const FieldElem& a) {
  using R = Real<Bits>;
  const FieldRef& field = a.field();
  const std::size_t d = field->degree();
  auto roots = embedding_roots<R>(field->minpoly(), Bits);

  std::vector<R> coords(d);
  for (std::size_t i = 0; i < d; ++i) coords[i] = to_real<R>(a.coords()[i]);
  std::vector<Cx<R>> sq(d);
  for (std::size_t i = 0; i < d; ++i) sq[i] = csqrt(eval_poly(coords, roots[i]));

  std::vector<std::vector<Cx<R>>> vander(d, std::vector<Cx<R>>(d));
  for (std::size_t i = 0; i < d; ++i) {
    Cx<R> p{R(1), R(0)};
    for (std::size_t j = 0; j < d; ++j) {
      vander[i][j] = p;
      p = p * roots[i];
    }
  }

  const BigRat tol = BigRat(1) / BigRat(BigInt(1) << static_cast<mp_bitcnt_t>(Bits * 5 / 8));
  const R imag_tol = mp::ldexp(R(1), -static_cast<int>(Bits / 2));
  // Signs relative to the first embedding; the global sign is irrelevant.
  for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
    std::vector<Cx<R>> rhs(d);
    for (std::size_t i = 0; i < d; ++i) {
      bool flip = i > 0 && ((mask >> (i - 1)) & 1u);
      rhs[i] = flip ? Cx<R>{-sq[i].re, -sq[i].im} : sq[i];
    }
    auto sol = solve_linear(vander, rhs);
    if (!sol) continue;
    bool real = true;
    for (const auto& c : *sol)
      if (mp::abs(c.im) > imag_tol * (1 + mp::abs(c.re))) real = false;
    if (!real) continue;
    std::vector<BigRat> cand(d);
    bool ok = true;
    for (std::size_t j = 0; j < d && ok; ++j) {
      BigRat q = exact_value((*sol)[j].re, Bits);
      BigRat scale = abs(q) > 1 ? BigRat(abs(q)) : BigRat(1);
      auto r = reconstruct(q, tol * scale);
      if (!r) ok = false;
      else cand[j] = *r;
    }
    if (!ok) continue;
    FieldElem b(field, cand);
    if (b * b == a) return b;
  }
  return std::nullopt;
}

std::optional<FieldElem> recover_at(const FieldElem& a, unsigned bits) {
  switch (bits) {
    case 64: return recover_root<64>(a);
    case 128: return recover_root<128>(a);
    case 256: return recover_root<256>(a);
    case 512: return recover_root<512>(a);
    case 1024: return recover_root<1024>(a);
    default: throw std::invalid_argument("unsupported precision step");
  }
}

std::vector<long> first_primes(unsigned count) {
  std::vector<long> primes;
  for (long n = 2; primes.size() < count; ++n) {
    bool prime = true;
    for (long p : primes) {
      if (p * p > n) break;
      if (n % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(n);
  }
  return primes;
}

long mod_of(const BigRat& q, long p) {
  // q is p-integral by the caller's checks.
  BigInt num = q.get_num() % p;
  BigInt den = q.get_den() % p;
  long n = num.get_si();
  long dd = den.get_si();
  if (n < 0) n += p;
  if (dd < 0) dd += p;
  // dd^(p-2) mod p
  long inv = 1, base = dd, e = p - 2;
  while (e > 0) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return n * inv % p;
}

bool p_divides_denominator(const BigRat& q, long p) { return mpz_divisible_ui_p(q.get_den().get_mpz_t(), p) != 0; }

long legendre(long v, long p) {
  v %= p;
  if (v < 0) v += p;
  if (v == 0) return 0;
  long r = 1, base = v, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

using ModPoly = std::vector<long>;  // ascending, length d

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& m, long p) {
  const std::size_t d = m.size() - 1;
  std::vector<long> r(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (std::size_t i = 2 * d - 2; i >= d; --i) {
    long c = r[i];
    r[i] = 0;
    for (std::size_t j = 0; j < d; ++j) r[i - d + j] = ((r[i - d + j] - c * m[j]) % p + p) % p;
  }
  r.resize(d);
  return r;
}

std::optional<std::string> modular_witness(const FieldElem& a, unsigned prime_count) {
  const FieldRef& field = a.field();
  const std::size_t d = field->degree();
  const auto& m = field->minpoly().coeffs();
  const BigRat& disc = field->discriminant_resultant();
  for (long p : first_primes(prime_count)) {
    if (p == 2) continue;
    bool usable = mpz_divisible_ui_p(disc.get_num().get_mpz_t(), p) == 0;
    for (const auto& c : m) usable = usable && !p_divides_denominator(c, p);
    for (const auto& c : a.coords()) usable = usable && !p_divides_denominator(c, p);
    if (!usable) continue;
    ModPoly mm(d + 1), aa(d);
    for (std::size_t i = 0; i <= d; ++i) mm[i] = mod_of(m[i], p);
    for (std::size_t i = 0; i < d; ++i) aa[i] = mod_of(a.coords()[i], p);

    bool has_root = false;
    for (long r = 0; r < p; ++r) {
      long mv = 0, av = 0;
      for (std::size_t i = d + 1; i-- > 0;) mv = (mv * r + mm[i]) % p;
      if (mv != 0) continue;
      has_root = true;
      for (std::size_t i = d; i-- > 0;) av = (av * r + aa[i]) % p;
      if (legendre(av, p) == -1) {
        std::ostringstream os;
        os << "non-residue modulo the degree-1 prime above " << p << " (a = " << r << ")";
        return os.str();
      }
    }
    if (!has_root && d <= 3) {
      // No linear factor and degree <= 3: the reduction is a field F_{p^d}.
      bool nonzero = false;
      for (long c : aa) nonzero = nonzero || c != 0;
      if (!nonzero) continue;
      BigInt e = (exact::pow(BigInt(p), static_cast<unsigned long>(d)) - 1) / 2;
      ModPoly result(d, 0);
      result[0] = 1;
      ModPoly base = aa;
      while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = mulmod(result, base, mm, p);
        base = mulmod(base, base, mm, p);
        e >>= 1;
      }
      bool minus_one = result[0] == p - 1;
      for (std::size_t i = 1; i < d; ++i) minus_one = minus_one && result[i] == 0;
      if (minus_one) {
        std::ostringstream os;
        os << "non-square in the residue field of degree " << d << " at " << p;
        return os.str();
      }
    }
  }
  return std::nullopt;
}

}  // namespace

SquareResult nf_is_square(const FieldElem& a, const SquareOptions& options) {
  if (a.is_zero()) throw std::domain_error("square test of zero");
  for (unsigned bits = options.start_bits; bits <= options.max_bits; bits *= 2) {
    if (auto r = recover_at(a, bits)) {
      std::ostringstream os;
      os << "recovered at " << bits << " bits";
      return {SquareStatus::Square, *r, os.str()};
    }
  }
  if (auto w = modular_witness(a, options.witness_primes)) return {SquareStatus::NotASquare, std::nullopt, *w};
  return {SquareStatus::Undecided, std::nullopt, "no root recovered and no modular witness found"};
}

}  // namespace apforge::nf
