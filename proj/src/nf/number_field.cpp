#include "apforge/nf/number_field.hpp"

#include <sstream>

namespace apforge::nf {

FieldRef NumberField::create(std::string name, const RatPoly& minpoly) {
  if (minpoly.is_zero() || minpoly.degree() < 2 || minpoly.degree() > 4)
    throw std::invalid_argument("number field minpoly must have degree 2..4");
  RatPoly monic = minpoly.scaled(BigRat(1) / minpoly.leading());
  return FieldRef(new NumberField(std::move(name), std::move(monic)));
}

NumberField::NumberField(std::string name, RatPoly minpoly)
    : name_(std::move(name)), minpoly_(std::move(minpoly)), degree_(minpoly_.degree()) {
  disc_ = exact::uni_resultant(minpoly_, minpoly_.derivative());
  if (sgn(disc_) == 0) throw std::invalid_argument("minpoly of " + name_ + " is not separable");
}

FieldElem::FieldElem(FieldRef field, std::vector<BigRat> coords) : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw std::invalid_argument("field element without a field");
  if (coords_.size() != field_->degree()) throw std::invalid_argument("coordinate count must equal field degree");
}

FieldElem FieldElem::zero(const FieldRef& field) { return FieldElem(field, std::vector<BigRat>(field->degree(), 0)); }

FieldElem FieldElem::one(const FieldRef& field) { return rational(field, BigRat(1)); }

FieldElem FieldElem::rational(const FieldRef& field, const BigRat& value) {
  std::vector<BigRat> c(field->degree(), 0);
  c[0] = value;
  return FieldElem(field, std::move(c));
}

FieldElem FieldElem::generator(const FieldRef& field) {
  std::vector<BigRat> c(field->degree(), 0);
  c[1] = 1;
  return FieldElem(field, std::move(c));
}

FieldElem FieldElem::parse(const FieldRef& field, const std::vector<std::string>& coords) {
  if (coords.size() > field->degree()) throw std::invalid_argument("too many coordinates for field " + field->name());
  std::vector<BigRat> c(field->degree(), 0);
  for (std::size_t i = 0; i < coords.size(); ++i) c[i] = exact::parse_rational(coords[i]);
  return FieldElem(field, std::move(c));
}

bool FieldElem::is_zero() const {
  for (const auto& c : coords_)
    if (sgn(c) != 0) return false;
  return true;
}

bool FieldElem::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i)
    if (sgn(coords_[i]) != 0) return false;
  return true;
}

RatPoly FieldElem::as_poly() const { return RatPoly(coords_); }

FieldElem FieldElem::pow(unsigned e) const {
  FieldElem result = one(field_);
  FieldElem base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

void FieldElem::require_same_field(const FieldElem& other) const {
  if (field_ != other.field_ && !(field_->minpoly() == other.field_->minpoly()))
    throw FieldMismatch("field mismatch: " + field_->name() + " vs " + other.field_->name());
}

FieldElem operator+(const FieldElem& a, const FieldElem& b) {
  a.require_same_field(b);
  std::vector<BigRat> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
  return FieldElem(a.field_, std::move(c));
}

FieldElem operator-(const FieldElem& a, const FieldElem& b) {
  a.require_same_field(b);
  std::vector<BigRat> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
  return FieldElem(a.field_, std::move(c));
}

FieldElem operator-(const FieldElem& a) {
  std::vector<BigRat> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coords_[i];
  return FieldElem(a.field_, std::move(c));
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  a.require_same_field(b);
  const std::size_t d = a.coords_.size();
  std::vector<BigRat> r(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(a.coords_[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) r[i + j] += a.coords_[i] * b.coords_[j];
  }
  // a^d = -(m_0 + m_1 a + ... + m_{d-1} a^{d-1}) for the monic minpoly.
  const auto& m = a.field_->minpoly().coeffs();
  for (std::size_t i = 2 * d - 2; i >= d; --i) {
    if (sgn(r[i]) == 0) continue;
    BigRat c = r[i];
    r[i] = 0;
    for (std::size_t j = 0; j < d; ++j) r[i - d + j] -= c * m[j];
  }
  r.resize(d);
  return FieldElem(a.field_, std::move(r));
}

FieldElem operator*(const FieldElem& a, const BigRat& s) {
  std::vector<BigRat> c(a.coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] * s;
  return FieldElem(a.field_, std::move(c));
}

FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * nf_inv(b); }

bool operator==(const FieldElem& a, const FieldElem& b) {
  a.require_same_field(b);
  return a.coords_ == b.coords_;
}

std::string FieldElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const BigRat& c = coords_[i];
    if (sgn(c) == 0) continue;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    BigRat mag = abs(c);
    if (i == 0) {
      os << exact::to_string(mag);
      continue;
    }
    if (mag != 1) os << exact::to_string(mag) << "*";
    os << "a";
    if (i > 1) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

FieldElem nf_mul(const FieldElem& a, const FieldElem& b) { return a * b; }

FieldElem nf_inv(const FieldElem& a) {
  if (a.is_zero()) throw std::domain_error("inverse of zero field element");
  // Extended Euclid: track s with s*a == r (mod m).
  RatPoly r0 = a.field()->minpoly();
  RatPoly r1 = a.as_poly();
  RatPoly s0;
  RatPoly s1 = RatPoly::constant(BigRat(1));
  while (!r1.is_zero()) {
    auto [q, r] = exact::divmod(r0, r1);
    RatPoly s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is the gcd; a nonzero constant since m is irreducible.
  if (r0.degree() != 0) throw std::domain_error("element shares a factor with the minpoly (reducible field?)");
  RatPoly inv = s0.scaled(BigRat(1) / r0.leading());
  inv = exact::divmod(inv, a.field()->minpoly()).second;
  std::vector<BigRat> c(a.field()->degree(), 0);
  for (std::size_t i = 0; i < inv.coeffs().size(); ++i) c[i] = inv.coeffs()[i];
  return FieldElem(a.field(), std::move(c));
}

BigRat nf_norm(const FieldElem& a) {
  if (a.is_zero()) return 0;
  // minpoly is monic, so the Sylvester resultant is the product of conjugates.
  return exact::uni_resultant(a.field()->minpoly(), a.as_poly());
}

bool rational_is_s_unit(const BigRat& q, const std::vector<long>& primes) {
  if (sgn(q) == 0) return false;
  BigInt num = abs(BigInt(q.get_num()));
  BigInt den = q.get_den();
  for (long p : primes) {
    const BigInt bp(p);
    while (mpz_divisible_p(num.get_mpz_t(), bp.get_mpz_t())) num /= bp;
    while (mpz_divisible_p(den.get_mpz_t(), bp.get_mpz_t())) den /= bp;
  }
  return num == 1 && den == 1;
}

bool nf_is_s_unit(const FieldElem& a, const std::vector<long>& primes) {
  if (a.is_zero()) throw std::domain_error("S-unit test of zero");
  return rational_is_s_unit(nf_norm(a), primes);
}

std::string to_string(SquareStatus s) {
  switch (s) {
    case SquareStatus::Square: return "square";
    case SquareStatus::NotASquare: return "not-a-square";
    case SquareStatus::Undecided: return "undecided";
  }
  return "?";
}

}  // namespace apforge::nf
