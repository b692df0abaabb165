#pragma once

// Elliptic models Y^2 = c(X) with c a cubic over Q or over a corpus field.

#include "apforge/nf/number_field.hpp"

#include <optional>
#include <string>

namespace apforge::curve {

template <class T>
class EllipticModel {
 public:
  EllipticModel(std::string label, exact::UniPoly<T> rhs) : label_(std::move(label)), rhs_(std::move(rhs)) {
    if (rhs_.is_zero() || rhs_.degree() != 3) throw std::invalid_argument(label_ + ": elliptic model needs a cubic");
    if (detail_is_zero(exact::uni_resultant(rhs_, rhs_.derivative())))
      throw std::invalid_argument(label_ + ": singular cubic");
  }

  const std::string& label() const { return label_; }
  const exact::UniPoly<T>& rhs() const { return rhs_; }

 private:
  static bool detail_is_zero(const T& v) { return exact::detail::coeff_is_zero(v); }

  std::string label_;
  exact::UniPoly<T> rhs_;
};

using RationalElliptic = EllipticModel<exact::BigRat>;
using FieldElliptic = EllipticModel<nf::FieldElem>;

enum class PointStatus { OnCurve, NotOnCurve, Undecided };

struct PointCheck {
  PointStatus status;
  std::string detail;
};

std::string to_string(PointStatus s);

/// With Y: the equation is checked exactly. Without Y: rhs(X) must be a
/// square in the base field (through nf_is_square over number fields).
PointCheck ec_point_check(const FieldElliptic& e, const nf::FieldElem& x, const std::optional<nf::FieldElem>& y);
PointCheck ec_point_check(const RationalElliptic& e, const exact::BigRat& x, const std::optional<exact::BigRat>& y);

}  // namespace apforge::curve
