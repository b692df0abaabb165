#include "apforge/curve/elliptic.hpp"

namespace apforge::curve {

std::string to_string(PointStatus s) {
  switch (s) {
    case PointStatus::OnCurve: return "on-curve";
    case PointStatus::NotOnCurve: return "not-on-curve";
    case PointStatus::Undecided: return "undecided";
  }
  return "?";
}

PointCheck ec_point_check(const FieldElliptic& e, const nf::FieldElem& x, const std::optional<nf::FieldElem>& y) {
  const nf::FieldElem value = e.rhs()(x);
  if (y) {
    const nf::FieldElem diff = *y * *y - value;
    if (diff.is_zero()) return {PointStatus::OnCurve, "Y^2 = rhs(X)"};
    return {PointStatus::NotOnCurve, "Y^2 - rhs(X) = " + diff.to_string()};
  }
  if (value.is_zero()) return {PointStatus::OnCurve, "rhs(X) = 0"};
  nf::SquareResult sq = nf::nf_is_square(value);
  switch (sq.status) {
    case nf::SquareStatus::Square: return {PointStatus::OnCurve, "Y = " + sq.root->to_string() + " (" + sq.evidence + ")"};
    case nf::SquareStatus::NotASquare: return {PointStatus::NotOnCurve, sq.evidence};
    case nf::SquareStatus::Undecided: break;
  }
  return {PointStatus::Undecided, sq.evidence};
}

PointCheck ec_point_check(const RationalElliptic& e, const exact::BigRat& x, const std::optional<exact::BigRat>& y) {
  const exact::BigRat value = e.rhs()(x);
  if (y) {
    if (*y * *y == value) return {PointStatus::OnCurve, "Y^2 = rhs(X)"};
    return {PointStatus::NotOnCurve, "rhs(X) = " + exact::to_string(value)};
  }
  if (auto r = exact::rat_kth_root(value, 2)) return {PointStatus::OnCurve, "Y = " + exact::to_string(*r)};
  return {PointStatus::NotOnCurve, "rhs(X) = " + exact::to_string(value) + " is not a rational square"};
}

}  // namespace apforge::curve
