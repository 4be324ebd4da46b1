#include "pec/plane.hpp"

#include <cmath>

namespace pec {

const char* to_string(VectorKind k) {
  switch (k) {
    case VectorKind::Spacelike: return "spacelike";
    case VectorKind::Timelike: return "timelike";
    case VectorKind::Lightlike: return "lightlike";
  }
  return "?";
}

Scalar pe_dot(const PEVector& v1, const PEVector& v2) {
  return v1.dx * v2.dx - v1.dy * v2.dy;
}

VectorKind vector_kind(const PEVector& v, double eps) {
  Scalar q = pe_dot(v, v);
  double scale = std::max(v.dx.value() * v.dx.value(), v.dy.value() * v.dy.value());
  int s = sign_eps(q, eps, scale);
  if (s > 0) return VectorKind::Spacelike;
  if (s < 0) return VectorKind::Timelike;
  return VectorKind::Lightlike;
}

Norm pe_norm(const PEVector& v, double eps) {
  VectorKind kind = vector_kind(v, eps);
  if (kind == VectorKind::Lightlike) {
    return {kind, v.dx.is_exact() && v.dy.is_exact() ? Scalar(0) : Scalar(0.0)};
  }
  return {kind, sqrt(abs(pe_dot(v, v)))};
}

Norm pe_distance(const PEPoint& t1, const PEPoint& t2, double eps) {
  return pe_norm({t1.x - t2.x, t1.y - t2.y}, eps);
}

Scalar pe_angle(const PEVector& v1, const PEVector& v2, double eps) {
  VectorKind k1 = vector_kind(v1, eps);
  VectorKind k2 = vector_kind(v2, eps);
  if (k1 == VectorKind::Lightlike || k2 == VectorKind::Lightlike || k1 != k2)
    throw KindMismatch("pe_angle: vectors must be both spacelike or both timelike");
  Scalar num = pe_dot(v1, v2);
  Scalar den = sqrt(abs(pe_dot(v1, v1)) * abs(pe_dot(v2, v2)));
  Scalar expr = abs(num / den);
  // cosh(alpha) >= 1 must hold for vectors sharing a sector
  Scalar excess = expr - Scalar(1);
  int s = sign_eps(excess, eps, expr.value());
  if (s < 0) throw OutOfSector("pe_angle: |cosh expression| < 1");
  if (s == 0) return expr.is_exact() ? Scalar(0) : Scalar(0.0);
  return Scalar(std::acosh(expr.value()));
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
          a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

Mat2 rotation_matrix(const Scalar& phi) {
  if (phi.is_exact() && phi.sign() == 0) {
    return {Scalar(1), Scalar(0), Scalar(0), Scalar(1)};
  }
  double p = phi.value();
  Scalar ch(std::cosh(p)), sh(std::sinh(p));
  return {ch, sh, sh, ch};
}

Mat2 rotation_matrix_from_pair(const Scalar& ch, const Scalar& sh) {
  return {ch, sh, sh, ch};
}

Motion::Motion(Scalar ch, Scalar sh, Scalar tx, Scalar ty)
    : ch_(std::move(ch)), sh_(std::move(sh)), tx_(std::move(tx)), ty_(std::move(ty)) {}

Motion Motion::identity() { return Motion(Scalar(1), Scalar(0), Scalar(0), Scalar(0)); }

Motion Motion::rotation(const Scalar& phi) {
  if (phi.is_exact() && phi.sign() == 0)
    return Motion(Scalar(1), Scalar(0), Scalar(0), Scalar(0));
  double p = phi.value();
  return Motion(Scalar(std::cosh(p)), Scalar(std::sinh(p)), Scalar(0), Scalar(0));
}

Motion Motion::boost(const Scalar& ratio) {
  if (ratio.sign() <= 0) throw DomainError("boost: ratio must be positive");
  Scalar inv = Scalar(1) / ratio;
  Scalar two(2);
  return Motion((ratio + inv) / two, (ratio - inv) / two, Scalar(0), Scalar(0));
}

Motion Motion::translation(Scalar tx, Scalar ty) {
  return Motion(Scalar(1), Scalar(0), std::move(tx), std::move(ty));
}

Motion Motion::from_parts(Scalar ch, Scalar sh, Scalar tx, Scalar ty) {
  Scalar unit = ch * ch - sh * sh - Scalar(1);
  double scale = std::max(ch.value() * ch.value(), sh.value() * sh.value());
  if (sign_eps(unit, 1e-12, scale) != 0)
    throw DomainError("motion: cosh^2 - sinh^2 != 1");
  return Motion(std::move(ch), std::move(sh), std::move(tx), std::move(ty));
}

double Motion::phi() const { return std::log(ch_.value() + sh_.value()); }

bool Motion::is_identity() const {
  return ch_ == Scalar(1) && sh_.sign() == 0 && tx_.sign() == 0 && ty_.sign() == 0;
}

PEPoint Motion::apply(const PEPoint& p) const {
  return {p.x * ch_ + p.y * sh_ + tx_, p.x * sh_ + p.y * ch_ + ty_};
}

PEVector Motion::apply_linear(const PEVector& v) const {
  return {v.dx * ch_ + v.dy * sh_, v.dx * sh_ + v.dy * ch_};
}

Mat2 Motion::linear() const { return {ch_, sh_, sh_, ch_}; }

Motion Motion::compose(const Motion& other) const {
  // linear part: R(phi1) * R(phi2) = R(phi1 + phi2)
  Scalar ch = ch_ * other.ch_ + sh_ * other.sh_;
  Scalar sh = ch_ * other.sh_ + sh_ * other.ch_;
  Scalar tx = other.tx_ * ch_ + other.ty_ * sh_ + tx_;
  Scalar ty = other.tx_ * sh_ + other.ty_ * ch_ + ty_;
  return Motion(std::move(ch), std::move(sh), std::move(tx), std::move(ty));
}

Motion Motion::inverse() const {
  // R^{-1} negates sinh; t' = -R^{-1} t
  Scalar tx = -(ch_ * tx_ - sh_ * ty_);
  Scalar ty = -(-sh_ * tx_ + ch_ * ty_);
  return Motion(ch_, -sh_, std::move(tx), std::move(ty));
}

namespace absolute {
Point omega1() { return {Scalar(0), Scalar(1), Scalar(1)}; }
Point omega2() { return {Scalar(0), Scalar(1), Scalar(-1)}; }
Point omega_line() { return {Scalar(1), Scalar(0), Scalar(0)}; }
}  // namespace absolute

}  // namespace pec
