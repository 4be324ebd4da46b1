#pragma once

#include "pec/scalar.hpp"

namespace pec {

struct PEVector {
  Scalar dx, dy;
};

struct PEPoint {
  Scalar x, y;
};

/// Causal kind of a vector, by the sign of its self scalar product.
enum class VectorKind { Spacelike, Timelike, Lightlike };

const char* to_string(VectorKind k);

/// Scalar product x1*x2 - y1*y2.
Scalar pe_dot(const PEVector& v1, const PEVector& v2);

VectorKind vector_kind(const PEVector& v, double eps = kDefaultEpsilon);

struct Norm {
  VectorKind kind;
  Scalar magnitude;  // sqrt(|v.v|); the kind tag stands in for the imaginary unit
};

Norm pe_norm(const PEVector& v, double eps = kDefaultEpsilon);
Norm pe_distance(const PEPoint& t1, const PEPoint& t2, double eps = kDefaultEpsilon);

/// Hyperbolic angle between two vectors of equal kind.
/// Throws KindMismatch for mixed/lightlike input, OutOfSector when the
/// cosh expression falls below 1 in absolute value.
Scalar pe_angle(const PEVector& v1, const PEVector& v2, double eps = kDefaultEpsilon);

/// Row-major 2x2 matrix.
struct Mat2 {
  Scalar m00, m01, m10, m11;

  Scalar det() const { return m00 * m11 - m01 * m10; }
};

Mat2 mat_mul(const Mat2& a, const Mat2& b);

/// Hyperbolic rotation matrix [[cosh, sinh], [sinh, cosh]].
Mat2 rotation_matrix(const Scalar& phi);
Mat2 rotation_matrix_from_pair(const Scalar& ch, const Scalar& sh);

/// An element of the motion group: hyperbolic rotation plus translation,
///   x' = x cosh(phi) + y sinh(phi) + tx
///   y' = x sinh(phi) + y cosh(phi) + ty.
/// The rotation is stored as the exact (cosh, sinh) pair so that rational
/// rotations (phi = ln q with q rational) round-trip without rounding.
class Motion {
 public:
  static Motion identity();
  /// Rotation by a float angle.
  static Motion rotation(const Scalar& phi);
  /// Rotation by phi = ln(ratio); exact when ratio is exact. ratio > 0.
  static Motion boost(const Scalar& ratio);
  static Motion translation(Scalar tx, Scalar ty);
  /// Assemble from parts; validates cosh^2 - sinh^2 = 1.
  static Motion from_parts(Scalar ch, Scalar sh, Scalar tx, Scalar ty);

  const Scalar& ch() const { return ch_; }
  const Scalar& sh() const { return sh_; }
  const Scalar& tx() const { return tx_; }
  const Scalar& ty() const { return ty_; }

  /// Hyperbolic angle of the linear part (float view).
  double phi() const;

  bool is_identity() const;

  PEPoint apply(const PEPoint& p) const;
  PEVector apply_linear(const PEVector& v) const;
  Mat2 linear() const;

  /// Function composition: (a.compose(b))(p) == a(b(p)).
  Motion compose(const Motion& other) const;
  Motion inverse() const;

 private:
  Motion(Scalar ch, Scalar sh, Scalar tx, Scalar ty);
  Scalar ch_, sh_, tx_, ty_;
};

/// The absolute figure: the line at infinity x0 = 0 and the two fixed
/// points (0:1:1), (0:1:-1) every motion preserves.
namespace absolute {
struct Point {
  Scalar x0, x1, x2;
};
Point omega1();
Point omega2();
/// Dual coordinates [l0 : l1 : l2] of the absolute line x0 = 0.
Point omega_line();
}  // namespace absolute

}  // namespace pec
