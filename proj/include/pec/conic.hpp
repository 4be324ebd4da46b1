#pragma once

#include <vector>

#include "pec/plane.hpp"
#include "pec/scalar.hpp"

namespace pec {

/// Symmetric 2x2 block sigma = [[a11, a12], [a12, a22]].
struct SymMat2 {
  Scalar a11, a12, a22;

  Scalar trace() const { return a11 + a22; }
  Scalar det() const { return a11 * a22 - a12 * a12; }
  bool is_exact() const { return a11.is_exact() && a12.is_exact() && a22.is_exact(); }
};

/// A conic section F(x,y) = a11 x^2 + 2 a12 xy + a22 y^2
///                        + 2 a01 x + 2 a02 y + a00 = 0,
/// stored as the six independent entries of its symmetric matrix.
/// Conics with a vanishing quadratic part are admitted (they make up the
/// degenerate fourth-family composites containing the line at infinity);
/// the all-zero matrix is rejected.
class Conic {
 public:
  Conic(Scalar a00, Scalar a01, Scalar a02, Scalar a11, Scalar a12, Scalar a22);

  const Scalar& a00() const { return a00_; }
  const Scalar& a01() const { return a01_; }
  const Scalar& a02() const { return a02_; }
  const Scalar& a11() const { return a11_; }
  const Scalar& a12() const { return a12_; }
  const Scalar& a22() const { return a22_; }

  bool is_exact() const;

  /// max |a_ij| as a double; the scale reference for float sign tests.
  double coeff_scale() const;

  /// Same conic with every coefficient multiplied by k (k != 0).
  Conic scaled(const Scalar& k) const;

 private:
  Scalar a00_, a01_, a02_, a11_, a12_, a22_;
};

/// F(p).
Scalar evaluate(const Conic& c, const PEPoint& p);

/// The five motion-related coefficient functions I1..I5.
struct Invariants {
  Scalar I1, I2, I3, I4, I5;
};

/// Largest |monomial| entering each invariant; reference scales for the
/// float-mode sign policy.
struct InvariantScales {
  double s1, s2, s3, s4, s5;
};

Invariants invariants(const Conic& c);
InvariantScales invariant_scales(const Conic& c);

/// Coefficients of F composed with the motion (substitution transport,
/// exact formulas). evaluate(transform(c, m), p) == evaluate(c, m(p)).
Conic transform(const Conic& c, const Motion& m);

Conic rotation_transport(const Conic& c, const Scalar& ch, const Scalar& sh);
Conic translation_transport(const Conic& c, const Scalar& x0, const Scalar& y0);

SymMat2 quadratic_form(const Conic& c);

struct HomogeneousPoint {
  Scalar x0, x1, x2;
};

/// Equality up to nonzero scaling, by cross-product vanishing.
bool same_projective_point(const HomogeneousPoint& a, const HomogeneousPoint& b,
                           double eps = kDefaultEpsilon);

enum class PointReality { TwoComplexConjugate, OneRealDouble, TwoRealDistinct, AllOfOmega };
enum class DirectionKind { SpacelikeDirection, TimelikeDirection, IsotropicDirection };

const char* to_string(PointReality r);
const char* to_string(DirectionKind k);

struct IsotropicPoint {
  HomogeneousPoint point;
  DirectionKind kind;
};

/// The conic's points on the absolute line x0 = 0.
struct IsotropicPointSet {
  PointReality reality;
  std::vector<IsotropicPoint> points;
};

/// Intersect the homogenized conic with the absolute line: classify the
/// roots of a11 x1^2 + 2 a12 x1 x2 + a22 x2^2 = 0 by reality and causal
/// kind. Kind tags are decided exactly in exact mode even when the root
/// coordinates are irrational.
IsotropicPointSet isotropic_points(const Conic& c, double eps = kDefaultEpsilon);

}  // namespace pec
