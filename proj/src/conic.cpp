#include "pec/conic.hpp"

#include <algorithm>
#include <cmath>

namespace pec {

namespace {

double mag(const Scalar& s) { return std::fabs(s.value()); }

}  // namespace

Conic::Conic(Scalar a00, Scalar a01, Scalar a02, Scalar a11, Scalar a12, Scalar a22)
    : a00_(std::move(a00)),
      a01_(std::move(a01)),
      a02_(std::move(a02)),
      a11_(std::move(a11)),
      a12_(std::move(a12)),
      a22_(std::move(a22)) {
  if (a00_.sign() == 0 && a01_.sign() == 0 && a02_.sign() == 0 && a11_.sign() == 0 &&
      a12_.sign() == 0 && a22_.sign() == 0) {
    throw InvalidConic("conic: all six coefficients are zero");
  }
}

bool Conic::is_exact() const {
  return a00_.is_exact() && a01_.is_exact() && a02_.is_exact() && a11_.is_exact() &&
         a12_.is_exact() && a22_.is_exact();
}

double Conic::coeff_scale() const {
  return std::max({mag(a00_), mag(a01_), mag(a02_), mag(a11_), mag(a12_), mag(a22_)});
}

Conic Conic::scaled(const Scalar& k) const {
  if (k.sign() == 0) throw DomainError("scaled: zero factor");
  return Conic(a00_ * k, a01_ * k, a02_ * k, a11_ * k, a12_ * k, a22_ * k);
}

Scalar evaluate(const Conic& c, const PEPoint& p) {
  Scalar two(2);
  return c.a11() * p.x * p.x + two * c.a12() * p.x * p.y + c.a22() * p.y * p.y +
         two * c.a01() * p.x + two * c.a02() * p.y + c.a00();
}

Invariants invariants(const Conic& c) {
  Scalar I1 = c.a11() - c.a22();
  Scalar I2 = c.a11() * c.a22() - c.a12() * c.a12();
  Scalar I3 = c.a00() * c.a11() * c.a22() - c.a00() * c.a12() * c.a12() -
              c.a22() * c.a01() * c.a01() - c.a11() * c.a02() * c.a02() +
              Scalar(2) * c.a01() * c.a12() * c.a02();
  Scalar I4 = (c.a00() * c.a11() - c.a01() * c.a01()) -
              (c.a00() * c.a22() - c.a02() * c.a02());
  Scalar I5 = c.a00();
  return {std::move(I1), std::move(I2), std::move(I3), std::move(I4), std::move(I5)};
}

InvariantScales invariant_scales(const Conic& c) {
  double a00 = mag(c.a00()), a01 = mag(c.a01()), a02 = mag(c.a02());
  double a11 = mag(c.a11()), a12 = mag(c.a12()), a22 = mag(c.a22());
  InvariantScales s;
  s.s1 = std::max(a11, a22);
  s.s2 = std::max(a11 * a22, a12 * a12);
  s.s3 = std::max({a00 * a11 * a22, a00 * a12 * a12, a22 * a01 * a01, a11 * a02 * a02,
                   2.0 * a01 * a12 * a02});
  s.s4 = std::max({a00 * a11, a01 * a01, a00 * a22, a02 * a02});
  s.s5 = a00;
  return s;
}

Conic rotation_transport(const Conic& c, const Scalar& ch, const Scalar& sh) {
  Scalar ch2 = ch * ch, sh2 = sh * sh, cs = ch * sh;
  Scalar two(2);
  Scalar a11 = c.a11() * ch2 + c.a22() * sh2 + two * c.a12() * cs;
  Scalar a12 = (c.a11() + c.a22()) * cs + c.a12() * (ch2 + sh2);
  Scalar a22 = c.a11() * sh2 + c.a22() * ch2 + two * c.a12() * cs;
  Scalar a01 = c.a01() * ch + c.a02() * sh;
  Scalar a02 = c.a01() * sh + c.a02() * ch;
  return Conic(c.a00(), std::move(a01), std::move(a02), std::move(a11), std::move(a12),
               std::move(a22));
}

Conic translation_transport(const Conic& c, const Scalar& x0, const Scalar& y0) {
  Scalar two(2);
  Scalar a01 = c.a11() * x0 + c.a12() * y0 + c.a01();
  Scalar a02 = c.a12() * x0 + c.a22() * y0 + c.a02();
  Scalar a00 = c.a11() * x0 * x0 + two * c.a12() * x0 * y0 + c.a22() * y0 * y0 +
               two * c.a01() * x0 + two * c.a02() * y0 + c.a00();
  return Conic(std::move(a00), std::move(a01), std::move(a02), c.a11(), c.a12(), c.a22());
}

Conic transform(const Conic& c, const Motion& m) {
  // F o m with m(p) = R p + t splits as translation transport by t
  // followed by rotation transport.
  return rotation_transport(translation_transport(c, m.tx(), m.ty()), m.ch(), m.sh());
}

SymMat2 quadratic_form(const Conic& c) { return {c.a11(), c.a12(), c.a22()}; }

bool same_projective_point(const HomogeneousPoint& a, const HomogeneousPoint& b, double eps) {
  Scalar c0 = a.x1 * b.x2 - a.x2 * b.x1;
  Scalar c1 = a.x2 * b.x0 - a.x0 * b.x2;
  Scalar c2 = a.x0 * b.x1 - a.x1 * b.x0;
  double sa = std::max({mag(a.x0), mag(a.x1), mag(a.x2)});
  double sb = std::max({mag(b.x0), mag(b.x1), mag(b.x2)});
  double scale = sa * sb;
  return sign_eps(c0, eps, scale) == 0 && sign_eps(c1, eps, scale) == 0 &&
         sign_eps(c2, eps, scale) == 0;
}

const char* to_string(PointReality r) {
  switch (r) {
    case PointReality::TwoComplexConjugate: return "two complex conjugate";
    case PointReality::OneRealDouble: return "one real double";
    case PointReality::TwoRealDistinct: return "two real distinct";
    case PointReality::AllOfOmega: return "all of omega";
  }
  return "?";
}

const char* to_string(DirectionKind k) {
  switch (k) {
    case DirectionKind::SpacelikeDirection: return "spacelike";
    case DirectionKind::TimelikeDirection: return "timelike";
    case DirectionKind::IsotropicDirection: return "isotropic";
  }
  return "?";
}

namespace {

/// Sign of p + q*sqrt(d) with d >= 0; exact when all inputs are exact.
int surd_sign(const Scalar& p, const Scalar& q, const Scalar& d, double eps, double scale) {
  if (p.is_exact() && q.is_exact() && d.is_exact()) {
    if (d.sign() == 0 || q.sign() == 0) return p.sign();
    int sp = p.sign(), sq = q.sign();
    if (sp == 0) return sq;
    if (sp == sq) return sp;
    int sd = (p * p - q * q * d).sign();
    return sd == 0 ? 0 : (sd > 0 ? sp : sq);
  }
  double v = p.value() + q.value() * std::sqrt(std::max(0.0, d.value()));
  return sign_eps(Scalar(v), eps, scale);
}

DirectionKind kind_from_sign(int s) {
  if (s > 0) return DirectionKind::SpacelikeDirection;
  if (s < 0) return DirectionKind::TimelikeDirection;
  return DirectionKind::IsotropicDirection;
}

}  // namespace

IsotropicPointSet isotropic_points(const Conic& c, double eps) {
  const Scalar& a11 = c.a11();
  const Scalar& a12 = c.a12();
  const Scalar& a22 = c.a22();
  double s = std::max({mag(a11), mag(a12), mag(a22)});
  double s2 = s * s;
  int s11 = sign_eps(a11, eps, s);
  int s12 = sign_eps(a12, eps, s);
  int s22 = sign_eps(a22, eps, s);

  IsotropicPointSet out;
  if (s11 == 0 && s12 == 0 && s22 == 0) {
    out.reality = PointReality::AllOfOmega;
    return out;
  }

  // Roots of a11 x1^2 + 2 a12 x1 x2 + a22 x2^2 = 0 on (0 : x1 : x2).
  if (s22 != 0) {
    Scalar disc = a12 * a12 - a11 * a22;  // = -I2
    int sd = sign_eps(disc, eps, s2);
    if (sd < 0) {
      out.reality = PointReality::TwoComplexConjugate;
      return out;
    }
    if (sd == 0) {
      out.reality = PointReality::OneRealDouble;
      HomogeneousPoint pt{Scalar(0), a22, -a12};
      int kindsign = sign_eps(a22 * a22 - a12 * a12, eps, s2);
      out.points.push_back({pt, kind_from_sign(kindsign)});
      return out;
    }
    out.reality = PointReality::TwoRealDistinct;
    Scalar root = sqrt(disc);
    for (int branch : {+1, -1}) {
      Scalar x2 = -a12 + (branch > 0 ? root : -root);
      HomogeneousPoint pt{Scalar(0), a22, x2};
      // sign of x1^2 - x2^2 = (a22^2 - a12^2 - disc) + branch * 2 a12 sqrt(disc)
      Scalar p = a22 * a22 - a12 * a12 - disc;
      Scalar q = Scalar(2 * branch) * a12;
      out.points.push_back({pt, kind_from_sign(surd_sign(p, q, disc, eps, s2))});
    }
    return out;
  }

  if (s12 != 0) {
    // a22 = 0: x1 (a11 x1 + 2 a12 x2) = 0 -> (0:0:1) and (0 : 2 a12 : -a11)
    out.reality = PointReality::TwoRealDistinct;
    out.points.push_back({{Scalar(0), Scalar(0), Scalar(1)}, DirectionKind::TimelikeDirection});
    Scalar diff = Scalar(4) * a12 * a12 - a11 * a11;
    int ks = sign_eps(diff, eps, 4.0 * s2);
    out.points.push_back({{Scalar(0), Scalar(2) * a12, -a11}, kind_from_sign(ks)});
    return out;
  }

  // a22 = a12 = 0, a11 != 0: x1^2 = 0 double root at (0:0:1)
  out.reality = PointReality::OneRealDouble;
  out.points.push_back({{Scalar(0), Scalar(0), Scalar(1)}, DirectionKind::TimelikeDirection});
  return out;
}

}  // namespace pec
