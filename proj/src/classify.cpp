#include "pec/classify.hpp"

#include <cmath>
#include <utility>

namespace pec {

namespace {

double mag(const Scalar& s) { return std::fabs(s.value()); }

/// Everything the cascade consults, computed once per input.
struct Analysis {
  Conic c;  // float inputs arrive normalized by max|a_ij|
  double eps;
  Invariants inv;
  InvariantScales sc;
  DiagCase dc;
  Family fam;
  int s1, s2, s3, s4, s5;       // eps-signs of the invariants
  int sgn_t;                    // sign of a11+a22
  bool sigma_zero;
  double coeff_scale;
};

Analysis analyze(const Conic& input, double eps) {
  Conic c = input;
  if (!c.is_exact()) {
    // classification is scale invariant; normalizing keeps the float sign
    // policy working on O(1) magnitudes
    double s = c.coeff_scale();
    if (s > 0.0 && s != 1.0 && std::isfinite(s) && std::isfinite(1.0 / s))
      c = c.scaled(Scalar(1.0 / s));
  }
  Analysis a{c, eps, invariants(c), invariant_scales(c), {}, Family::Family1,
             0, 0, 0, 0, 0, 0, false, c.coeff_scale()};
  a.s1 = sign_eps(a.inv.I1, eps, a.sc.s1);
  a.s2 = sign_eps(a.inv.I2, eps, a.sc.s2);
  a.s3 = sign_eps(a.inv.I3, eps, a.sc.s3);
  a.s4 = sign_eps(a.inv.I4, eps, a.sc.s4);
  a.s5 = sign_eps(a.inv.I5, eps, a.sc.s5);
  a.sgn_t = sign_eps(c.a11() + c.a22(), eps, std::max(mag(c.a11()), mag(c.a22())));
  a.dc = diag_case(quadratic_form(c), eps);
  double cs = a.coeff_scale;
  a.sigma_zero = sign_eps(c.a11(), eps, cs) == 0 && sign_eps(c.a12(), eps, cs) == 0 &&
                 sign_eps(c.a22(), eps, cs) == 0;
  switch (a.dc.kind) {
    case DiagCaseKind::CaseI: a.fam = Family::Family1; break;
    case DiagCaseKind::CaseII: a.fam = Family::Family2; break;
    case DiagCaseKind::CaseIII: a.fam = Family::Family3; break;
    case DiagCaseKind::Family4Axis: a.fam = Family::Family4; break;
  }
  return a;
}

std::string_view classify_family1(const Analysis& a) {
  const int tau = a.sgn_t;
  if (tau == 0) throw InternalError("family 1 with zero trace");
  const int J1 = tau * a.s1;
  int s2 = a.s2;
  // float corner: I1 and I2 both inside the zero band while the trace is
  // not means sigma is a near-multiple of the identity, whose true I2 is
  // positive; reachable only at the epsilon resolution, never in exact mode
  if (s2 == 0 && J1 == 0) s2 = 1;
  if (s2 > 0) {
    if (a.s3 != 0) {
      const bool imaginary = tau * a.s3 > 0;
      if (J1 < 0) return imaginary ? "f1-imaginary-ellipse-first" : "f1-real-ellipse-first";
      if (J1 > 0) return imaginary ? "f1-imaginary-ellipse-second" : "f1-real-ellipse-second";
      return imaginary ? "f1-imaginary-ellipse-special" : "f1-real-ellipse-special";
    }
    if (J1 < 0) return "f1-imaginary-pair-first";
    if (J1 > 0) return "f1-imaginary-pair-second";
    return "f1-imaginary-pair-special";
  }
  if (s2 < 0) {
    if (J1 == 0) throw InternalError("family 1, I2<0 forces I1 != 0");
    if (a.s3 != 0) {
      if (a.s1 * a.s3 > 0) return J1 < 0 ? "f1-hyperbola-I-first" : "f1-hyperbola-IV-second";
      return J1 > 0 ? "f1-hyperbola-I-second" : "f1-hyperbola-IV-first";
    }
    return J1 < 0 ? "f1-intersecting-pair-first" : "f1-intersecting-pair-second";
  }
  // I2 = 0; case (i) forces I1 != 0 here
  if (J1 == 0) throw InternalError("family 1, I2=0 forces I1 != 0");
  if (a.s3 != 0) return J1 < 0 ? "f1-parabola-first" : "f1-parabola-second";
  const int r = a.s4 * J1;  // sign of I4 * tau * I1
  if (r < 0) return J1 < 0 ? "f1-parallel-pair-real-first" : "f1-parallel-pair-real-second";
  if (r > 0)
    return J1 < 0 ? "f1-parallel-pair-imaginary-first" : "f1-parallel-pair-imaginary-second";
  return J1 < 0 ? "f1-double-line-first" : "f1-double-line-second";
}

std::string_view classify_family2(const Analysis& a) {
  if (a.sgn_t == 0) throw InternalError("family 2 with zero trace");
  if (a.s1 != 0) {
    const int L = a.s1 * a.sgn_t;  // sign of |a11| - |a22|
    if (a.s3 != 0) {
      if (a.s1 * a.s3 > 0) return L < 0 ? "f2-hyperbola-II-first" : "f2-hyperbola-III-second";
      return L < 0 ? "f2-hyperbola-III-first" : "f2-hyperbola-II-second";
    }
    return L < 0 ? "f2-pair-isotropic-spacelike" : "f2-pair-isotropic-timelike";
  }
  // I1 = 0: the quadratic part is a11 (x + eps_iso y)^2
  if (a.s3 != 0) return "f2-parabola-double-isotropic";
  Scalar half_trace = (a.c.a11() + a.c.a22()) / Scalar(2);
  Scalar q = a.c.a01() * a.c.a01() - half_trace * a.c.a00();
  double qs = std::max(mag(a.c.a01()) * mag(a.c.a01()), mag(half_trace) * mag(a.c.a00()));
  int sq = sign_eps(q, a.eps, qs);
  if (sq > 0) return "f2-parallel-isotropic-pair-real";
  if (sq < 0) return "f2-parallel-isotropic-pair-imaginary";
  return "f2-double-isotropic-line";
}

std::string_view classify_family4(const Analysis& a) {
  // sigma != 0 with I1 inside the zero band can only happen at the float
  // epsilon resolution; the quadratic part is then noise and the composite
  // reading is the stable one
  if (a.sigma_zero || a.s1 == 0) {
    if (a.s4 > 0) return "f4-omega-plus-spacelike";
    if (a.s4 < 0) return "f4-omega-plus-timelike";
    if (sign_eps(a.c.a01(), a.eps, a.coeff_scale) != 0) return "f4-omega-plus-isotropic";
    if (a.s5 != 0) return "f4-double-omega";
    throw InvalidConic("conic is the zero polynomial within tolerance");
  }
  if (a.s3 != 0)
    return a.s1 * a.s3 > 0 ? "f4-hyperbolic-circle-first" : "f4-hyperbolic-circle-second";
  return "f4-pair-isotropic-lines";
}

std::string_view classify_id_impl(const Analysis& a) {
  switch (a.fam) {
    case Family::Family1: return classify_family1(a);
    case Family::Family2: return classify_family2(a);
    case Family::Family3: return a.s3 != 0 ? "f3-hyperbola-V" : "f3-pair-spacelike-timelike";
    case Family::Family4: return classify_family4(a);
  }
  throw InternalError("unhandled family");
}

std::optional<PEPoint> center_impl(const Analysis& a) {
  if (a.s2 == 0) return std::nullopt;
  const Conic& c = a.c;
  Scalar I2 = a.inv.I2;
  Scalar x = (c.a12() * c.a02() - c.a22() * c.a01()) / I2;
  Scalar y = (c.a12() * c.a01() - c.a11() * c.a02()) / I2;
  return PEPoint{std::move(x), std::move(y)};
}

Scalar exact_zero(const Conic& c) { return c.is_exact() ? Scalar(0) : Scalar(0.0); }

/// Center for the reduction paths: the eps-decided center when available,
/// else the raw Cramer solution (float corners can pass the family tests
/// with I2 inside the zero band). nullopt only when even raw I2 vanishes.
std::optional<PEPoint> center_for_reduction(const Analysis& a) {
  if (auto ctr = center_impl(a)) return ctr;
  if (a.inv.I2.sign() == 0) return std::nullopt;
  const Conic& c = a.c;
  return PEPoint{(c.a12() * c.a02() - c.a22() * c.a01()) / a.inv.I2,
                 (c.a12() * c.a01() - c.a11() * c.a02()) / a.inv.I2};
}

/// Sub-resolution float input whose center cannot be pinned down: hand the
/// conic back unreduced rather than fail (reduction never errors).
Reduction unresolved_reduction(const Conic& c) {
  return {c, Motion::identity(),
          {"center unresolved at the float sign resolution; conic left unreduced"}};
}

/// Reduction for family 1 with I2 = 0: a rotation by the case-(i) angle
/// followed by translations. The reduced quadratic form is diag(I1, 0) or
/// diag(0, -I1) depending on which trace sign survives; the remaining
/// coefficients come from invariants (exact) with only the orientation of
/// the parabola's linear term probed from the float transport.
Reduction reduce_family1_rank1(const Analysis& a, const Scalar& phi) {
  const Conic& c = a.c;
  const bool xslot = a.sgn_t * a.s1 > 0;
  Scalar h = xslot ? a.inv.I1 : -a.inv.I1;
  Motion rot = Motion::rotation(phi);
  Conic rotated = rotation_transport(c, rot.ch(), rot.sh());
  Reduction red{c, std::nullopt, {}};
  if (a.s3 != 0) {
    // parabola: h u^2 + 2 g v with g^2 = -I3/h (abs guards the float zero
    // band; the ratio is positive whenever the rank-1 model genuinely holds)
    Scalar gmag = sqrt(abs(-a.inv.I3 / h));
    Scalar u0, v0;
    int gsign;
    if (xslot) {
      u0 = -rotated.a01() / rotated.a11();
      Conic shifted = translation_transport(rotated, u0, exact_zero(c));
      gsign = shifted.a02().value() >= 0.0 ? 1 : -1;
      v0 = -shifted.a00() / (Scalar(2) * shifted.a02());
      red.canonical = Conic(exact_zero(c), exact_zero(c), Scalar(gsign) * gmag, h,
                            exact_zero(c), exact_zero(c));
      red.motion = rot.compose(Motion::translation(u0, v0));
    } else {
      v0 = -rotated.a02() / rotated.a22();
      Conic shifted = translation_transport(rotated, exact_zero(c), v0);
      gsign = shifted.a01().value() >= 0.0 ? 1 : -1;
      u0 = -shifted.a00() / (Scalar(2) * shifted.a01());
      red.canonical = Conic(exact_zero(c), Scalar(gsign) * gmag, exact_zero(c),
                            exact_zero(c), exact_zero(c), h);
      red.motion = rot.compose(Motion::translation(u0, v0));
    }
    if (!red.canonical.is_exact() && c.is_exact())
      red.notes.push_back("canonical linear coefficient required an irrational square root");
    return red;
  }
  // parallel pair or double line: h u^2 + I4/h (the sign bookkeeping folds
  // into which slot carries h)
  Scalar c00 = xslot ? a.inv.I4 / h : -(a.inv.I4 / h);
  if (xslot) {
    Scalar u0 = -rotated.a01() / rotated.a11();
    red.canonical =
        Conic(c00, exact_zero(c), exact_zero(c), h, exact_zero(c), exact_zero(c));
    red.motion = rot.compose(Motion::translation(u0, exact_zero(c)));
  } else {
    Scalar v0 = -rotated.a02() / rotated.a22();
    red.canonical =
        Conic(c00, exact_zero(c), exact_zero(c), exact_zero(c), exact_zero(c), h);
    red.motion = rot.compose(Motion::translation(exact_zero(c), v0));
  }
  return red;
}

Reduction reduce_impl(const Analysis& a) {
  const Conic& c = a.c;
  Scalar zero = exact_zero(c);
  switch (a.fam) {
    case Family::Family1: {
      Scalar phi = rotation_angle(quadratic_form(c), a.eps);
      // the I1 = I2 = 0 float corner is centered (sigma is a near-multiple
      // of the identity, raw I2 > 0), matching the classifier's reading
      bool centered = a.s2 != 0 || a.sgn_t * a.s1 == 0;
      if (centered) {
        std::optional<PEPoint> ctr = center_for_reduction(a);
        if (!ctr) return unresolved_reduction(c);
        // diag((I1 + s*sqrt(I1^2+4I2))/2, (-I1 + s*sqrt(..))/2), a00 = I3/I2
        Scalar disc = a.inv.I1 * a.inv.I1 + Scalar(4) * a.inv.I2;
        // raw-negative disc only occurs inside the float zero band of the
        // case (i) boundary; clamp instead of feeding sqrt a noise sign
        Scalar root = disc.sign() > 0 ? sqrt(disc) : zero;
        Scalar tau(a.sgn_t);
        Scalar b11 = (a.inv.I1 + tau * root) / Scalar(2);
        Scalar b22 = (-a.inv.I1 + tau * root) / Scalar(2);
        Reduction red{Conic(a.inv.I3 / a.inv.I2, zero, zero, b11, zero, b22), std::nullopt, {}};
        Motion rot = Motion::rotation(phi);
        red.motion = Motion::from_parts(rot.ch(), rot.sh(), ctr->x, ctr->y);
        if (!root.is_exact() && c.is_exact())
          red.notes.push_back("reduced diagonal required an irrational square root");
        return red;
      }
      return reduce_family1_rank1(a, phi);
    }
    case Family::Family2: {
      if (a.s1 != 0) {
        std::optional<PEPoint> ctr = center_for_reduction(a);
        if (!ctr) return unresolved_reduction(c);
        Reduction red{Conic(a.inv.I3 / a.inv.I2, zero, zero, c.a11(), c.a12(), c.a22()),
                      Motion::translation(ctr->x, ctr->y),
                      {"family-2 canonical keeps the centered input's quadratic part; the "
                       "canonical parameter c is not a motion invariant"}};
        return red;
      }
      // I1 = 0: quadratic part is av * (x + e y)^2 with e = -side
      Scalar av = (c.a11() + c.a22()) / Scalar(2);
      Scalar e(-a.dc.side);
      Scalar w = c.a01() - e * c.a02();
      Scalar u0 = -c.a01() / av;
      if (a.s3 != 0) {
        // av u^2 + 2(-e w) y = 0 after two translations
        Conic step1 = translation_transport(c, u0, zero);
        Scalar ss = e * step1.a00() / (Scalar(2) * w);
        Reduction red{Conic(zero, zero, -e * w, av, e * av, av),
                      Motion::translation(u0 - e * ss, ss),
                      {}};
        return red;
      }
      // av u^2 + (a00 - a01^2/av) = 0
      Scalar q = c.a01() * c.a01() - av * c.a00();
      Reduction red{Conic(-(q / av), zero, zero, av, e * av, av),
                    Motion::translation(u0, zero),
                    {}};
      return red;
    }
    case Family::Family3: {
      std::optional<PEPoint> ctr = center_for_reduction(a);
      if (!ctr) return unresolved_reduction(c);
      return {Conic(a.inv.I3 / a.inv.I2, zero, zero, c.a11(), c.a12(), c.a22()),
              Motion::translation(ctr->x, ctr->y),
              {}};
    }
    case Family::Family4: {
      if (!a.sigma_zero && a.s1 != 0) {
        std::optional<PEPoint> ctr = center_for_reduction(a);
        if (!ctr) return unresolved_reduction(c);
        return {Conic(a.inv.I3 / a.inv.I2, zero, zero, c.a11(), zero, c.a22()),
                Motion::translation(ctr->x, ctr->y),
                {}};
      }
      // omega composites: only a representative exists, no finite motion
      std::vector<std::string> notes{"composite containing the absolute line; no reducing "
                                     "motion is reported"};
      if (a.s4 > 0)
        return {Conic(zero, zero, sqrt(a.inv.I4), zero, zero, zero), std::nullopt, notes};
      if (a.s4 < 0)
        return {Conic(zero, sqrt(-a.inv.I4), zero, zero, zero, zero), std::nullopt, notes};
      if (sign_eps(c.a01(), a.eps, a.coeff_scale) != 0) {
        Scalar e((c.a01() * c.a02()).sign() >= 0 ? 1 : -1);
        return {Conic(zero, Scalar(1), e, zero, zero, zero), std::nullopt, notes};
      }
      return {Conic(Scalar(1), zero, zero, zero, zero, zero), std::nullopt, notes};
    }
  }
  throw InternalError("unhandled family in reduce");
}

}  // namespace

Family family_of(const Conic& c, double eps) { return analyze(c, eps).fam; }

std::optional<PEPoint> center(const Conic& c, double eps) {
  return center_impl(analyze(c, eps));
}

Reduction reduce(const Conic& c, double eps) { return reduce_impl(analyze(c, eps)); }

SemiAxes semiaxes(const Conic& canonical, double eps) {
  const Conic& c = canonical;
  double cs = c.coeff_scale();
  bool diagonal = sign_eps(c.a12(), eps, cs) == 0 && sign_eps(c.a01(), eps, cs) == 0 &&
                  sign_eps(c.a02(), eps, cs) == 0;
  if (!diagonal || sign_eps(c.a11(), eps, cs) == 0 || sign_eps(c.a22(), eps, cs) == 0 ||
      sign_eps(c.a00(), eps, cs) == 0)
    throw NotApplicable("semiaxes: need a diagonal conic with a00, a11, a22 all nonzero");
  return {sqrt(abs(c.a00() / c.a11())), sqrt(abs(c.a00() / c.a22()))};
}

ClassificationReport classify(const Conic& c, double eps) {
  Analysis a = analyze(c, eps);
  std::string_view id = classify_id_impl(a);
  const ConicClass& cls = taxonomy_entry(id);
  Reduction red = reduce_impl(a);
  std::optional<SemiAxes> axes;
  try {
    axes = semiaxes(red.canonical, eps);
  } catch (const NotApplicable&) {
  }
  ClassificationReport report{c,
                              invariants(c),
                              a.fam,
                              cls,
                              std::move(red.canonical),
                              std::move(red.motion),
                              std::move(axes),
                              center_impl(a),
                              std::move(red.notes)};
  return report;
}

const ConicClass& classify_class(const Conic& c, double eps) {
  return taxonomy_entry(classify_id_impl(analyze(c, eps)));
}

HyperbolaVParams hyperbola_v_params(const Conic& c, double eps) {
  Analysis a = analyze(c, eps);
  if (classify_id_impl(a) != std::string_view("f3-hyperbola-V"))
    throw NotApplicable("hyperbola_v_params: conic is not a hyperbola V");
  Invariants inv = invariants(c);
  // the Table-3 normalization has a00bar = I3/I2 = -a^4; representatives
  // scaled by -1 flip I3, so the magnitude carries a^4 either way
  Scalar a4 = abs(inv.I3 / inv.I2);
  Scalar av = sqrt(sqrt(a4));
  Scalar cv = sqrt(abs(inv.I2)) / (Scalar(2) * av);
  return {std::move(av), std::move(cv)};
}

}  // namespace pec
