#include "pec/synthesis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace pec {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw BadParams(msg);
}

Scalar sq(const Scalar& x) { return x * x; }

}  // namespace

Conic hyperbola_I(const FocusParams& p) {
  require(p.axis == FocusAxis::XAxis || p.axis == FocusAxis::YAxis,
          "hyperbola_I: foci lie on a coordinate axis");
  require(p.a.sign() > 0 && p.c.sign() > 0, "hyperbola_I: a and c must be positive");
  Scalar one(1), a2 = sq(p.a), c2 = sq(p.c), zero = p.a.is_exact() ? Scalar(0) : Scalar(0.0);
  if (p.type == HyperbolaType::First) {
    if (p.axis == FocusAxis::XAxis) {
      require((a2 - c2).sign() > 0, "hyperbola_I: first type needs a > c");
      // x^2/a^2 - y^2/b^2 = 1, b^2 = a^2 - c^2
      return Conic(-one, zero, zero, one / a2, zero, -(one / (a2 - c2)));
    }
    // foci (0, +-c), constant 2a: x^2/(a^2+c^2) - y^2/a^2 = 1
    return Conic(-one, zero, zero, one / (a2 + c2), zero, -(one / a2));
  }
  if (p.axis == FocusAxis::XAxis) {
    // -x^2/a^2 + y^2/b^2 = 1, b^2 = a^2 + c^2
    return Conic(-one, zero, zero, -(one / a2), zero, one / (a2 + c2));
  }
  require((a2 - c2).sign() > 0, "hyperbola_I: second type on the y-axis needs a > c");
  return Conic(-one, zero, zero, -(one / (a2 - c2)), zero, one / a2);
}

Conic hyperbola_II(const FocusParams& p) {
  require(p.axis == FocusAxis::IsoPlus || p.axis == FocusAxis::IsoMinus,
          "hyperbola_II: foci lie on an isotropic line");
  require(p.a.sign() > 0 && p.c.sign() > 0, "hyperbola_II: a and c must be positive");
  Scalar a2 = sq(p.a), c2 = sq(p.c), a4 = sq(a2);
  require((a2 - c2).sign() > 0, "hyperbola_II: needs a > c");
  Scalar zero = p.a.is_exact() ? Scalar(0) : Scalar(0.0);
  // IsoPlus, first type: x^2(a^2-c^2) + 2xyc^2 - y^2(a^2+c^2) - a^4 = 0;
  // the IsoMinus variant flips the xy sign, the second type swaps the
  // quadratic coefficients and the sign of the constant.
  bool plus = p.axis == FocusAxis::IsoPlus;
  if (p.type == HyperbolaType::First) {
    Scalar a12 = plus ? c2 : -c2;
    return Conic(-a4, zero, zero, a2 - c2, a12, -(a2 + c2));
  }
  Scalar a12 = plus ? -c2 : c2;
  return Conic(a4, zero, zero, a2 + c2, a12, -(a2 - c2));
}

std::pair<PEPoint, PEPoint> foci_of(const FocusParams& p) {
  Scalar zero = p.c.is_exact() ? Scalar(0) : Scalar(0.0);
  switch (p.axis) {
    case FocusAxis::XAxis: return {{p.c, zero}, {-p.c, zero}};
    case FocusAxis::YAxis: return {{zero, p.c}, {zero, -p.c}};
    case FocusAxis::IsoPlus: return {{p.c, p.c}, {-p.c, -p.c}};
    case FocusAxis::IsoMinus: return {{-p.c, p.c}, {p.c, -p.c}};
  }
  throw BadParams("foci_of: bad axis");
}

Scalar locus_constant_sq(const FocusParams& p) {
  Scalar k = Scalar(4) * sq(p.a);
  return p.type == HyperbolaType::First ? k : -k;
}

namespace {

Scalar get_or(const std::optional<Scalar>& v, long def) {
  return v ? *v : Scalar(def);
}

struct EllipseLike {
  Scalar a, b;
};

EllipseLike ab_params(const CanonicalParams& p, TypeTag tag) {
  // defaults satisfy the side condition of the requested type
  Scalar a = get_or(p.a, tag == TypeTag::Second ? 1 : 2);
  Scalar b = get_or(p.b, tag == TypeTag::Second ? 2 : 1);
  if (tag == TypeTag::Special) b = p.b ? *p.b : a;
  require(a.sign() > 0 && b.sign() > 0, "canonical_conic: semiaxes must be positive");
  int cmp = (a - b).sign();
  if (tag == TypeTag::First) require(cmp > 0, "canonical_conic: first type needs a > b");
  if (tag == TypeTag::Second) require(cmp < 0, "canonical_conic: second type needs a < b");
  if (tag == TypeTag::Special) require(cmp == 0, "canonical_conic: special type needs a = b");
  return {std::move(a), std::move(b)};
}

struct AcParams {
  Scalar a2, c2, a4;
};

AcParams ac_params(const CanonicalParams& p, bool need_a_gt_c) {
  Scalar a = get_or(p.a, 2), c = get_or(p.c, 1);
  require(a.sign() > 0 && c.sign() > 0, "canonical_conic: a and c must be positive");
  if (need_a_gt_c) require((a - c).sign() > 0, "canonical_conic: needs a > c");
  Scalar a2 = sq(a);
  return {a2, sq(c), sq(a2)};
}

}  // namespace

Conic canonical_conic(std::string_view id, const CanonicalParams& params) {
  const ConicClass& cls = taxonomy_entry(id);  // validates the id
  Scalar zero(0), one(1);

  if (id == "f1-imaginary-ellipse-first" || id == "f1-imaginary-ellipse-second" ||
      id == "f1-imaginary-ellipse-special") {
    auto [a, b] = ab_params(params, cls.type_tag);
    return Conic(one, zero, zero, one / sq(a), zero, one / sq(b));
  }
  if (id == "f1-real-ellipse-first" || id == "f1-real-ellipse-second" ||
      id == "f1-real-ellipse-special") {
    auto [a, b] = ab_params(params, cls.type_tag);
    return Conic(-one, zero, zero, one / sq(a), zero, one / sq(b));
  }
  if (id == "f1-hyperbola-I-first" || id == "f1-hyperbola-IV-second") {
    auto [a, b] = ab_params(params, cls.type_tag);
    return Conic(-one, zero, zero, one / sq(a), zero, -(one / sq(b)));
  }
  if (id == "f1-hyperbola-I-second" || id == "f1-hyperbola-IV-first") {
    auto [a, b] = ab_params(params, cls.type_tag);
    return Conic(-one, zero, zero, -(one / sq(a)), zero, one / sq(b));
  }
  if (id == "f1-parabola-first" || id == "f1-parabola-second") {
    Scalar p = get_or(params.p, 1);
    require(p.sign() != 0, "canonical_conic: parabola needs p != 0");
    if (id == "f1-parabola-first") return Conic(zero, -p, zero, zero, zero, one);
    return Conic(zero, zero, -p, one, zero, zero);
  }
  if (id == "f1-imaginary-pair-first" || id == "f1-imaginary-pair-second" ||
      id == "f1-imaginary-pair-special") {
    auto [a, b] = ab_params(params, cls.type_tag);
    return Conic(zero, zero, zero, one / sq(a), zero, one / sq(b));
  }
  if (id == "f1-intersecting-pair-first" || id == "f1-intersecting-pair-second") {
    auto [a, b] = ab_params(params, cls.type_tag);
    return Conic(zero, zero, zero, one / sq(a), zero, -(one / sq(b)));
  }
  if (id == "f1-parallel-pair-real-first" || id == "f1-parallel-pair-real-second" ||
      id == "f1-parallel-pair-imaginary-first" || id == "f1-parallel-pair-imaginary-second") {
    Scalar k = get_or(params.k, 1);
    require(k.sign() != 0, "canonical_conic: parallel pair needs k != 0");
    bool imag = id.find("imaginary") != std::string_view::npos;
    Scalar c00 = imag ? sq(k) : -sq(k);
    if (cls.type_tag == TypeTag::First) return Conic(c00, zero, zero, zero, zero, one);
    return Conic(c00, zero, zero, one, zero, zero);
  }
  if (id == "f1-double-line-first" || id == "f1-double-line-second") {
    Scalar k = get_or(params.k, 1);
    require(k.sign() > 0, "canonical_conic: double line needs k > 0");
    if (id == "f1-double-line-first") return Conic(zero, zero, zero, zero, zero, k);
    return Conic(zero, zero, zero, k, zero, zero);
  }
  if (id == "f2-hyperbola-II-first") {
    auto [a2, c2, a4] = ac_params(params, true);
    return Conic(-a4, zero, zero, a2 - c2, c2, -(a2 + c2));
  }
  if (id == "f2-hyperbola-II-second") {
    auto [a2, c2, a4] = ac_params(params, true);
    return Conic(a4, zero, zero, a2 + c2, -c2, -(a2 - c2));
  }
  if (id == "f2-hyperbola-III-first") {
    auto [a2, c2, a4] = ac_params(params, true);
    return Conic(a4, zero, zero, a2 - c2, c2, -(a2 + c2));
  }
  if (id == "f2-hyperbola-III-second") {
    auto [a2, c2, a4] = ac_params(params, true);
    return Conic(-a4, zero, zero, a2 + c2, -c2, -(a2 - c2));
  }
  if (id == "f2-parabola-double-isotropic") {
    Scalar p = get_or(params.p, 1);
    require(p.sign() != 0, "canonical_conic: parabola needs p != 0");
    return Conic(zero, zero, -p, one, one, one);
  }
  if (id == "f2-pair-isotropic-spacelike") {
    auto [a2, c2, a4] = ac_params(params, true);
    (void)a4;
    return Conic(zero, zero, zero, a2 - c2, c2, -(a2 + c2));
  }
  if (id == "f2-pair-isotropic-timelike") {
    auto [a2, c2, a4] = ac_params(params, true);
    (void)a4;
    return Conic(zero, zero, zero, a2 + c2, -c2, -(a2 - c2));
  }
  if (id == "f2-parallel-isotropic-pair-real" || id == "f2-parallel-isotropic-pair-imaginary") {
    Scalar k = get_or(params.k, 1);
    require(k.sign() != 0, "canonical_conic: parallel pair needs k != 0");
    bool imag = id.find("imaginary") != std::string_view::npos;
    return Conic(imag ? sq(k) : -sq(k), zero, zero, one, one, one);
  }
  if (id == "f2-double-isotropic-line") {
    Scalar k = get_or(params.k, 1);
    require(k.sign() > 0, "canonical_conic: double line needs k > 0");
    return Conic(zero, zero, zero, k, k, k);
  }
  if (id == "f3-hyperbola-V" || id == "f3-pair-spacelike-timelike") {
    Scalar a = get_or(params.a, 2), c = get_or(params.c, 1);
    require(a.sign() > 0 && c.sign() > 0, "canonical_conic: a and c must be positive");
    Scalar a2 = sq(a), c2 = sq(c);
    Scalar c00 = id == "f3-hyperbola-V" ? -sq(a2) : zero;
    return Conic(c00, zero, zero, a2 - c2, -(a2 + c2), a2 - c2);
  }
  if (id == "f4-hyperbolic-circle-first" || id == "f4-hyperbolic-circle-second") {
    Scalar a = get_or(params.a, 2);
    require(a.sign() > 0, "canonical_conic: hyperbolic circle needs a > 0");
    Scalar c00 = id == "f4-hyperbolic-circle-first" ? -sq(a) : sq(a);
    return Conic(c00, zero, zero, one, zero, -one);
  }
  if (id == "f4-pair-isotropic-lines") {
    Scalar k = get_or(params.k, 1);
    require(k.sign() > 0, "canonical_conic: needs k > 0");
    return Conic(zero, zero, zero, k, zero, -k);
  }
  if (id == "f4-omega-plus-spacelike") {
    Scalar k = get_or(params.k, 1);
    require(k.sign() != 0, "canonical_conic: needs k != 0");
    return Conic(zero, zero, k, zero, zero, zero);
  }
  if (id == "f4-omega-plus-timelike") {
    Scalar k = get_or(params.k, 1);
    require(k.sign() != 0, "canonical_conic: needs k != 0");
    return Conic(zero, k, zero, zero, zero, zero);
  }
  if (id == "f4-omega-plus-isotropic") {
    Scalar k = get_or(params.k, 1);
    require(k.sign() != 0, "canonical_conic: needs k != 0");
    return Conic(zero, k, k, zero, zero, zero);
  }
  if (id == "f4-double-omega") {
    Scalar k = get_or(params.k, 1);
    require(k.sign() != 0, "canonical_conic: needs k != 0");
    return Conic(k, zero, zero, zero, zero, zero);
  }
  if (id == "f4-zero-polynomial")
    throw BadParams("canonical_conic: the zero polynomial has no representative");
  throw UnknownId("canonical_conic: unhandled id " + std::string(id));
}

bool focus_identity_check(const Conic& c, const PEPoint& f1, const PEPoint& f2,
                          const Scalar& const_sq, const std::vector<PEPoint>& samples,
                          double eps) {
  double cs = c.coeff_scale();
  for (const PEPoint& p : samples) {
    Scalar res = evaluate(c, p);
    double pscale = std::max({1.0, p.x.value() * p.x.value(), p.y.value() * p.y.value()});
    if (sign_eps(res, eps, cs * pscale) != 0)
      throw SampleOffConic("focus_identity_check: sample not on the conic");
    PEVector r1{p.x - f1.x, p.y - f1.y};
    PEVector r2{p.x - f2.x, p.y - f2.y};
    Scalar d1 = pe_dot(r1, r1);
    Scalar d2 = pe_dot(r2, r2);
    Scalar lhs = sq(d1 + d2 - const_sq);
    Scalar rhs = Scalar(4) * d1 * d2;
    Scalar diff = lhs - rhs;
    if (diff.is_exact()) {
      if (diff.sign() != 0) return false;
    } else {
      double scale = std::max(std::fabs(lhs.value()), std::fabs(rhs.value()));
      if (sign_eps(diff, eps, scale) != 0) return false;
    }
  }
  return true;
}

namespace {

// Deterministic small-rational sweep used for seeds and chord slopes.
std::vector<Scalar> rational_ladder(std::size_t max_count) {
  std::vector<Scalar> out;
  out.push_back(Scalar(0));
  for (long den = 1; den <= 6 && out.size() < max_count; ++den) {
    for (long num = 1; num <= 24 && out.size() < max_count; ++num) {
      if (std::gcd(num, den) != 1) continue;
      out.push_back(Scalar::ratio(num, den));
      out.push_back(Scalar::ratio(-num, den));
    }
  }
  return out;
}

// Rational roots of q2 x^2 + q1 x + q0 = 0 (exact); empty when none.
std::vector<Scalar> rational_roots(const Scalar& q2, const Scalar& q1, const Scalar& q0) {
  std::vector<Scalar> roots;
  if (q2.sign() == 0) {
    if (q1.sign() != 0) roots.push_back(-(q0 / q1));
    return roots;
  }
  Scalar disc = q1 * q1 - Scalar(4) * q2 * q0;
  if (disc.sign() < 0) return roots;
  Scalar root = sqrt(disc);
  if (!root.is_exact()) return roots;  // irrational
  Scalar two_q2 = Scalar(2) * q2;
  roots.push_back((-q1 + root) / two_q2);
  if (root.sign() != 0) roots.push_back((-q1 - root) / two_q2);
  return roots;
}

void push_unique(std::vector<PEPoint>& pts, PEPoint p, std::size_t limit) {
  if (pts.size() >= limit) return;
  for (const PEPoint& q : pts)
    if (q.x == p.x && q.y == p.y) return;
  pts.push_back(std::move(p));
}

std::vector<PEPoint> sample_exact(const Conic& c, std::size_t count) {
  std::vector<Scalar> ladder = rational_ladder(120);
  std::vector<PEPoint> pts;
  Scalar two(2);
  // direct seeds: rational intersections with horizontal/vertical lines
  for (const Scalar& y0 : ladder) {
    if (pts.size() >= count) break;
    for (Scalar x : rational_roots(c.a11(), two * (c.a12() * y0 + c.a01()),
                                   c.a22() * y0 * y0 + two * c.a02() * y0 + c.a00()))
      push_unique(pts, {std::move(x), y0}, count);
  }
  for (const Scalar& x0 : ladder) {
    if (pts.size() >= count) break;
    for (Scalar y : rational_roots(c.a22(), two * (c.a12() * x0 + c.a02()),
                                   c.a11() * x0 * x0 + two * c.a01() * x0 + c.a00()))
      push_unique(pts, {x0, std::move(y)}, count);
  }
  if (pts.empty()) return pts;
  // chord sweep around the first seed: the residual root of a line through
  // a conic point is rational
  PEPoint seed = pts.front();
  Scalar fx = two * (c.a11() * seed.x + c.a12() * seed.y + c.a01());
  Scalar fy = two * (c.a12() * seed.x + c.a22() * seed.y + c.a02());
  for (const Scalar& t : ladder) {
    if (pts.size() >= count) break;
    Scalar q2 = c.a11() + two * c.a12() * t + c.a22() * t * t;
    if (q2.sign() == 0) continue;
    Scalar q1 = fx + fy * t;
    Scalar s = -(q1 / q2);
    if (s.sign() == 0) continue;
    push_unique(pts, {seed.x + s, seed.y + s * t}, count);
  }
  return pts;
}

std::vector<PEPoint> sample_float(const Conic& c, std::size_t count, double eps) {
  std::vector<PEPoint> pts;
  const double lo = -6.0, hi = 6.0;
  const int steps = 600;
  for (int axis = 0; axis < 2 && pts.size() < count; ++axis) {
    for (int i = 0; i <= steps && pts.size() < count; ++i) {
      double u = lo + (hi - lo) * i / steps;
      // fix x (axis 0) or y (axis 1), solve the remaining quadratic
      double q2, q1, q0;
      if (axis == 0) {
        q2 = c.a22().value();
        q1 = 2.0 * (c.a12().value() * u + c.a02().value());
        q0 = c.a11().value() * u * u + 2.0 * c.a01().value() * u + c.a00().value();
      } else {
        q2 = c.a11().value();
        q1 = 2.0 * (c.a12().value() * u + c.a01().value());
        q0 = c.a22().value() * u * u + 2.0 * c.a02().value() * u + c.a00().value();
      }
      std::vector<double> roots;
      if (std::fabs(q2) < eps) {
        if (std::fabs(q1) > eps) roots.push_back(-q0 / q1);
      } else {
        double disc = q1 * q1 - 4.0 * q2 * q0;
        if (disc >= 0.0) {
          double r = std::sqrt(disc);
          roots.push_back((-q1 + r) / (2.0 * q2));
          roots.push_back((-q1 - r) / (2.0 * q2));
        }
      }
      for (double r : roots) {
        PEPoint p = axis == 0 ? PEPoint{Scalar(u), Scalar(r)} : PEPoint{Scalar(r), Scalar(u)};
        push_unique(pts, std::move(p), count);
      }
    }
  }
  return pts;
}

}  // namespace

std::vector<PEPoint> sample_conic_points(const Conic& c, std::size_t count, double eps) {
  if (c.is_exact()) {
    std::vector<PEPoint> pts = sample_exact(c, count);
    if (!pts.empty()) return pts;
    // no rational point found; degrade to float sampling
    Conic f(Scalar(c.a00().value()), Scalar(c.a01().value()), Scalar(c.a02().value()),
            Scalar(c.a11().value()), Scalar(c.a12().value()), Scalar(c.a22().value()));
    return sample_float(f, count, eps);
  }
  return sample_float(c, count, eps);
}

Motion random_motion(std::uint64_t seed, double phi_min, double phi_max, double t_min,
                     double t_max) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> phi_dist(phi_min, phi_max);
  std::uniform_real_distribution<double> t_dist(t_min, t_max);
  double phi = phi_dist(gen);
  double tx = t_dist(gen), ty = t_dist(gen);
  return Motion::from_parts(Scalar(std::cosh(phi)), Scalar(std::sinh(phi)), Scalar(tx),
                            Scalar(ty));
}

Motion random_motion_exact(std::uint64_t seed, double phi_min, double phi_max, long t_range) {
  std::mt19937_64 gen(seed);
  double qlo = std::exp(phi_min), qhi = std::exp(phi_max);
  std::uniform_int_distribution<long> den_dist(1, 8);
  std::uniform_real_distribution<double> pick(qlo, qhi);
  long den = den_dist(gen);
  double target = pick(gen);
  long num = std::max<long>(1, std::lround(target * static_cast<double>(den)));
  Scalar ratio = Scalar::ratio(num, den);
  std::uniform_int_distribution<long> t_num(-t_range, t_range);
  Motion rot = Motion::boost(ratio);
  return Motion::from_parts(rot.ch(), rot.sh(),
                            Scalar::ratio(t_num(gen), den_dist(gen)),
                            Scalar::ratio(t_num(gen), den_dist(gen)));
}

Conic random_conic(std::uint64_t seed, long coeff_range) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> num(-coeff_range, coeff_range);
  std::uniform_int_distribution<long> den(1, 4);
  for (;;) {
    Scalar v[6];
    bool nonzero = false;
    for (auto& s : v) {
      s = Scalar::ratio(num(gen), den(gen));
      nonzero = nonzero || s.sign() != 0;
    }
    if (!nonzero) continue;
    return Conic(v[0], v[1], v[2], v[3], v[4], v[5]);
  }
}

Conic random_conic_float(std::uint64_t seed, double coeff_range) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(-coeff_range, coeff_range);
  for (;;) {
    double v[6];
    bool nonzero = false;
    for (double& d : v) {
      d = dist(gen);
      nonzero = nonzero || d != 0.0;
    }
    if (!nonzero) continue;
    return Conic(Scalar(v[0]), Scalar(v[1]), Scalar(v[2]), Scalar(v[3]), Scalar(v[4]),
                 Scalar(v[5]));
  }
}

}  // namespace pec
