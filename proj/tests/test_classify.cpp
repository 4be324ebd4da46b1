#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "helpers.hpp"
#include "pec/classify.hpp"
#include "pec/synthesis.hpp"

using namespace pec;
using pectest::close;
using pectest::conic;

TEST_CASE("family anchors") {
  CHECK(family_of(conic("-1,0,0,0.25,0,-1")) == Family::Family1);
  CHECK(family_of(conic("-16,0,0,3,1,-5")) == Family::Family2);
  CHECK(family_of(conic("-4,0,0,1,0,-1")) == Family::Family4);
  CHECK(family_of(conic("-16,0,0,3,-5,3")) == Family::Family3);
  CHECK(family_of(conic("0,1,0,0,0,0")) == Family::Family4);
}

TEST_CASE("center anchors") {
  auto c = center(conic("-3,1,0,1,0,-1"));
  REQUIRE(c.has_value());
  CHECK(c->x == Scalar(-1));
  CHECK(c->y == Scalar(0));

  c = center(conic("-1,0,0,0.25,0,-1"));
  REQUIRE(c.has_value());
  CHECK(c->x == Scalar(0));
  CHECK(c->y == Scalar(0));

  CHECK_FALSE(center(conic("0,-0.5,0,0,0,1")).has_value());  // y^2 - x = 0
}

TEST_CASE("gradient vanishes at the center") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Conic c = random_conic(seed, 6);
    auto ctr = center(c);
    if (!ctr) continue;
    Scalar gx = c.a11() * ctr->x + c.a12() * ctr->y + c.a01();
    Scalar gy = c.a12() * ctr->x + c.a22() * ctr->y + c.a02();
    CHECK(gx == Scalar(0));
    CHECK(gy == Scalar(0));
  }
}

TEST_CASE("reduce anchors") {
  // x^2 - y^2 + 2x - 3 = 0 -> x^2 - y^2 - 4 = 0 via translation (-1, 0)
  Reduction r = reduce(conic("-3,1,0,1,0,-1"));
  CHECK(pectest::same_coeffs(r.canonical, conic("-4,0,0,1,0,-1")));
  REQUIRE(r.motion.has_value());
  CHECK(r.motion->tx() == Scalar(-1));
  CHECK(r.motion->ty() == Scalar(0));
  CHECK(r.motion->sh() == Scalar(0));
  Conic moved = transform(conic("-3,1,0,1,0,-1"), *r.motion);
  CHECK(pectest::same_coeffs(moved, r.canonical));

  // already centered second-family conic reduces to itself
  r = reduce(conic("-16,0,0,3,1,-5"));
  CHECK(pectest::same_coeffs(r.canonical, conic("-16,0,0,3,1,-5")));
  REQUIRE(r.motion.has_value());
  CHECK(r.motion->is_identity());

  // canonical forms are fixed points with the identity motion
  for (const char* s : {"-1,0,0,0.25,0,-1", "-1,0,0,1,0,0.25", "1,0,0,1,0,2"}) {
    r = reduce(conic(s));
    CHECK(pectest::same_coeffs(r.canonical, conic(s)));
    REQUIRE(r.motion.has_value());
    CHECK(r.motion->is_identity());
  }
}

TEST_CASE("semiaxes anchors") {
  SemiAxes ax = semiaxes(conic("-1,0,0,0.25,0,-1"));
  CHECK(ax.a == Scalar(2));
  CHECK(ax.b == Scalar(1));
  ax = semiaxes(conic("-4,0,0,1,0,-1"));
  CHECK(ax.a == Scalar(2));
  CHECK(ax.b == Scalar(2));
  CHECK_THROWS_AS(semiaxes(conic("0,0,0,1,0,-1")), NotApplicable);
  CHECK_THROWS_AS(semiaxes(conic("-16,0,0,3,1,-5")), NotApplicable);
}

TEST_CASE("taxonomy totals") {
  const auto& tax = taxonomy();
  CHECK(tax.size() == 43);
  int proper = 0;
  std::map<Family, std::pair<int, int>> by_family;  // proper, degenerate
  int reconstructed = 0;
  std::set<std::string_view> ids;
  for (const auto& t : tax) {
    ids.insert(t.id);
    proper += t.proper ? 1 : 0;
    auto& slot = by_family[t.family];
    (t.proper ? slot.first : slot.second)++;
    reconstructed += t.reconstructed ? 1 : 0;
  }
  CHECK(ids.size() == 43);  // ids are unique
  CHECK(proper == 20);
  CHECK(by_family[Family::Family1] == std::pair<int, int>(12, 11));
  CHECK(by_family[Family::Family2] == std::pair<int, int>(5, 5));
  CHECK(by_family[Family::Family3] == std::pair<int, int>(1, 1));
  CHECK(by_family[Family::Family4] == std::pair<int, int>(2, 6));
  CHECK(reconstructed == 12);
  CHECK_THROWS_AS(taxonomy_entry("no-such-id"), UnknownId);
}

TEST_CASE("classification anchors from the tables") {
  auto id_of = [](const char* coeffs) {
    return std::string(classify_class(conic(coeffs)).id);
  };
  // family 1
  CHECK(id_of("-1,0,0,0.25,0,-1") == "f1-hyperbola-I-first");
  CHECK(id_of("-1,0,0,1,0,-0.25") == "f1-hyperbola-IV-second");
  CHECK(id_of("-1,0,0,-1,0,0.2") == "f1-hyperbola-I-second");   // -x^2 + y^2/5 = 1
  CHECK(id_of("-1,0,0,-0.25,0,1") == "f1-hyperbola-IV-first");  // -x^2/4 + y^2 = 1
  CHECK(id_of("-1,0,0,0.25,0,1") == "f1-real-ellipse-first");
  CHECK(id_of("-1,0,0,1,0,0.25") == "f1-real-ellipse-second");
  CHECK(id_of("-1,0,0,1,0,1") == "f1-real-ellipse-special");
  CHECK(id_of("1,0,0,0.25,0,1") == "f1-imaginary-ellipse-first");
  CHECK(id_of("1,0,0,1,0,1") == "f1-imaginary-ellipse-special");
  CHECK(id_of("0,-1,0,0,0,1") == "f1-parabola-first");   // y^2 = 2x
  CHECK(id_of("0,0,-1,1,0,0") == "f1-parabola-second");  // x^2 = 2y
  CHECK(id_of("0,0,0,0.25,0,1") == "f1-imaginary-pair-first");
  CHECK(id_of("0,0,0,0.25,0,-1") == "f1-intersecting-pair-first");
  CHECK(id_of("0,0,0,2,0,-1") == "f1-intersecting-pair-second");
  CHECK(id_of("-1,0,0,0,0,1") == "f1-parallel-pair-real-first");       // y^2 = 1
  CHECK(id_of("-1,0,0,1,0,0") == "f1-parallel-pair-real-second");      // x^2 = 1
  CHECK(id_of("1,0,0,0,0,1") == "f1-parallel-pair-imaginary-first");   // y^2 = -1
  CHECK(id_of("1,0,0,1,0,0") == "f1-parallel-pair-imaginary-second");  // x^2 = -1
  CHECK(id_of("0,0,0,0,0,1") == "f1-double-line-first");               // y^2 = 0
  CHECK(id_of("0,0,0,1,0,0") == "f1-double-line-second");              // x^2 = 0
  // family 2: the worked hyperbola II instance and its relatives
  CHECK(id_of("-16,0,0,3,1,-5") == "f2-hyperbola-II-first");
  CHECK(id_of("16,0,0,5,-1,-3") == "f2-hyperbola-II-second");
  CHECK(id_of("16,0,0,3,1,-5") == "f2-hyperbola-III-first");
  CHECK(id_of("-16,0,0,5,-1,-3") == "f2-hyperbola-III-second");
  CHECK(id_of("0,0,-1,1,1,1") == "f2-parabola-double-isotropic");
  CHECK(id_of("0,0,0,3,1,-5") == "f2-pair-isotropic-spacelike");
  CHECK(id_of("0,0,0,5,-1,-3") == "f2-pair-isotropic-timelike");
  CHECK(id_of("-1,0,0,1,1,1") == "f2-parallel-isotropic-pair-real");
  CHECK(id_of("1,0,0,1,1,1") == "f2-parallel-isotropic-pair-imaginary");
  CHECK(id_of("0,0,0,1,1,1") == "f2-double-isotropic-line");
  // family 3
  CHECK(id_of("-16,0,0,3,-5,3") == "f3-hyperbola-V");
  CHECK(id_of("0,0,0,3,-5,3") == "f3-pair-spacelike-timelike");
  CHECK(id_of("0,0,0,0,1,0") == "f3-pair-spacelike-timelike");  // xy = 0
  // family 4
  CHECK(id_of("-4,0,0,1,0,-1") == "f4-hyperbolic-circle-first");
  CHECK(id_of("4,0,0,1,0,-1") == "f4-hyperbolic-circle-second");
  CHECK(id_of("0,0,0,1,0,-1") == "f4-pair-isotropic-lines");
  CHECK(id_of("0,0,1,0,0,0") == "f4-omega-plus-spacelike");
  CHECK(id_of("0,1,0,0,0,0") == "f4-omega-plus-timelike");
  CHECK(id_of("0,1,1,0,0,0") == "f4-omega-plus-isotropic");
  CHECK(id_of("5,0,0,0,0,0") == "f4-double-omega");
}

TEST_CASE("report invariants for the worked hyperbola") {
  ClassificationReport rep = classify(conic("-1,0,0,0.25,0,-1"));
  CHECK(rep.cls.id == "f1-hyperbola-I-first");
  CHECK(rep.cls.display_name == "first type hyperbola I");
  CHECK(rep.invariants.I1 == Scalar::ratio(5, 4));
  CHECK(rep.invariants.I2 == Scalar::ratio(-1, 4));
  CHECK(rep.invariants.I3 == Scalar::ratio(1, 4));
  REQUIRE(rep.semiaxes.has_value());
  CHECK(rep.semiaxes->a == Scalar(2));
  CHECK(rep.semiaxes->b == Scalar(1));
  REQUIRE(rep.center.has_value());
  CHECK(rep.center->x == Scalar(0));
  // conditions quoted in the class table hold: I2 < 0, I1*I3 > 0
  CHECK(rep.invariants.I2.sign() < 0);
  CHECK((rep.invariants.I1 * rep.invariants.I3).sign() > 0);
}

TEST_CASE("zero polynomial handling") {
  CHECK_THROWS_AS(Conic(Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0)),
                  InvalidConic);
  // the id is reserved so the table still counts 43
  CHECK(taxonomy_entry("f4-zero-polynomial").family == Family::Family4);
  CHECK_THROWS_AS(canonical_conic("f4-zero-polynomial", {}), BadParams);
}

TEST_CASE("classification is scale invariant") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    Conic c = random_conic(seed, 5);
    std::string_view id = classify_class(c).id;
    for (long k : {2L, -1L, -3L}) {
      CHECK(classify_class(c.scaled(Scalar(k))).id == id);
    }
    CHECK(classify_class(c.scaled(Scalar::ratio(1, 7))).id == id);
  }
}

TEST_CASE("classification is motion invariant (exact fuzz)") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    Conic c = random_conic(seed, 5);
    std::string_view id = classify_class(c).id;
    for (std::uint64_t m = 0; m < 3; ++m) {
      Motion mo = random_motion_exact(seed * 17 + m, -1.5, 1.5, 4);
      CHECK(classify_class(transform(c, mo)).id == id);
    }
  }
}

TEST_CASE("family matches the isotropic-point oracle (exact fuzz)") {
  for (std::uint64_t seed = 1; seed <= 2000; ++seed) {
    Conic c = random_conic(seed, 6);
    CHECK(family_of(c) == pectest::family_from_isotropic(c));
  }
}

TEST_CASE("classification of the canonical form is idempotent") {
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    Conic c = random_conic(seed, 5);
    ClassificationReport rep = classify(c);
    CHECK(classify_class(rep.canonical).id == rep.cls.id);
  }
}

TEST_CASE("reducing motion reproduces the canonical form") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Conic c = random_conic(seed, 5);
    ClassificationReport rep = classify(c);
    if (!rep.motion) continue;
    Conic moved = transform(c, *rep.motion);
    double scale = std::max(moved.coeff_scale(), rep.canonical.coeff_scale());
    double tol = 1e-9 * std::max(1.0, scale);
    auto coeff_close = [&](const Scalar& x, const Scalar& y) {
      return std::fabs(x.value() - y.value()) <= tol;
    };
    CHECK(coeff_close(moved.a00(), rep.canonical.a00()));
    CHECK(coeff_close(moved.a01(), rep.canonical.a01()));
    CHECK(coeff_close(moved.a02(), rep.canonical.a02()));
    CHECK(coeff_close(moved.a11(), rep.canonical.a11()));
    CHECK(coeff_close(moved.a12(), rep.canonical.a12()));
    CHECK(coeff_close(moved.a22(), rep.canonical.a22()));
  }
}

TEST_CASE("semiaxes are motion invariants") {
  for (std::uint64_t seed = 1; seed <= 80; ++seed) {
    Conic c = random_conic(seed, 4);
    ClassificationReport rep = classify(c);
    if (!rep.semiaxes) continue;
    Motion m = random_motion_exact(seed + 3, -1.0, 1.0, 3);
    ClassificationReport rep2 = classify(transform(c, m));
    REQUIRE(rep2.semiaxes.has_value());
    CHECK(close(rep.semiaxes->a.value(), rep2.semiaxes->a.value(), 1e-9));
    CHECK(close(rep.semiaxes->b.value(), rep2.semiaxes->b.value(), 1e-9));
  }
}

// Independent re-derivation of the family-1 dispatch from the invariant
// quadruple (sgn(a11+a22), I1, I2, I3) alone; raw coefficients only enter
// through the motion-invariant trace sign.
namespace {
std::string_view family1_from_invariants(int tau, int s1, int s2, int s3, int s4) {
  int j1 = tau * s1;
  if (s2 > 0) {
    if (s3 != 0) {
      bool im = tau * s3 > 0;
      if (j1 < 0) return im ? "f1-imaginary-ellipse-first" : "f1-real-ellipse-first";
      if (j1 > 0) return im ? "f1-imaginary-ellipse-second" : "f1-real-ellipse-second";
      return im ? "f1-imaginary-ellipse-special" : "f1-real-ellipse-special";
    }
    return j1 < 0 ? "f1-imaginary-pair-first"
                  : (j1 > 0 ? "f1-imaginary-pair-second" : "f1-imaginary-pair-special");
  }
  if (s2 < 0) {
    if (s3 != 0) {
      if (s1 * s3 > 0) return j1 < 0 ? "f1-hyperbola-I-first" : "f1-hyperbola-IV-second";
      return j1 > 0 ? "f1-hyperbola-I-second" : "f1-hyperbola-IV-first";
    }
    return j1 < 0 ? "f1-intersecting-pair-first" : "f1-intersecting-pair-second";
  }
  if (s3 != 0) return j1 < 0 ? "f1-parabola-first" : "f1-parabola-second";
  if (s4 * j1 < 0)
    return j1 < 0 ? "f1-parallel-pair-real-first" : "f1-parallel-pair-real-second";
  if (s4 * j1 > 0)
    return j1 < 0 ? "f1-parallel-pair-imaginary-first" : "f1-parallel-pair-imaginary-second";
  return j1 < 0 ? "f1-double-line-first" : "f1-double-line-second";
}
}  // namespace

TEST_CASE("family-1 dispatch is a function of invariants plus the trace sign") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 3000 && checked < 400; ++seed) {
    Conic c = random_conic(seed, 6);
    if (family_of(c) != Family::Family1) continue;
    ++checked;
    Invariants inv = invariants(c);
    int tau = (c.a11() + c.a22()).sign();
    std::string_view expect = family1_from_invariants(tau, inv.I1.sign(), inv.I2.sign(),
                                                      inv.I3.sign(), inv.I4.sign());
    CHECK(classify_class(c).id == expect);
  }
  CHECK(checked == 400);
}

TEST_CASE("family-2 line pairs carry the advertised companion kind") {
  // the degenerate family-2 pair has one isotropic line; the other line's
  // direction kind must match the name picked by the invariant dispatch
  for (std::uint64_t seed = 1; seed <= 1500; ++seed) {
    Conic c = random_conic(seed, 6);
    std::string_view id = classify_class(c).id;
    if (id != "f2-pair-isotropic-spacelike" && id != "f2-pair-isotropic-timelike") continue;
    auto ips = isotropic_points(c);
    REQUIRE(ips.reality == PointReality::TwoRealDistinct);
    DirectionKind other = DirectionKind::IsotropicDirection;
    for (const auto& p : ips.points)
      if (p.kind != DirectionKind::IsotropicDirection) other = p.kind;
    if (id == "f2-pair-isotropic-spacelike")
      CHECK(other == DirectionKind::SpacelikeDirection);
    else
      CHECK(other == DirectionKind::TimelikeDirection);
  }
  // anchors from the Table 2 canonical forms
  auto check_pair = [](const char* coeffs, DirectionKind expect) {
    auto ips = isotropic_points(conic(coeffs));
    int hits = 0;
    for (const auto& p : ips.points) hits += p.kind == expect ? 1 : 0;
    CHECK(hits == 1);
  };
  check_pair("0,0,0,3,1,-5", DirectionKind::SpacelikeDirection);
  check_pair("0,0,0,5,-1,-3", DirectionKind::TimelikeDirection);
}

TEST_CASE("hyperbola V parameter recovery") {
  Conic h = conic("-16,0,0,3,-5,3");  // Table-3 form with (a, c) = (2, 1)
  HyperbolaVParams p = hyperbola_v_params(h);
  CHECK(p.a == Scalar(2));
  CHECK(p.c == Scalar(1));
  // round-trip through the constructor
  CanonicalParams cp;
  cp.a = p.a;
  cp.c = p.c;
  CHECK(pectest::same_coeffs(canonical_conic("f3-hyperbola-V", cp), h));
  CHECK_THROWS_AS(hyperbola_v_params(conic("0,0,0,3,-5,3")), NotApplicable);
  CHECK_THROWS_AS(hyperbola_v_params(conic("-1,0,0,0.25,0,-1")), NotApplicable);

  // parameters are recovered from any scaling of the equation
  HyperbolaVParams pneg = hyperbola_v_params(h.scaled(Scalar(-1)));
  CHECK(pneg.a == Scalar(2));
  CHECK(pneg.c == Scalar(1));
  HyperbolaVParams pscaled = hyperbola_v_params(h.scaled(Scalar::ratio(1, 4)));
  // a^4 scales with the equation: (1/4)^3 * 256 / ((1/4)^2 * 16) = 4
  CHECK(close((pscaled.a * pscaled.a).value(), 2.0, 1e-12));
}

TEST_CASE("near-degenerate float inputs never crash the cascade") {
  // sigma entries straddling the zero band while the linear part stays of
  // order one: the quadratic-scale and linear-scale sign tests can disagree
  // here, and classify/reduce must degrade deterministically
  std::mt19937_64 gen(424242);
  std::uniform_real_distribution<double> mag(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-12, 0);
  std::size_t classified = 0;
  for (int i = 0; i < 4000; ++i) {
    double s = std::pow(10.0, expo(gen));
    Conic c(Scalar(mag(gen)), Scalar(mag(gen)), Scalar(mag(gen)),
            Scalar(mag(gen) * s), Scalar(mag(gen) * s), Scalar(mag(gen) * s));
    try {
      ClassificationReport rep = classify(c);
      ++classified;
      // the report payload stays finite
      CHECK(std::isfinite(rep.canonical.a00().value()));
      CHECK(std::isfinite(rep.canonical.a11().value()));
      if (rep.motion) {
        CHECK(std::isfinite(rep.motion->tx().value()));
        CHECK(std::isfinite(rep.motion->ch().value()));
      }
    } catch (const InvalidConic&) {
      // acceptable: collapses to the zero polynomial at this resolution
    }
  }
  CHECK(classified > 3500);

  // the two corner shapes found by hand stay crash-free and deterministic
  Conic corner1 = pectest::conic_f("0,1,0,0.000015,0,0.000015");
  CHECK(classify(corner1).cls.id == "f1-real-ellipse-special");
  Conic corner2 = pectest::conic_f("0,1,0,0.000015,0.000014,-0.0000151");
  CHECK_NOTHROW(classify(corner2));
  CHECK_NOTHROW(reduce(corner2));
}

TEST_CASE("float mode classifies noisy transported conics stably") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Conic c = canonical_conic("f1-real-ellipse-special", {});
    Motion m = random_motion(seed, -1.5, 1.5, -3.0, 3.0);
    Conic cf(Scalar(c.a00().value()), Scalar(c.a01().value()), Scalar(c.a02().value()),
             Scalar(c.a11().value()), Scalar(c.a12().value()), Scalar(c.a22().value()));
    Conic moved = transform(cf, m);
    CHECK(classify_class(moved).id == "f1-real-ellipse-special");
  }
}

TEST_CASE("reconstructed degenerate rows factor as advertised") {
  // real parallel isotropic pair: samples lie on exactly two isotropic lines
  Conic pair = canonical_conic("f2-parallel-isotropic-pair-real", {});
  auto pts = sample_conic_points(pair, 40);
  REQUIRE(pts.size() >= 10);
  std::set<std::string> levels;
  for (const auto& p : pts) levels.insert((p.x + p.y).str());
  CHECK(levels.size() == 2);

  // double isotropic line: a single level set
  Conic dbl = canonical_conic("f2-double-isotropic-line", {});
  pts = sample_conic_points(dbl, 20);
  REQUIRE(!pts.empty());
  levels.clear();
  for (const auto& p : pts) levels.insert((p.x + p.y).str());
  CHECK(levels.size() == 1);

  // imaginary parallel pair has an empty real locus
  Conic im = canonical_conic("f2-parallel-isotropic-pair-imaginary", {});
  CHECK(sample_conic_points(im, 20).empty());

  // first/second type parabolas carry the advertised double isotropic point
  auto ips = isotropic_points(canonical_conic("f1-parabola-first", {}));
  REQUIRE(ips.reality == PointReality::OneRealDouble);
  CHECK(ips.points[0].kind == DirectionKind::SpacelikeDirection);
  ips = isotropic_points(canonical_conic("f1-parabola-second", {}));
  CHECK(ips.points[0].kind == DirectionKind::TimelikeDirection);

  // real parallel pair: two parallel non-isotropic level lines
  Conic rp = canonical_conic("f1-parallel-pair-real-first", {});
  pts = sample_conic_points(rp, 30);
  REQUIRE(pts.size() >= 10);
  levels.clear();
  for (const auto& p : pts) levels.insert(p.y.str());
  CHECK(levels.size() == 2);
}
