#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "pec/classify.hpp"
#include "pec/synthesis.hpp"

using namespace pec;
using pectest::conic;
using pectest::same_coeffs;

TEST_CASE("hyperbola I constructors") {
  FocusParams p{Scalar(2), Scalar(1), HyperbolaType::First, FocusAxis::XAxis};
  Conic h = hyperbola_I(p);
  // x^2/4 - y^2/3 - 1 = 0
  CHECK(same_coeffs(h, conic("-1,0,0,1/4,0,-1/3")));
  CHECK(classify_class(h).id == "f1-hyperbola-I-first");

  CHECK_THROWS_AS(hyperbola_I({Scalar(1), Scalar(1), HyperbolaType::First, FocusAxis::XAxis}),
                  BadParams);
  CHECK_THROWS_AS(hyperbola_I({Scalar(2), Scalar(1), HyperbolaType::First, FocusAxis::IsoPlus}),
                  BadParams);

  // (a, c) = (1, 2) second type: -x^2 + y^2/5 - 1 = 0
  Conic h2 = hyperbola_I({Scalar(1), Scalar(2), HyperbolaType::Second, FocusAxis::XAxis});
  CHECK(same_coeffs(h2, conic("-1,0,0,-1,0,1/5")));
  CHECK(classify_class(h2).id == "f1-hyperbola-I-second");
}

TEST_CASE("hyperbola I from either axis gives the same conic") {
  // foci (+-4, 0) with 2a = 10 and foci (0, +-4) with 2b = 6: b^2 = a^2 - c^2
  Conic fx = hyperbola_I({Scalar(5), Scalar(4), HyperbolaType::First, FocusAxis::XAxis});
  Conic fy = hyperbola_I({Scalar(3), Scalar(4), HyperbolaType::First, FocusAxis::YAxis});
  CHECK(same_coeffs(fx, fy));
}

TEST_CASE("hyperbola II constructors") {
  FocusParams p{Scalar(2), Scalar(1), HyperbolaType::First, FocusAxis::IsoPlus};
  Conic h = hyperbola_II(p);
  CHECK(same_coeffs(h, conic("-16,0,0,3,1,-5")));
  CHECK(invariants(h).I2 == Scalar(-16));  // = -a^4
  CHECK(classify_class(h).id == "f2-hyperbola-II-first");

  Conic h2 = hyperbola_II({Scalar(2), Scalar(1), HyperbolaType::Second, FocusAxis::IsoPlus});
  CHECK(same_coeffs(h2, conic("16,0,0,5,-1,-3")));
  CHECK(classify_class(h2).id == "f2-hyperbola-II-second");

  // the IsoMinus variant differs exactly by the sign of a12 and keeps the type
  Conic hm = hyperbola_II({Scalar(2), Scalar(1), HyperbolaType::First, FocusAxis::IsoMinus});
  CHECK(hm.a12() == -h.a12());
  CHECK(hm.a11() == h.a11());
  CHECK(hm.a22() == h.a22());
  CHECK(hm.a00() == h.a00());
  CHECK(classify_class(hm).id == "f2-hyperbola-II-first");

  CHECK_THROWS_AS(hyperbola_II({Scalar(1), Scalar(1), HyperbolaType::First, FocusAxis::IsoPlus}),
                  BadParams);
  CHECK_THROWS_AS(hyperbola_II({Scalar(2), Scalar(1), HyperbolaType::First, FocusAxis::XAxis}),
                  BadParams);
}

TEST_CASE("canonical constructor anchors") {
  CanonicalParams ab;
  ab.a = Scalar(2);
  ab.b = Scalar(1);
  CHECK(same_coeffs(canonical_conic("f1-real-ellipse-first", ab), conic("-1,0,0,1/4,0,1")));
  CHECK(same_coeffs(canonical_conic("f4-pair-isotropic-lines", {}), conic("0,0,0,1,0,-1")));
  Conic sp = canonical_conic("f4-omega-plus-spacelike", {});
  CHECK(invariants(sp).I4 == Scalar(1));
  CHECK_THROWS_AS(canonical_conic("no-such-id", {}), UnknownId);
  CanonicalParams bad;
  bad.a = Scalar(1);
  bad.b = Scalar(2);
  CHECK_THROWS_AS(canonical_conic("f1-real-ellipse-first", bad), BadParams);
}

TEST_CASE("every constructible id round-trips through classify") {
  for (const ConicClass& cls : taxonomy()) {
    if (cls.id == "f4-zero-polynomial") continue;
    Conic c = canonical_conic(cls.id, {});
    CAPTURE(cls.id);
    CHECK(classify_class(c).id == cls.id);
  }
}

TEST_CASE("focus identity anchors") {
  // x^2/4 - y^2/3 = 1, foci (+-1, 0), 2a = 4
  Conic h = conic("-1,0,0,1/4,0,-1/3");
  PEPoint f1{Scalar(1), Scalar(0)}, f2{Scalar(-1), Scalar(0)};
  // vertex (2,0): d1^2 = 1, d2^2 = 9, (1 + 9 - 16)^2 = 36 = 4*1*9
  std::vector<PEPoint> samples{{Scalar(2), Scalar(0)}, {Scalar(4), Scalar(3)}};
  CHECK(focus_identity_check(h, f1, f2, Scalar(16), samples));
  // an off-conic sample is rejected
  std::vector<PEPoint> bad{{Scalar(1), Scalar(1)}};
  CHECK_THROWS_AS(focus_identity_check(h, f1, f2, Scalar(16), bad), SampleOffConic);
  // a wrong constant fails the identity
  std::vector<PEPoint> probe{{Scalar(4), Scalar(3)}};
  CHECK_FALSE(focus_identity_check(h, f1, f2, Scalar(9), probe));
}

TEST_CASE("focal definitions satisfy the rationalized identity on samples") {
  std::vector<FocusParams> cases = {
      {Scalar(2), Scalar(1), HyperbolaType::First, FocusAxis::XAxis},
      {Scalar(3), Scalar(2), HyperbolaType::First, FocusAxis::XAxis},
      {Scalar(2), Scalar(1), HyperbolaType::Second, FocusAxis::XAxis},
      {Scalar(1), Scalar(2), HyperbolaType::Second, FocusAxis::XAxis},
      {Scalar(2), Scalar(1), HyperbolaType::First, FocusAxis::YAxis},
      {Scalar(2), Scalar(1), HyperbolaType::Second, FocusAxis::YAxis},
      {Scalar(2), Scalar(1), HyperbolaType::First, FocusAxis::IsoPlus},
      {Scalar(2), Scalar(1), HyperbolaType::First, FocusAxis::IsoMinus},
      {Scalar(2), Scalar(1), HyperbolaType::Second, FocusAxis::IsoPlus},
      {Scalar(3), Scalar(1), HyperbolaType::Second, FocusAxis::IsoMinus},
  };
  for (const FocusParams& p : cases) {
    Conic c = p.axis == FocusAxis::XAxis || p.axis == FocusAxis::YAxis ? hyperbola_I(p)
                                                                       : hyperbola_II(p);
    auto [f1, f2] = foci_of(p);
    auto samples = sample_conic_points(c, 60);
    INFO("axis ", static_cast<int>(p.axis), " type ", static_cast<int>(p.type));
    REQUIRE(samples.size() >= 20);
    bool all_exact = true;
    for (const auto& s : samples) all_exact = all_exact && s.x.is_exact() && s.y.is_exact();
    CHECK(all_exact);
    CHECK(focus_identity_check(c, f1, f2, locus_constant_sq(p), samples));
  }
}

TEST_CASE("sampler output lies on the conic") {
  Conic c = conic("-16,0,0,3,1,-5");
  auto pts = sample_conic_points(c, 120);
  CHECK(pts.size() >= 100);
  for (const auto& p : pts) CHECK(evaluate(c, p) == Scalar(0));
}

TEST_CASE("random generators are deterministic and respect ranges") {
  Motion m1 = random_motion(42, -1.0, 1.0, -3.0, 3.0);
  Motion m2 = random_motion(42, -1.0, 1.0, -3.0, 3.0);
  CHECK(m1.ch() == m2.ch());
  CHECK(m1.tx() == m2.tx());
  CHECK(std::fabs(m1.phi()) <= 1.0 + 1e-12);

  Motion pure = random_motion(7, 0.0, 0.0, -2.0, 2.0);
  CHECK(pure.sh().value() == 0.0);  // phi range [0,0] gives pure translations

  Motion e1 = random_motion_exact(9, -1.0, 1.0, 3);
  Motion e2 = random_motion_exact(9, -1.0, 1.0, 3);
  CHECK(e1.ch() == e2.ch());
  CHECK(e1.ch().is_exact());
  CHECK(e1.ch() * e1.ch() - e1.sh() * e1.sh() == Scalar(1));

  Conic c1 = random_conic(5, 6);
  Conic c2 = random_conic(5, 6);
  CHECK(pectest::same_coeffs(c1, c2));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Conic c = random_conic(seed, 3);
    bool nonzero = c.a00().sign() != 0 || c.a01().sign() != 0 || c.a02().sign() != 0 ||
                   c.a11().sign() != 0 || c.a12().sign() != 0 || c.a22().sign() != 0;
    CHECK(nonzero);
  }
}
