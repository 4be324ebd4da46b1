#include <algorithm>

#include "pec/classify.hpp"

namespace pec {

const char* to_string(Family f) {
  switch (f) {
    case Family::Family1: return "1";
    case Family::Family2: return "2";
    case Family::Family3: return "3";
    case Family::Family4: return "4";
  }
  return "?";
}

const char* to_string(TypeTag t) {
  switch (t) {
    case TypeTag::First: return "first";
    case TypeTag::Second: return "second";
    case TypeTag::Special: return "special";
    case TypeTag::Untyped: return "untyped";
  }
  return "?";
}

namespace {

using F = Family;
using T = TypeTag;

// In the conditions column s = sgn(a11+a22); it is preserved by motions on
// families 1 and 2, and the pairing of each sign row with its negation makes
// every predicate stable under rescaling the equation.
const std::vector<ConicClass> kTaxonomy = {
    // family 1, proper (12)
    {"f1-imaginary-ellipse-first", F::Family1, true, T::First,
     "first type imaginary ellipse", false, "(i), I2>0, s*I3>0, s*I1<0"},
    {"f1-imaginary-ellipse-second", F::Family1, true, T::Second,
     "second type imaginary ellipse", false, "(i), I2>0, s*I3>0, s*I1>0"},
    {"f1-imaginary-ellipse-special", F::Family1, true, T::Special,
     "special imaginary ellipse", false, "(i), I2>0, s*I3>0, I1=0"},
    {"f1-real-ellipse-first", F::Family1, true, T::First, "first type real ellipse", false,
     "(i), I2>0, s*I3<0, s*I1<0"},
    {"f1-real-ellipse-second", F::Family1, true, T::Second, "second type real ellipse", false,
     "(i), I2>0, s*I3<0, s*I1>0"},
    {"f1-real-ellipse-special", F::Family1, true, T::Special, "special real ellipse", false,
     "(i), I2>0, s*I3<0, I1=0"},
    {"f1-hyperbola-I-first", F::Family1, true, T::First, "first type hyperbola I", false,
     "(i), I2<0, I1*I3>0, s*I1<0"},
    {"f1-hyperbola-I-second", F::Family1, true, T::Second, "second type hyperbola I", false,
     "(i), I2<0, I1*I3<0, s*I1>0"},
    {"f1-hyperbola-IV-first", F::Family1, true, T::First, "first type hyperbola IV", false,
     "(i), I2<0, I1*I3<0, s*I1<0"},
    {"f1-hyperbola-IV-second", F::Family1, true, T::Second, "second type hyperbola IV", false,
     "(i), I2<0, I1*I3>0, s*I1>0"},
    {"f1-parabola-first", F::Family1, true, T::First, "first type parabola", true,
     "(i), I2=0, I3!=0, s*I1<0"},
    {"f1-parabola-second", F::Family1, true, T::Second, "second type parabola", true,
     "(i), I2=0, I3!=0, s*I1>0"},
    // family 1, degenerate (11)
    {"f1-imaginary-pair-first", F::Family1, false, T::First,
     "first type pair of imaginary straight lines", false, "(i), I2>0, I3=0, s*I1<0"},
    {"f1-imaginary-pair-second", F::Family1, false, T::Second,
     "second type pair of imaginary straight lines", false, "(i), I2>0, I3=0, s*I1>0"},
    {"f1-imaginary-pair-special", F::Family1, false, T::Special,
     "special pair of imaginary straight lines", false, "(i), I2>0, I3=0, I1=0"},
    {"f1-intersecting-pair-first", F::Family1, false, T::First,
     "first type pair of intersecting straight lines", false, "(i), I2<0, I3=0, s*I1<0"},
    {"f1-intersecting-pair-second", F::Family1, false, T::Second,
     "second type pair of intersecting straight lines", false, "(i), I2<0, I3=0, s*I1>0"},
    {"f1-parallel-pair-real-first", F::Family1, false, T::First,
     "first type pair of real parallel lines", true, "(i), I2=0, I3=0, s*I1<0, s*I1*I4<0"},
    {"f1-parallel-pair-real-second", F::Family1, false, T::Second,
     "second type pair of real parallel lines", true, "(i), I2=0, I3=0, s*I1>0, s*I1*I4<0"},
    {"f1-parallel-pair-imaginary-first", F::Family1, false, T::First,
     "first type pair of imaginary parallel lines", true,
     "(i), I2=0, I3=0, s*I1<0, s*I1*I4>0"},
    {"f1-parallel-pair-imaginary-second", F::Family1, false, T::Second,
     "second type pair of imaginary parallel lines", true,
     "(i), I2=0, I3=0, s*I1>0, s*I1*I4>0"},
    {"f1-double-line-first", F::Family1, false, T::First, "first type double line", true,
     "(i), I2=0, I3=0, I4=0, s*I1<0"},
    {"f1-double-line-second", F::Family1, false, T::Second, "second type double line", true,
     "(i), I2=0, I3=0, I4=0, s*I1>0"},
    // family 2, proper (5)
    {"f2-hyperbola-II-first", F::Family2, true, T::First, "first type hyperbola II", false,
     "(ii), I1*I3>0, s*I1<0"},
    {"f2-hyperbola-II-second", F::Family2, true, T::Second, "second type hyperbola II", false,
     "(ii), I1*I3<0, s*I1>0"},
    {"f2-hyperbola-III-first", F::Family2, true, T::First, "first type hyperbola III", false,
     "(ii), I1*I3<0, s*I1<0"},
    {"f2-hyperbola-III-second", F::Family2, true, T::Second, "second type hyperbola III", false,
     "(ii), I1*I3>0, s*I1>0"},
    {"f2-parabola-double-isotropic", F::Family2, true, T::Untyped,
     "parabola with double isotropic direction", true, "(ii), I1=0, I3!=0"},
    // family 2, degenerate (5)
    {"f2-pair-isotropic-spacelike", F::Family2, false, T::Untyped,
     "pair of lines, one isotropic, one spacelike", false, "(ii), I1!=0, I3=0, s*I1<0"},
    {"f2-pair-isotropic-timelike", F::Family2, false, T::Untyped,
     "pair of lines, one isotropic, one timelike", false, "(ii), I1!=0, I3=0, s*I1>0"},
    {"f2-parallel-isotropic-pair-real", F::Family2, false, T::Untyped,
     "pair of real parallel isotropic lines", true, "(ii), I1=0, I3=0, a01^2-a11*a00>0"},
    {"f2-parallel-isotropic-pair-imaginary", F::Family2, false, T::Untyped,
     "pair of imaginary parallel isotropic lines", true, "(ii), I1=0, I3=0, a01^2-a11*a00<0"},
    {"f2-double-isotropic-line", F::Family2, false, T::Untyped, "double isotropic line", true,
     "(ii), I1=0, I3=0, a01^2-a11*a00=0"},
    // family 3 (2)
    {"f3-hyperbola-V", F::Family3, true, T::Untyped, "hyperbola V", false, "(iii), I3!=0"},
    {"f3-pair-spacelike-timelike", F::Family3, false, T::Untyped,
     "pair of lines, one spacelike and one timelike", false, "(iii), I3=0"},
    // family 4 (8)
    {"f4-hyperbolic-circle-first", F::Family4, true, T::First, "first type hyperbolic circle",
     false, "a11+a22=0, a12=0, I1*I3>0"},
    {"f4-hyperbolic-circle-second", F::Family4, true, T::Second,
     "second type hyperbolic circle", false, "a11+a22=0, a12=0, I1*I3<0"},
    {"f4-pair-isotropic-lines", F::Family4, false, T::Untyped, "pair of isotropic lines",
     false, "a11+a22=0, a12=0, I1!=0, I3=0"},
    {"f4-omega-plus-spacelike", F::Family4, false, T::Untyped, "\xcf\x89 + spacelike line",
     false, "sigma=0, I4>0"},
    {"f4-omega-plus-timelike", F::Family4, false, T::Untyped, "\xcf\x89 + timelike line",
     false, "sigma=0, I4<0"},
    {"f4-omega-plus-isotropic", F::Family4, false, T::Untyped, "\xcf\x89 + isotropic line",
     false, "sigma=0, I4=0, a01!=0"},
    {"f4-double-omega", F::Family4, false, T::Untyped, "double absolute line \xcf\x89", false,
     "sigma=0, I4=0, a01=0, I5!=0"},
    {"f4-zero-polynomial", F::Family4, false, T::Untyped, "zero polynomial", false,
     "sigma=0, I4=0, a01=0, I5=0"},
};

}  // namespace

const std::vector<ConicClass>& taxonomy() { return kTaxonomy; }

const ConicClass& taxonomy_entry(std::string_view id) {
  auto it = std::find_if(kTaxonomy.begin(), kTaxonomy.end(),
                         [&](const ConicClass& c) { return c.id == id; });
  if (it == kTaxonomy.end()) throw UnknownId("unknown taxonomy id: " + std::string(id));
  return *it;
}

}  // namespace pec
