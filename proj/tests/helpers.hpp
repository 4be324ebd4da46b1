#pragma once

#include <cmath>
#include <string>

#include "pec/classify.hpp"
#include "pec/conic.hpp"
#include "pec/io.hpp"

namespace pectest {

/// Exact-rational conic from "a00,a01,a02,a11,a12,a22".
inline pec::Conic conic(const std::string& coeffs) {
  return pec::parse_conic_input(coeffs, /*exact_mode=*/true);
}

inline pec::Conic conic_f(const std::string& coeffs) {
  return pec::parse_conic_input(coeffs, /*exact_mode=*/false);
}

inline bool close(const pec::Scalar& a, double b, double tol = 1e-12) {
  return std::fabs(a.value() - b) <= tol * std::max(1.0, std::fabs(b));
}

inline bool close(double a, double b, double tol = 1e-12) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

inline bool same_coeffs(const pec::Conic& a, const pec::Conic& b) {
  return a.a00() == b.a00() && a.a01() == b.a01() && a.a02() == b.a02() &&
         a.a11() == b.a11() && a.a12() == b.a12() && a.a22() == b.a22();
}

inline bool same_invariants(const pec::Invariants& a, const pec::Invariants& b) {
  return a.I1 == b.I1 && a.I2 == b.I2 && a.I3 == b.I3 && a.I4 == b.I4 && a.I5 == b.I5;
}

/// Family reading of Definition 3 from the isotropic-point oracle; the
/// independent side of the family equivalence check.
inline pec::Family family_from_isotropic(const pec::Conic& c,
                                         double eps = pec::kDefaultEpsilon) {
  using R = pec::PointReality;
  using D = pec::DirectionKind;
  auto ips = pec::isotropic_points(c, eps);
  switch (ips.reality) {
    case R::AllOfOmega: return pec::Family::Family4;
    case R::TwoComplexConjugate: return pec::Family::Family1;
    case R::OneRealDouble:
      return ips.points.at(0).kind == D::IsotropicDirection ? pec::Family::Family2
                                                            : pec::Family::Family1;
    case R::TwoRealDistinct: {
      int iso = 0;
      for (const auto& p : ips.points) iso += p.kind == D::IsotropicDirection ? 1 : 0;
      if (iso == 2) return pec::Family::Family4;
      if (iso == 1) return pec::Family::Family2;
      return ips.points.at(0).kind == ips.points.at(1).kind ? pec::Family::Family1
                                                            : pec::Family::Family3;
    }
  }
  throw pec::InternalError("unreachable reality");
}

}  // namespace pectest
