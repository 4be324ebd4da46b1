#include "pec/spectral.hpp"

#include <cmath>

namespace pec {

namespace {

double mag(const Scalar& s) { return std::fabs(s.value()); }

}  // namespace

const char* to_string(DiagCaseKind k) {
  switch (k) {
    case DiagCaseKind::CaseI: return "case (i)";
    case DiagCaseKind::CaseII: return "case (ii)";
    case DiagCaseKind::CaseIII: return "case (iii)";
    case DiagCaseKind::Family4Axis: return "zero-trace axis";
  }
  return "?";
}

DiagCase diag_case(const SymMat2& sigma, double eps) {
  double s = std::max({mag(sigma.a11), mag(sigma.a12), mag(sigma.a22)});
  Scalar t = sigma.trace();
  int st = sign_eps(t, eps, std::max(mag(sigma.a11), mag(sigma.a22)));
  int s12 = sign_eps(sigma.a12, eps, s);
  if (st == 0 && s12 == 0) return {DiagCaseKind::Family4Axis, 0};
  Scalar d2 = t * t - Scalar(4) * sigma.a12 * sigma.a12;
  double s2 = std::max(t.value() * t.value(), 4.0 * sigma.a12.value() * sigma.a12.value());
  int sd = sign_eps(d2, eps, s2);
  if (sd > 0) return {DiagCaseKind::CaseI, 0};
  if (sd < 0) return {DiagCaseKind::CaseIII, 0};
  // quadratic test sits on the |t| = 2|a12| boundary; the linear signs
  // arbitrate so the float resolution cannot contradict itself
  if (s12 == 0) return {DiagCaseKind::CaseI, 0};   // a12 vanishes, t does not
  if (st == 0) return {DiagCaseKind::CaseIII, 0};  // t vanishes, a12 does not
  return {DiagCaseKind::CaseII, st == s12 ? -1 : +1};
}

PEValues pe_values(const SymMat2& sigma, double eps) {
  Scalar I1 = sigma.a11 - sigma.a22;
  Scalar I2 = sigma.det();
  Scalar disc = I1 * I1 + Scalar(4) * I2;  // = (a11+a22)^2 - 4 a12^2
  double s2 = std::max(I1.value() * I1.value(), 4.0 * std::fabs(I2.value()));
  int sd = sign_eps(disc, eps, s2);
  if (sd < 0) throw NoRealPEValues("pe_values: (a11-a22)^2 + 4 det(sigma) < 0");
  Scalar root = sd == 0 ? (disc.is_exact() ? Scalar(0) : Scalar(0.0)) : sqrt(disc);
  Scalar two(2);
  return {(I1 + root) / two, (-I1 + root) / two};
}

Scalar rotation_angle(const SymMat2& sigma, double eps) {
  double s = std::max({mag(sigma.a11), mag(sigma.a12), mag(sigma.a22)});
  if (sign_eps(sigma.a12, eps, s) == 0) {
    // already diagonal, including the zero-trace axis matrices
    return sigma.is_exact() ? Scalar(0) : Scalar(0.0);
  }
  DiagCase dc = diag_case(sigma, eps);
  if (dc.kind != DiagCaseKind::CaseI)
    throw NotDiagonalizable("rotation_angle: no finite rotation outside case (i)");
  Scalar u = Scalar(-2) * sigma.a12 / sigma.trace();
  // phi = (1/2) artanh(u) = (1/4) ln((1+u)/(1-u)); the log leaves the
  // rationals, so the angle itself is a float
  double uu = u.value();
  return Scalar(0.25 * std::log((1.0 + uu) / (1.0 - uu)));
}

Diagonalization diagonalize(const SymMat2& sigma, double eps) {
  double s = std::max({mag(sigma.a11), mag(sigma.a12), mag(sigma.a22)});
  Mat2 rot;
  if (sign_eps(sigma.a12, eps, s) == 0) {
    rot = rotation_matrix_from_pair(Scalar(1), Scalar(0));
  } else {
    DiagCase dc = diag_case(sigma, eps);
    if (dc.kind != DiagCaseKind::CaseI)
      throw NotDiagonalizable("diagonalize: possible only in case (i)");
    // cosh(2phi) = 1/sqrt(1-u^2), assembled through Scalar sqrt so the
    // result stays exact whenever the radicands are perfect squares
    Scalar u = Scalar(-2) * sigma.a12 / sigma.trace();
    Scalar ch2 = Scalar(1) / sqrt(Scalar(1) - u * u);
    Scalar two(2);
    Scalar ch = sqrt((ch2 + Scalar(1)) / two);
    Scalar sh = sqrt((ch2 - Scalar(1)) / two);
    if (u.sign() < 0) sh = -sh;
    rot = rotation_matrix_from_pair(ch, sh);
  }
  Mat2 sig{sigma.a11, sigma.a12, sigma.a12, sigma.a22};
  Mat2 diag = mat_mul(mat_mul(rot, sig), rot);
  return {rot, diag};
}

}  // namespace pec
