#pragma once

#include "pec/conic.hpp"
#include "pec/plane.hpp"
#include "pec/scalar.hpp"

namespace pec {

/// Pseudo-Euclidean values of a symmetric 2x2 matrix: the pair with
/// lambda1 - lambda2 = a11 - a22 and lambda1 * lambda2 = det.
struct PEValues {
  Scalar lambda1, lambda2;
};

enum class DiagCaseKind {
  CaseI,        // |a11+a22| > 2|a12|: a finite diagonalizing rotation exists
  CaseII,       // |a11+a22| = 2|a12| != 0: rotation angle escapes to infinity
  CaseIII,      // |a11+a22| < 2|a12|: no real rotation
  Family4Axis,  // a11 + a22 = 0 and a12 = 0 (sigma = 0 included)
};

const char* to_string(DiagCaseKind k);

struct DiagCase {
  DiagCaseKind kind;
  /// For CaseII: +1 when a11+a22 = -2 a12, -1 when a11+a22 = 2 a12.
  int side = 0;
};

/// The four cases partition all symmetric 2x2 matrices: a zero trace with
/// a12 != 0 satisfies the strict case (iii) inequality and lands there,
/// Family4Axis is reserved for trace = 0 with a12 = 0.
DiagCase diag_case(const SymMat2& sigma, double eps = kDefaultEpsilon);

/// Throws NoRealPEValues when (a11-a22)^2 + 4 det < 0 (case (iii)).
/// Convention: the square root is taken >= 0, which fixes which value is
/// lambda1; classification never depends on this choice.
PEValues pe_values(const SymMat2& sigma, double eps = kDefaultEpsilon);

/// Angle phi with tanh(2 phi) = -2 a12 / (a11 + a22). Exact zero for
/// already-diagonal matrices (any trace); float otherwise (the angle is
/// only needed to emit motions, never for classification predicates).
/// Throws NotDiagonalizable for CaseII / CaseIII.
Scalar rotation_angle(const SymMat2& sigma, double eps = kDefaultEpsilon);

struct Diagonalization {
  Mat2 rotation;  // symmetric pseudo-orthogonal R
  Mat2 diagonal;  // R * sigma * R
};

/// Pseudo-Euclidean diagonalization R * sigma * R = diag(lambda1, lambda2).
/// Already-diagonal matrices pass through with R = identity; otherwise a
/// finite rotation exists exactly in CaseI, and CaseII / CaseIII throw
/// NotDiagonalizable.
Diagonalization diagonalize(const SymMat2& sigma, double eps = kDefaultEpsilon);

}  // namespace pec
