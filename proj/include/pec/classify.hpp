#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pec/conic.hpp"
#include "pec/plane.hpp"
#include "pec/spectral.hpp"

namespace pec {

/// The four families of Definition 3, decided by the diagonalization case
/// of the quadratic form.
enum class Family { Family1 = 1, Family2 = 2, Family3 = 3, Family4 = 4 };

enum class TypeTag { First, Second, Special, Untyped };

const char* to_string(Family f);
const char* to_string(TypeTag t);

/// One row of the fixed 43-entry type table.
struct ConicClass {
  std::string_view id;
  Family family;
  bool proper;
  TypeTag type_tag;
  std::string_view display_name;
  /// True for the rows reconstructed from the family counts rather than
  /// named in an explicit table.
  bool reconstructed;
  /// Compact invariant conditions; s denotes sgn(a11+a22).
  std::string_view conditions;
};

/// The fixed table of all 43 types (20 proper + 23 degenerate).
const std::vector<ConicClass>& taxonomy();

/// Lookup by id; throws UnknownId.
const ConicClass& taxonomy_entry(std::string_view id);

struct SemiAxes {
  Scalar a, b;
};

struct Reduction {
  Conic canonical;
  std::optional<Motion> motion;
  std::vector<std::string> notes;
};

struct ClassificationReport {
  Conic input;
  Invariants invariants;
  Family family;
  ConicClass cls;
  Conic canonical;
  std::optional<Motion> motion;
  std::optional<SemiAxes> semiaxes;
  std::optional<PEPoint> center;
  std::vector<std::string> notes;
};

Family family_of(const Conic& c, double eps = kDefaultEpsilon);

/// Center point when I2 != 0 (solution of grad F = 0), otherwise nullopt.
std::optional<PEPoint> center(const Conic& c, double eps = kDefaultEpsilon);

/// Canonical representative plus, where a finite one exists, the reducing
/// motion with transform(c, motion) == canonical up to scale and epsilon.
Reduction reduce(const Conic& c, double eps = kDefaultEpsilon);

/// Pseudo-Euclidean semiaxes sqrt|a00/a11|, sqrt|a00/a22| of a reduced
/// diagonal conic. Throws NotApplicable unless the input is diagonal with
/// all three of a00, a11, a22 nonzero.
SemiAxes semiaxes(const Conic& canonical, double eps = kDefaultEpsilon);

/// Full decision procedure: family, type id among the 43, reduction,
/// semiaxes and center where defined.
ClassificationReport classify(const Conic& c, double eps = kDefaultEpsilon);

/// Type table entry only (cheap path for batch use).
const ConicClass& classify_class(const Conic& c, double eps = kDefaultEpsilon);

struct HyperbolaVParams {
  Scalar a, c;
};

/// Recover the canonical-form parameters of a family-3 hyperbola from its
/// invariants: a = (-I3/I2)^(1/4), c = sqrt(-I2)/(2a). Throws NotApplicable
/// for any other class. The canonical form itself lies in the I1 = 0 slice,
/// so reconstruction reproduces the input up to motion only there.
HyperbolaVParams hyperbola_v_params(const Conic& c, double eps = kDefaultEpsilon);

}  // namespace pec
