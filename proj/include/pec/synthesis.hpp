#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pec/classify.hpp"
#include "pec/conic.hpp"

namespace pec {

enum class HyperbolaType { First, Second };

/// Focus placement: on a coordinate axis (hyperbola I) or on one of the
/// isotropic lines through the origin (hyperbola II).
enum class FocusAxis { XAxis, YAxis, IsoPlus, IsoMinus };

/// Parameters of the focal locus definitions: |F1 M| - |F2 M| = 2a (first
/// type, spacelike focal rays) or 2ai (second type, timelike focal rays),
/// with foci at distance parameter c from the origin.
struct FocusParams {
  Scalar a;
  Scalar c;
  HyperbolaType type = HyperbolaType::First;
  FocusAxis axis = FocusAxis::XAxis;
};

/// Conic of the focal definition with foci on a coordinate axis.
/// First type with a > c: x^2/a^2 - y^2/b^2 = 1, b^2 = a^2 - c^2.
/// Second type: -x^2/a^2 + y^2/b^2 = 1, b^2 = a^2 + c^2.
/// Throws BadParams outside the validity domain.
Conic hyperbola_I(const FocusParams& p);

/// Conic of the focal definition with foci on an isotropic line, a > c:
/// x^2(a^2-c^2) + 2xyc^2 - y^2(a^2+c^2) - a^4 = 0 and sign variants.
Conic hyperbola_II(const FocusParams& p);

/// The two focus points of a FocusParams placement.
std::pair<PEPoint, PEPoint> foci_of(const FocusParams& p);

/// Signed square of the locus constant: (2a)^2 for the first type, -(2a)^2
/// for the second, where the distance difference is the imaginary 2ai.
Scalar locus_constant_sq(const FocusParams& p);

/// Named parameters for canonical representatives. Missing fields take
/// per-id defaults that satisfy the side conditions.
struct CanonicalParams {
  std::optional<Scalar> a, b, c, p, k;
};

/// A representative conic for a taxonomy id, per the canonical-form tables.
/// Throws UnknownId for a bad id (including the non-constructible zero
/// polynomial) and BadParams when a side condition (a > b, a > c, ...) is
/// violated.
Conic canonical_conic(std::string_view id, const CanonicalParams& params = {});

/// Branch-free focal identity (d1^2 + d2^2 - K^2)^2 = 4 d1^2 d2^2 with
/// K^2 = const_sq and d_i^2 the signed squared distances to the foci,
/// checked at every sample. Exact samples are checked exactly. Throws
/// SampleOffConic if a sample does not lie on the conic.
bool focus_identity_check(const Conic& c, const PEPoint& f1, const PEPoint& f2,
                          const Scalar& const_sq, const std::vector<PEPoint>& samples,
                          double eps = kDefaultEpsilon);

/// Points on the conic. Exact conics are sampled through rational chords
/// swept around a rational seed point, so every sample satisfies F = 0
/// exactly; when no rational seed exists (or the conic is float) sampling
/// falls back to grid root-solving in doubles. May return fewer points
/// than requested (empty for an empty real locus).
std::vector<PEPoint> sample_conic_points(const Conic& c, std::size_t count,
                                         double eps = kDefaultEpsilon);

/// Deterministic seeded generators for the fuzz suites.
Motion random_motion(std::uint64_t seed, double phi_min, double phi_max, double t_min,
                     double t_max);
/// Exact variant: the rotation is a rational boost pair (phi = ln q with q
/// drawn as a small rational inside [exp(phi_min), exp(phi_max)]).
Motion random_motion_exact(std::uint64_t seed, double phi_min, double phi_max, long t_range);
Conic random_conic(std::uint64_t seed, long coeff_range);
Conic random_conic_float(std::uint64_t seed, double coeff_range);

}  // namespace pec
