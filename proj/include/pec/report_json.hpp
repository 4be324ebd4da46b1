#pragma once

#include <json.hpp>

#include "pec/classify.hpp"

namespace pec {

/// JSON form of a classification report. Stable keys:
///   class_id, class_name, family, proper, type_tag, reconstructed,
///   invariants:{I1..I5}, semiaxes:{a,b}|null, center:{x,y}|null,
///   motion:{phi,tx,ty}|null, canonical:[a00,a01,a02,a11,a12,a22], notes:[..]
/// Numeric payloads are emitted as doubles; exact values appear in the text
/// renderer instead.
nlohmann::json report_to_json(const ClassificationReport& report);

}  // namespace pec
