#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pec/conic.hpp"

namespace pec {

/// Parse "a00,a01,a02,a11,a12,a22" (rationals or decimals) or a JSON object
/// with those keys into a Conic. In exact mode decimals become scaled
/// integers, so "0.25" is the rational 1/4. Throws ParseError / InvalidConic.
Conic parse_conic_input(std::string_view src, bool exact_mode);

/// "a00,a01,a02,a11,a12,a22" with Scalar formatting.
std::string conic_to_coeff_string(const Conic& c);

/// Human-readable polynomial, e.g. "1/4*x^2 - y^2 - 1 = 0".
std::string conic_to_polynomial(const Conic& c);

/// Split one CSV line on commas (fields here never contain quotes).
std::vector<std::string> csv_split(std::string_view line);

}  // namespace pec
