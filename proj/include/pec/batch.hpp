#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pec/classify.hpp"
#include "pec/conic.hpp"

namespace pec {

/// One parsed batch row: a conic, or the parse failure that replaced it.
struct BatchItem {
  std::optional<Conic> conic;
  std::string error;  // nonempty when conic is absent
};

/// Classification result for one row, pre-formatted for CSV assembly.
struct BatchResult {
  std::string class_id;
  std::string family;
  std::string i1, i2, i3, i4, i5;
  std::string error;  // "invalid-conic", "parse-error", ... or empty
};

/// Serial reference kernel: classify each row in input order.
std::vector<BatchResult> classify_batch_serial(const std::vector<BatchItem>& items,
                                               double eps = kDefaultEpsilon);

/// OpenMP kernel. Rows are independent pure classifications, scattered to
/// threads by index and written into a preallocated output so the result
/// order matches the input regardless of scheduling. Falls back to the
/// serial loop when built without OpenMP.
std::vector<BatchResult> classify_batch_parallel(const std::vector<BatchItem>& items,
                                                 double eps = kDefaultEpsilon);

/// Parse CSV text (optional a00..a22 header) into batch items.
std::vector<BatchItem> parse_batch_csv(const std::string& text, bool exact_mode);

/// Render results next to their input rows; columns per the CSV contract:
/// a00..a22,class_id,family,I1,I2,I3,I4,I5,error.
std::string render_batch_csv(const std::vector<BatchItem>& items,
                             const std::vector<BatchResult>& results);

}  // namespace pec
