#include "pec/batch.hpp"

#include <sstream>

#include "pec/io.hpp"

namespace pec {

namespace {

BatchResult classify_one(const BatchItem& item, double eps) {
  BatchResult r;
  if (!item.conic) {
    r.error = item.error;
    return r;
  }
  try {
    const Conic& c = *item.conic;
    const ConicClass& cls = classify_class(c, eps);
    Invariants inv = invariants(c);
    r.class_id = std::string(cls.id);
    r.family = to_string(cls.family);
    r.i1 = inv.I1.str();
    r.i2 = inv.I2.str();
    r.i3 = inv.I3.str();
    r.i4 = inv.I4.str();
    r.i5 = inv.I5.str();
  } catch (const InvalidConic&) {
    r = BatchResult{};
    r.error = "invalid-conic";
  } catch (const Error&) {
    r = BatchResult{};
    r.error = "classify-error";
  }
  return r;
}

}  // namespace

std::vector<BatchResult> classify_batch_serial(const std::vector<BatchItem>& items,
                                               double eps) {
  std::vector<BatchResult> out(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) out[i] = classify_one(items[i], eps);
  return out;
}

std::vector<BatchResult> classify_batch_parallel(const std::vector<BatchItem>& items,
                                                 double eps) {
  std::vector<BatchResult> out(items.size());
  const long n = static_cast<long>(items.size());
#pragma omp parallel for schedule(dynamic, 64)
  for (long i = 0; i < n; ++i) out[i] = classify_one(items[i], eps);
  return out;
}

std::vector<BatchItem> parse_batch_csv(const std::string& text, bool exact_mode) {
  std::vector<BatchItem> items;
  std::istringstream in(text);
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view sv(line);
    while (!sv.empty() && (sv.front() == ' ' || sv.front() == '\t')) sv.remove_prefix(1);
    if (sv.empty()) continue;
    if (first) {
      first = false;
      if (sv.rfind("a00", 0) == 0) continue;  // header row
    }
    BatchItem item;
    try {
      item.conic = parse_conic_input(sv, exact_mode);
    } catch (const InvalidConic&) {
      item.error = "invalid-conic";
    } catch (const ParseError&) {
      item.error = "parse-error";
    }
    items.push_back(std::move(item));
  }
  return items;
}

std::string render_batch_csv(const std::vector<BatchItem>& items,
                             const std::vector<BatchResult>& results) {
  std::string out = "a00,a01,a02,a11,a12,a22,class_id,family,I1,I2,I3,I4,I5,error\n";
  for (std::size_t i = 0; i < items.size(); ++i) {
    const BatchResult& r = results[i];
    if (items[i].conic) {
      out += conic_to_coeff_string(*items[i].conic);
    } else {
      out += ",,,,,";
    }
    out += "," + r.class_id + "," + r.family + "," + r.i1 + "," + r.i2 + "," + r.i3 + "," +
           r.i4 + "," + r.i5 + "," + r.error + "\n";
  }
  return out;
}

}  // namespace pec
