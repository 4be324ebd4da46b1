#include "pec/report_json.hpp"

namespace pec {

nlohmann::json report_to_json(const ClassificationReport& report) {
  nlohmann::json j;
  j["class_id"] = std::string(report.cls.id);
  j["class_name"] = std::string(report.cls.display_name);
  j["family"] = static_cast<int>(report.family);
  j["proper"] = report.cls.proper;
  j["type_tag"] = std::string(to_string(report.cls.type_tag));
  j["reconstructed"] = report.cls.reconstructed;
  j["invariants"] = {{"I1", report.invariants.I1.value()},
                     {"I2", report.invariants.I2.value()},
                     {"I3", report.invariants.I3.value()},
                     {"I4", report.invariants.I4.value()},
                     {"I5", report.invariants.I5.value()}};
  if (report.semiaxes) {
    j["semiaxes"] = {{"a", report.semiaxes->a.value()}, {"b", report.semiaxes->b.value()}};
  } else {
    j["semiaxes"] = nullptr;
  }
  if (report.center) {
    j["center"] = {{"x", report.center->x.value()}, {"y", report.center->y.value()}};
  } else {
    j["center"] = nullptr;
  }
  if (report.motion) {
    j["motion"] = {{"phi", report.motion->phi()},
                   {"tx", report.motion->tx().value()},
                   {"ty", report.motion->ty().value()}};
  } else {
    j["motion"] = nullptr;
  }
  j["canonical"] = {report.canonical.a00().value(), report.canonical.a01().value(),
                    report.canonical.a02().value(), report.canonical.a11().value(),
                    report.canonical.a12().value(), report.canonical.a22().value()};
  j["notes"] = report.notes;
  return j;
}

}  // namespace pec
