#include "pec/io.hpp"

#include <json.hpp>

#include <array>
#include <cctype>

namespace pec {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Scalar parse_value(std::string_view text, bool exact_mode) {
  return exact_mode ? parse_exact(text) : parse_float(text);
}

Conic from_json(std::string_view src, bool exact_mode) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(src);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("bad JSON conic: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("JSON conic must be an object");
  std::array<const char*, 6> keys = {"a00", "a01", "a02", "a11", "a12", "a22"};
  std::array<Scalar, 6> vals;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!j.contains(keys[i])) throw ParseError(std::string("missing key ") + keys[i]);
    const auto& v = j.at(keys[i]);
    // strings may carry exact rationals; numbers go through their shortest
    // textual form so exact mode sees the decimal the user wrote
    std::string text = v.is_string() ? v.get<std::string>() : v.dump();
    vals[i] = parse_value(text, exact_mode);
  }
  return Conic(vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]);
}

}  // namespace

Conic parse_conic_input(std::string_view src, bool exact_mode) {
  std::string_view t = trim(src);
  if (t.empty()) throw ParseError("empty conic input");
  if (t.front() == '{') return from_json(t, exact_mode);
  std::vector<std::string> parts = csv_split(t);
  if (parts.size() != 6)
    throw ParseError("expected six comma-separated coefficients a00,a01,a02,a11,a12,a22");
  std::array<Scalar, 6> vals;
  for (std::size_t i = 0; i < 6; ++i) vals[i] = parse_value(parts[i], exact_mode);
  return Conic(vals[0], vals[1], vals[2], vals[3], vals[4], vals[5]);
}

std::string conic_to_coeff_string(const Conic& c) {
  return c.a00().str() + "," + c.a01().str() + "," + c.a02().str() + "," + c.a11().str() +
         "," + c.a12().str() + "," + c.a22().str();
}

namespace {

void append_term(std::string& out, const Scalar& coeff, const char* var) {
  int s = coeff.sign();
  if (s == 0) return;
  Scalar mag = abs(coeff);
  if (out.empty()) {
    if (s < 0) out += "-";
  } else {
    out += s < 0 ? " - " : " + ";
  }
  if (!(mag == Scalar(1)) || var[0] == '\0') {
    out += mag.str();
    if (var[0] != '\0') out += "*";
  }
  out += var;
}

}  // namespace

std::string conic_to_polynomial(const Conic& c) {
  std::string out;
  append_term(out, c.a11(), "x^2");
  append_term(out, Scalar(2) * c.a12(), "x*y");
  append_term(out, c.a22(), "y^2");
  append_term(out, Scalar(2) * c.a01(), "x");
  append_term(out, Scalar(2) * c.a02(), "y");
  append_term(out, c.a00(), "");
  if (out.empty()) out = "0";
  return out + " = 0";
}

std::vector<std::string> csv_split(std::string_view line) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    std::string_view field =
        comma == std::string_view::npos ? line.substr(start) : line.substr(start, comma - start);
    parts.emplace_back(trim(field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

}  // namespace pec
