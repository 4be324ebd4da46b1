// pe-conics: classify, reduce, synthesize and plot conics of the
// pseudo-Euclidean plane from the command line.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "pec/batch.hpp"
#include "pec/classify.hpp"
#include "pec/io.hpp"
#include "pec/report_json.hpp"
#include "pec/svg_plot.hpp"
#include "pec/synthesis.hpp"

namespace {

struct Options {
  bool exact = true;
  double eps = pec::kDefaultEpsilon;
  std::string format = "text";
  std::string window = "-5,5,-5,5";
  std::string out;
  std::uint64_t seed = 0;
};

std::string read_stream(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return read_stream(std::cin);
  std::ifstream f(path);
  if (!f) throw pec::ParseError("cannot open input file: " + path);
  return read_stream(f);
}

void write_output(const Options& opt, const std::string& data) {
  if (opt.out.empty() || opt.out == "-") {
    std::cout << data;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw pec::Error("cannot open output file: " + opt.out);
  f << data;
}

pec::PlotWindow parse_window(const std::string& text) {
  auto parts = pec::csv_split(text);
  if (parts.size() != 4) throw pec::ParseError("window must be x0,x1,y0,y1");
  pec::PlotWindow w;
  w.x0 = pec::parse_float(parts[0]).value();
  w.x1 = pec::parse_float(parts[1]).value();
  w.y0 = pec::parse_float(parts[2]).value();
  w.y1 = pec::parse_float(parts[3]).value();
  if (!w.valid()) throw pec::ParseError("window must be nonempty");
  return w;
}

std::string motion_to_string(const pec::Motion& m) {
  std::ostringstream ss;
  ss << "phi = " << pec::Scalar(m.phi()).str() << ", cosh = " << m.ch().str()
     << ", sinh = " << m.sh().str() << ", t = (" << m.tx().str() << ", " << m.ty().str()
     << ")";
  return ss.str();
}

std::string report_to_text(const pec::ClassificationReport& r) {
  std::ostringstream ss;
  ss << "equation:   " << pec::conic_to_polynomial(r.input) << "\n";
  ss << "family:     " << pec::to_string(r.family) << "\n";
  ss << "class:      " << r.cls.display_name << " (" << r.cls.id << ", "
     << (r.cls.proper ? "proper" : "degenerate") << ")\n";
  ss << "invariants: I1 = " << r.invariants.I1.str() << ", I2 = " << r.invariants.I2.str()
     << ", I3 = " << r.invariants.I3.str() << ", I4 = " << r.invariants.I4.str()
     << ", I5 = " << r.invariants.I5.str() << "\n";
  if (r.center)
    ss << "center:     (" << r.center->x.str() << ", " << r.center->y.str() << ")\n";
  if (r.semiaxes)
    ss << "semiaxes:   a = " << r.semiaxes->a.str() << ", b = " << r.semiaxes->b.str() << "\n";
  ss << "canonical:  " << pec::conic_to_polynomial(r.canonical) << "  [coeffs "
     << pec::conic_to_coeff_string(r.canonical) << "]\n";
  if (r.motion) ss << "motion:     " << motion_to_string(*r.motion) << "\n";
  for (const auto& n : r.notes) ss << "note:       " << n << "\n";
  return ss.str();
}

int run_classify(const Options& opt, const std::string& coeffs) {
  pec::Conic c = pec::parse_conic_input(coeffs, opt.exact);
  pec::ClassificationReport rep = pec::classify(c, opt.eps);
  if (opt.format == "json") {
    write_output(opt, pec::report_to_json(rep).dump(2) + "\n");
  } else if (opt.format == "csv") {
    std::vector<pec::BatchItem> items{{c, ""}};
    auto results = pec::classify_batch_serial(items, opt.eps);
    write_output(opt, pec::render_batch_csv(items, results));
  } else {
    write_output(opt, report_to_text(rep));
  }
  return 0;
}

int run_reduce(const Options& opt, const std::string& coeffs) {
  pec::Conic c = pec::parse_conic_input(coeffs, opt.exact);
  pec::Reduction red = pec::reduce(c, opt.eps);
  if (opt.format == "json") {
    nlohmann::json j;
    j["canonical"] = {red.canonical.a00().value(), red.canonical.a01().value(),
                      red.canonical.a02().value(), red.canonical.a11().value(),
                      red.canonical.a12().value(), red.canonical.a22().value()};
    if (red.motion) {
      j["motion"] = {{"phi", red.motion->phi()},
                     {"tx", red.motion->tx().value()},
                     {"ty", red.motion->ty().value()}};
    } else {
      j["motion"] = nullptr;
    }
    j["notes"] = red.notes;
    write_output(opt, j.dump(2) + "\n");
  } else {
    std::ostringstream ss;
    ss << "canonical:  " << pec::conic_to_polynomial(red.canonical) << "  [coeffs "
       << pec::conic_to_coeff_string(red.canonical) << "]\n";
    if (red.motion) ss << "motion:     " << motion_to_string(*red.motion) << "\n";
    for (const auto& n : red.notes) ss << "note:       " << n << "\n";
    write_output(opt, ss.str());
  }
  return 0;
}

int run_taxonomy(const Options& opt) {
  const auto& table = pec::taxonomy();
  if (opt.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& t : table) {
      rows.push_back({{"id", std::string(t.id)},
                      {"family", static_cast<int>(t.family)},
                      {"proper", t.proper},
                      {"type_tag", pec::to_string(t.type_tag)},
                      {"name", std::string(t.display_name)},
                      {"reconstructed", t.reconstructed},
                      {"conditions", std::string(t.conditions)}});
    }
    write_output(opt, rows.dump(2) + "\n");
    return 0;
  }
  std::ostringstream ss;
  if (opt.format == "csv") {
    ss << "id,family,proper,type,reconstructed,name,conditions\n";
    for (const auto& t : table) {
      ss << t.id << "," << pec::to_string(t.family) << "," << (t.proper ? "1" : "0") << ","
         << pec::to_string(t.type_tag) << "," << (t.reconstructed ? "1" : "0") << ",\""
         << t.display_name << "\",\"" << t.conditions << "\"\n";
    }
  } else {
    int proper = 0;
    for (const auto& t : table) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-38s f%s %-10s %-8s %s", std::string(t.id).c_str(),
                    pec::to_string(t.family), t.proper ? "proper" : "degenerate",
                    pec::to_string(t.type_tag), t.reconstructed ? "[reconstructed]" : "");
      ss << buf << "\n    " << t.display_name << "    {" << t.conditions << "}\n";
      proper += t.proper ? 1 : 0;
    }
    ss << table.size() << " types: " << proper << " proper + " << (table.size() - proper)
       << " degenerate\n";
  }
  write_output(opt, ss.str());
  return 0;
}

int run_batch(const Options& opt, const std::string& in_path) {
  std::string text = read_input(in_path);
  auto items = pec::parse_batch_csv(text, opt.exact);
  auto results = pec::classify_batch_parallel(items, opt.eps);
  write_output(opt, pec::render_batch_csv(items, results));
  for (const auto& r : results)
    if (r.error.empty()) return 0;
  return 2;  // no row succeeded
}

int run_plot(const Options& opt, const std::string& coeffs) {
  if (opt.out.empty()) throw pec::ParseError("plot requires --out <path.svg>");
  pec::Conic c = pec::parse_conic_input(coeffs, opt.exact);
  pec::PlotWindow w = parse_window(opt.window);
  write_output(opt, pec::render_conic_svg(c, w, 512, opt.eps));
  return 0;
}

int run_synthesize(const Options& opt, const std::string& id,
                   const std::optional<std::string>& a, const std::optional<std::string>& b,
                   const std::optional<std::string>& c, const std::optional<std::string>& p,
                   const std::optional<std::string>& k) {
  pec::CanonicalParams params;
  auto set = [&](const std::optional<std::string>& text, std::optional<pec::Scalar>& slot) {
    if (text) slot = opt.exact ? pec::parse_exact(*text) : pec::parse_float(*text);
  };
  set(a, params.a);
  set(b, params.b);
  set(c, params.c);
  set(p, params.p);
  set(k, params.k);
  pec::Conic conic = pec::canonical_conic(id, params);
  if (opt.format == "json") {
    nlohmann::json j;
    j["id"] = id;
    j["coeffs"] = {conic.a00().value(), conic.a01().value(), conic.a02().value(),
                   conic.a11().value(), conic.a12().value(), conic.a22().value()};
    j["polynomial"] = pec::conic_to_polynomial(conic);
    write_output(opt, j.dump(2) + "\n");
  } else if (opt.format == "csv") {
    write_output(opt, pec::conic_to_coeff_string(conic) + "\n");
  } else {
    std::ostringstream ss;
    ss << "id:       " << id << "\n";
    ss << "coeffs:   " << pec::conic_to_coeff_string(conic) << "\n";
    ss << "equation: " << pec::conic_to_polynomial(conic) << "\n";
    write_output(opt, ss.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"conic sections in the pseudo-Euclidean (Minkowski) plane"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global flags after the subcommand too

  Options opt;
  app.add_flag("--exact,!--float", opt.exact,
               "exact rational arithmetic (default) vs. double precision");
  app.add_option("--eps", opt.eps, "float-mode sign tolerance")->check(CLI::PositiveNumber);
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--window", opt.window, "plot window x0,x1,y0,y1");
  app.add_option("--out", opt.out, "output path (default stdout)");
  app.add_option("--seed", opt.seed, "seed for randomized helpers");

  std::string coeffs, batch_in = "-", synth_id;
  std::optional<std::string> pa, pb, pc, pp, pk;

  auto add_coeffs = [&](CLI::App* sub) {
    auto* positional = sub->add_option("COEFFS", coeffs, "a00,a01,a02,a11,a12,a22 or JSON");
    sub->add_option("--coeffs", coeffs, "same as the positional argument")
        ->excludes(positional);
  };
  auto* cls = app.add_subcommand("classify", "classify a conic");
  add_coeffs(cls);
  auto* red = app.add_subcommand("reduce", "canonical form and reducing motion");
  add_coeffs(red);
  auto* tax = app.add_subcommand("taxonomy", "list the 43 types");
  auto* bat = app.add_subcommand("batch", "classify a CSV of conics");
  bat->add_option("input", batch_in, "input CSV path or - for stdin");
  auto* plt = app.add_subcommand("plot", "render the curve as SVG");
  add_coeffs(plt);
  auto* syn = app.add_subcommand("synthesize", "canonical representative for a taxonomy id");
  syn->add_option("id", synth_id, "taxonomy id")->required();
  syn->add_option("--a", pa, "parameter a");
  syn->add_option("--b", pb, "parameter b");
  syn->add_option("--c", pc, "parameter c");
  syn->add_option("--p", pp, "parameter p");
  syn->add_option("--k", pk, "parameter k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if ((cls->parsed() || red->parsed() || plt->parsed()) && coeffs.empty())
      throw pec::ParseError("missing coefficients (positional argument or --coeffs)");
    if (cls->parsed()) return run_classify(opt, coeffs);
    if (red->parsed()) return run_reduce(opt, coeffs);
    if (tax->parsed()) return run_taxonomy(opt);
    if (bat->parsed()) return run_batch(opt, batch_in);
    if (plt->parsed()) return run_plot(opt, coeffs);
    if (syn->parsed()) return run_synthesize(opt, synth_id, pa, pb, pc, pp, pk);
  } catch (const pec::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const pec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
