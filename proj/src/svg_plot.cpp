#include "pec/svg_plot.hpp"

#include <cmath>
#include <cstdio>
#include <vector>

#include "pec/classify.hpp"

namespace pec {

namespace {

constexpr int kCanvas = 640;

struct Mapper {
  PlotWindow w;
  double px(double x) const { return (x - w.x0) / (w.x1 - w.x0) * kCanvas; }
  double py(double y) const { return kCanvas - (y - w.y0) / (w.y1 - w.y0) * kCanvas; }
};

struct Seg {
  double ax, ay, bx, by;  // world coordinates
};

void fmt(std::string& out, const char* format, double a, double b) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, a, b);
  out += buf;
}

std::string path_from_segments(const std::vector<Seg>& segs, const Mapper& m) {
  std::string d;
  for (const Seg& s : segs) {
    fmt(d, "M%.2f %.2f", m.px(s.ax), m.py(s.ay));
    fmt(d, "L%.2f %.2f", m.px(s.bx), m.py(s.by));
  }
  return d;
}

double eval_d(const Conic& c, double x, double y) {
  return c.a11().value() * x * x + 2.0 * c.a12().value() * x * y +
         c.a22().value() * y * y + 2.0 * c.a01().value() * x + 2.0 * c.a02().value() * y +
         c.a00().value();
}

std::vector<Seg> marching_squares(const Conic& c, const PlotWindow& w, int grid) {
  std::vector<double> f(static_cast<std::size_t>(grid + 1) * (grid + 1));
  double dx = (w.x1 - w.x0) / grid, dy = (w.y1 - w.y0) / grid;
  for (int j = 0; j <= grid; ++j)
    for (int i = 0; i <= grid; ++i)
      f[static_cast<std::size_t>(j) * (grid + 1) + i] =
          eval_d(c, w.x0 + i * dx, w.y0 + j * dy);

  auto at = [&](int i, int j) { return f[static_cast<std::size_t>(j) * (grid + 1) + i]; };
  auto pos = [](double v) { return v > 0.0; };

  std::vector<Seg> segs;
  struct Pt {
    double x, y;
  };
  for (int j = 0; j < grid; ++j) {
    for (int i = 0; i < grid; ++i) {
      double v00 = at(i, j), v10 = at(i + 1, j), v01 = at(i, j + 1), v11 = at(i + 1, j + 1);
      bool s00 = pos(v00), s10 = pos(v10), s01 = pos(v01), s11 = pos(v11);
      if (s00 == s10 && s10 == s01 && s01 == s11) continue;
      double x0 = w.x0 + i * dx, y0 = w.y0 + j * dy;
      Pt pts[4];
      int n = 0;
      auto cross = [&](double va, double vb, double ax, double ay, double bx, double by) {
        double t = va / (va - vb);
        pts[n++] = {ax + t * (bx - ax), ay + t * (by - ay)};
      };
      if (s00 != s10) cross(v00, v10, x0, y0, x0 + dx, y0);                    // bottom
      if (s10 != s11) cross(v10, v11, x0 + dx, y0, x0 + dx, y0 + dy);          // right
      if (s01 != s11) cross(v01, v11, x0, y0 + dy, x0 + dx, y0 + dy);          // top
      if (s00 != s01) cross(v00, v01, x0, y0, x0, y0 + dy);                    // left
      if (n == 2) {
        segs.push_back({pts[0].x, pts[0].y, pts[1].x, pts[1].y});
      } else if (n == 4) {
        // saddle cell: pair crossings by the sign at the cell center
        double vc = eval_d(c, x0 + 0.5 * dx, y0 + 0.5 * dy);
        if (pos(vc) == s00) {
          segs.push_back({pts[0].x, pts[0].y, pts[1].x, pts[1].y});
          segs.push_back({pts[2].x, pts[2].y, pts[3].x, pts[3].y});
        } else {
          segs.push_back({pts[0].x, pts[0].y, pts[3].x, pts[3].y});
          segs.push_back({pts[1].x, pts[1].y, pts[2].x, pts[2].y});
        }
      }
    }
  }
  return segs;
}

// Double lines never change the sign of F; draw them from the reduction.
std::vector<Seg> analytic_double_lines(const ClassificationReport& rep, const PlotWindow& w) {
  std::vector<Seg> segs;
  std::string_view id = rep.cls.id;
  double span = 2.0 * (std::fabs(w.x1 - w.x0) + std::fabs(w.y1 - w.y0));
  auto map_segment = [&](double ax, double ay, double bx, double by) {
    PEPoint a{Scalar(ax), Scalar(ay)}, b{Scalar(bx), Scalar(by)};
    if (rep.motion) {
      a = rep.motion->apply(a);
      b = rep.motion->apply(b);
    }
    segs.push_back({a.x.value(), a.y.value(), b.x.value(), b.y.value()});
  };
  if (id == "f1-double-line-first") {
    map_segment(-span, 0.0, span, 0.0);  // canonical y = 0
  } else if (id == "f1-double-line-second") {
    map_segment(0.0, -span, 0.0, span);  // canonical x = 0
  } else if (id == "f2-double-isotropic-line") {
    double e = rep.canonical.a12().value() * rep.canonical.a11().value() >= 0.0 ? 1.0 : -1.0;
    map_segment(-span, e * span, span, -e * span);  // canonical x + e y = 0
  }
  return segs;
}

void add_line(std::string& out, const Mapper& m, double ax, double ay, double bx, double by,
              const char* cls) {
  char buf[192];
  std::snprintf(buf, sizeof buf,
                "  <line class=\"%s\" x1=\"%.2f\" y1=\"%.2f\" x2=\"%.2f\" y2=\"%.2f\"/>\n",
                cls, m.px(ax), m.py(ay), m.px(bx), m.py(by));
  out += buf;
}

}  // namespace

std::string render_conic_svg(const Conic& c, const PlotWindow& window, int grid, double eps) {
  if (!window.valid()) throw DomainError("plot: empty window");
  Mapper m{window};
  ClassificationReport rep = classify(c, eps);
  std::string_view id = rep.cls.id;

  bool double_line = id == "f1-double-line-first" || id == "f1-double-line-second" ||
                     id == "f2-double-isotropic-line";
  bool point_locus = id == "f1-imaginary-pair-first" || id == "f1-imaginary-pair-second" ||
                     id == "f1-imaginary-pair-special";
  std::vector<Seg> segs;
  if (double_line) {
    segs = analytic_double_lines(rep, window);
  } else if (!point_locus) {
    segs = marching_squares(c, window, grid);
  }

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" "
         "viewBox=\"0 0 640 640\">\n";
  out += "  <style>.axis{stroke:#999;stroke-width:1;} "
         ".iso{stroke:#c0504d;stroke-width:1;stroke-dasharray:6 4;} "
         ".curve{stroke:#1f6fb4;stroke-width:1.5;fill:none;}</style>\n";
  out += "  <rect width=\"640\" height=\"640\" fill=\"white\"/>\n";

  if (window.x0 < 0.0 && window.x1 > 0.0) add_line(out, m, 0.0, window.y0, 0.0, window.y1, "axis");
  if (window.y0 < 0.0 && window.y1 > 0.0) add_line(out, m, window.x0, 0.0, window.x1, 0.0, "axis");
  // isotropic directions y = x and y = -x
  double lo = std::min(window.x0, window.y0), hi = std::max(window.x1, window.y1);
  add_line(out, m, lo, lo, hi, hi, "iso");
  add_line(out, m, lo, -lo, hi, -hi, "iso");

  if (!segs.empty()) {
    out += "  <path class=\"curve\" d=\"" + path_from_segments(segs, m) + "\"/>\n";
  } else if (point_locus && rep.center) {
    // single real point
    char buf[128];
    std::snprintf(buf, sizeof buf, "  <circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"#1f6fb4\"/>\n",
                  m.px(rep.center->x.value()), m.py(rep.center->y.value()));
    out += buf;
  } else {
    out += "  <text x=\"24\" y=\"36\" font-family=\"monospace\" font-size=\"16\" "
           "fill=\"#444\">no real points</text>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace pec
