#pragma once

#include <string>

#include "pec/conic.hpp"

namespace pec {

struct PlotWindow {
  double x0 = -5.0, x1 = 5.0, y0 = -5.0, y1 = 5.0;

  bool valid() const { return x1 > x0 && y1 > y0; }
};

/// Render the curve F = 0 into an SVG document: marching squares over a
/// sign grid, the coordinate axes, and the isotropic directions y = +-x
/// dashed. Double lines (no sign change anywhere) are drawn analytically
/// from the reduction; an empty real locus is annotated "no real points".
/// Output bytes are deterministic for fixed inputs.
std::string render_conic_svg(const Conic& c, const PlotWindow& window, int grid = 512,
                             double eps = kDefaultEpsilon);

}  // namespace pec
