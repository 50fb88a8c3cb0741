#pragma once

#include <istream>
#include <span>
#include <string>
#include <vector>

namespace fidbayes {

enum class Stroke { automatic, solid, long_dash, dotted, short_dash };

struct Curve {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
  Stroke stroke = Stroke::automatic;
};

/// Reads the first two columns of a CSV with a header row.
Curve read_curve_csv(std::istream& in, std::string name);

/// Standalone SVG line chart, 800 x 500, axes scaled to the data, one
/// polyline per curve (automatic strokes cycle through solid, long-dash,
/// dotted and short-dash) and a legend. Throws ValidationError when there is
/// nothing to draw.
std::string render_svg(std::span<const Curve> curves,
                       const std::string& x_label = "theta",
                       const std::string& y_label = "density");

}  // namespace fidbayes
