#include "fidbayes/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <sstream>

#include "fidbayes/errors.hpp"

namespace fidbayes {

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 70, kRight = 20, kTop = 20, kBottom = 50;
constexpr int kTicks = 5;

constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#7f7f7f",
                                   "#9467bd", "#ff7f0e"};
constexpr const char* kDashes[] = {"", "12 6", "2 4", "6 4"};

std::string dash_of(const Curve& c, size_t k) {
  switch (c.stroke) {
    case Stroke::solid: return kDashes[0];
    case Stroke::long_dash: return kDashes[1];
    case Stroke::dotted: return kDashes[2];
    case Stroke::short_dash: return kDashes[3];
    case Stroke::automatic: break;
  }
  return kDashes[k % std::size(kDashes)];
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  if (std::fabs(v) < 1e-12) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (const char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo, hi;
};

Range padded(double lo, double hi) {
  if (hi - lo <= 0.0) {
    const double pad = lo == 0.0 ? 1.0 : std::fabs(lo) * 0.1;
    return {lo - pad, hi + pad};
  }
  return {lo, hi};
}

}  // namespace

Curve read_curve_csv(std::istream& in, std::string name) {
  Curve c{std::move(name), {}, {}};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::istringstream row(line);
    std::string a, b;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',')) {
      throw ValidationError("svg: row needs two columns: '" + line + "'");
    }
    try {
      c.x.push_back(std::stod(a));
      c.y.push_back(std::stod(b));
    } catch (const std::exception&) {
      throw ValidationError("svg: non-numeric row '" + line + "'");
    }
  }
  if (c.x.empty()) throw ValidationError("svg: curve '" + c.name + "' is empty");
  return c;
}

std::string render_svg(std::span<const Curve> curves, const std::string& x_label,
                       const std::string& y_label) {
  if (curves.empty()) throw ValidationError("svg: no curves given");
  constexpr double inf = std::numeric_limits<double>::infinity();
  double xmin = inf, xmax = -inf, ymin = 0.0, ymax = -inf;
  for (const Curve& c : curves) {
    if (c.x.empty() || c.x.size() != c.y.size()) {
      throw ValidationError("svg: curve '" + c.name + "' is empty or ragged");
    }
    for (size_t i = 0; i < c.x.size(); ++i) {
      if (!std::isfinite(c.x[i]) || !std::isfinite(c.y[i])) {
        throw ValidationError("svg: curve '" + c.name + "' has non-finite data");
      }
      xmin = std::min(xmin, c.x[i]);
      xmax = std::max(xmax, c.x[i]);
      ymin = std::min(ymin, c.y[i]);
      ymax = std::max(ymax, c.y[i]);
    }
  }
  const Range xr = padded(xmin, xmax);
  Range yr = padded(ymin, ymax);
  yr.hi += 0.05 * (yr.hi - yr.lo);

  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) { return kTop + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
       "height=\"500\" viewBox=\"0 0 800 500\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"500\" fill=\"white\"/>\n";
  s += "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";

  // Axes box and ticks.
  s += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" +
       num(pw) + "\" height=\"" + num(ph) +
       "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double xv = xr.lo + (xr.hi - xr.lo) * i / kTicks;
    const double yv = yr.lo + (yr.hi - yr.lo) * i / kTicks;
    const double tx = px(xv), ty = py(yv);
    s += "<line x1=\"" + num(tx) + "\" y1=\"" + num(kTop + ph) + "\" x2=\"" +
         num(tx) + "\" y2=\"" + num(kTop + ph + 5) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(tx) + "\" y=\"" + num(kTop + ph + 18) +
         "\" text-anchor=\"middle\">" + tick_label(xv) + "</text>\n";
    s += "<line x1=\"" + num(kLeft - 5) + "\" y1=\"" + num(ty) + "\" x2=\"" +
         num(kLeft) + "\" y2=\"" + num(ty) + "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(ty + 4) +
         "\" text-anchor=\"end\">" + tick_label(yv) + "</text>\n";
  }
  s += "<text x=\"" + num(kLeft + pw / 2) + "\" y=\"" + num(kHeight - 10) +
       "\" text-anchor=\"middle\">" + escape(x_label) + "</text>\n";
  s += "<text x=\"15\" y=\"" + num(kTop + ph / 2) +
       "\" text-anchor=\"middle\" transform=\"rotate(-90 15 " +
       num(kTop + ph / 2) + ")\">" + escape(y_label) + "</text>\n";

  // Curves.
  for (size_t k = 0; k < curves.size(); ++k) {
    const Curve& c = curves[k];
    const std::string color = kColors[k % std::size(kColors)];
    const std::string dash = dash_of(c, k);
    s += "<polyline fill=\"none\" stroke=\"" + color +
         "\" stroke-width=\"1.5\"";
    if (!dash.empty()) s += " stroke-dasharray=\"" + dash + "\"";
    s += " points=\"";
    for (size_t i = 0; i < c.x.size(); ++i) {
      if (i) s += ' ';
      s += num(px(c.x[i])) + ',' + num(py(c.y[i]));
    }
    s += "\"/>\n";
  }

  // Legend, top right.
  const double lx = kLeft + pw - 190, ly = kTop + 15;
  for (size_t k = 0; k < curves.size(); ++k) {
    const double y = ly + 18.0 * k;
    const std::string dash = dash_of(curves[k], k);
    s += "<line x1=\"" + num(lx) + "\" y1=\"" + num(y) + "\" x2=\"" +
         num(lx + 40) + "\" y2=\"" + num(y) + "\" stroke=\"" +
         kColors[k % std::size(kColors)] + "\" stroke-width=\"1.5\"";
    if (!dash.empty()) s += " stroke-dasharray=\"" + dash + "\"";
    s += "/>\n";
    s += "<text x=\"" + num(lx + 48) + "\" y=\"" + num(y + 4) + "\">" +
         escape(curves[k].name) + "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

}  // namespace fidbayes
