#include "region_quad.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace fidbayes::detail {

namespace {

constexpr std::array<double, 9> kOffsets = {-12.0, -6.0, -3.0, -1.0, 0.0,
                                            1.0,   3.0,  6.0,  12.0};

std::vector<double> breakpoints(double lo, double hi,
                                std::span<const Feature> features,
                                std::span<const double> extra = {}) {
  std::vector<double> pts{lo, hi};
  for (const Feature& ft : features) {
    for (double k : kOffsets) {
      const double p = ft.center + k * ft.scale;
      if (p > lo && p < hi) pts.push_back(p);
    }
  }
  for (double p : extra) {
    if (p > lo && p < hi) pts.push_back(p);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

std::pair<double, double> window(std::span<const Feature> features) {
  double lo = features.front().center - kTailScales * features.front().scale;
  double hi = features.front().center + kTailScales * features.front().scale;
  for (const Feature& ft : features) {
    lo = std::min(lo, ft.center - kTailScales * ft.scale);
    hi = std::max(hi, ft.center + kTailScales * ft.scale);
  }
  return {lo, hi};
}

QuadResult operator+(QuadResult a, const QuadResult& b) {
  a.value += b.value;
  a.abs_error += b.abs_error;
  a.subdivisions += b.subdivisions;
  return a;
}

}  // namespace

QuadResult integrate_span(const Integrand& f, double lo, double hi,
                          std::span<const Feature> features,
                          const QuadSpec& spec) {
  if (!(hi > lo)) return {};
  const std::vector<double> pts = breakpoints(lo, hi, features);
  return integrate(f, pts, spec);
}

QuadResult integrate_complement(const Integrand& f, double lo, double hi,
                                std::span<const Feature> features,
                                const QuadSpec& spec) {
  const auto [wlo, whi] = window(features);
  QuadResult total;
  if (wlo < lo) total = total + integrate_span(f, wlo, lo, features, spec);
  if (whi > hi) total = total + integrate_span(f, hi, whi, features, spec);
  return total;
}

QuadResult integrate_line(const Integrand& f, std::span<const Feature> features,
                          std::span<const double> extra_points,
                          const QuadSpec& spec) {
  auto [wlo, whi] = window(features);
  for (double p : extra_points) {
    wlo = std::min(wlo, p);
    whi = std::max(whi, p);
  }
  const std::vector<double> pts = breakpoints(wlo, whi, features, extra_points);
  return integrate(f, pts, spec);
}

}  // namespace fidbayes::detail
