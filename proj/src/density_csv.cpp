#include "fidbayes/density_csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

#include "fidbayes/errors.hpp"

namespace fidbayes {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

template <typename T>
T parse_field(std::string_view text, const char* what) {
  T v{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError(std::string("grid: bad ") + what + " '" +
                          std::string(text) + "'");
  }
  return v;
}

}  // namespace

void Grid::validate() const {
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    throw ValidationError("grid: bounds must be finite");
  }
  if (count < 1) throw ValidationError("grid: count must be >= 1");
  if (count > 1 && !(hi > lo)) {
    throw ValidationError("grid: need LO < HI when COUNT > 1");
  }
}

std::vector<double> Grid::points() const {
  validate();
  std::vector<double> pts(static_cast<size_t>(count));
  if (count == 1) {
    pts[0] = lo;
    return pts;
  }
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) pts[i] = lo + i * step;
  pts.back() = hi;
  return pts;
}

Grid parse_grid(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos ||
      text.find(':', c2 + 1) != std::string_view::npos) {
    throw ValidationError("grid: expected LO:HI:COUNT, got '" +
                          std::string(text) + "'");
  }
  Grid g{parse_field<double>(text.substr(0, c1), "LO"),
         parse_field<double>(text.substr(c1 + 1, c2 - c1 - 1), "HI"),
         parse_field<int>(text.substr(c2 + 1), "COUNT")};
  g.validate();
  return g;
}

std::string density_csv(const PostData& pd, const Grid& grid) {
  const bool spike = pd.spike_mass > 0.0;
  std::string out = spike ? "theta,density,spike_mass_at_zero\n"
                          : "theta,density\n";
  const std::string mass = spike ? ',' + fmt(pd.spike_mass) : std::string();
  for (const double t : grid.points()) {
    out += fmt(t) + ',' + fmt(pd.pdf(t)) + mass + '\n';
  }
  return out;
}

std::string curve_csv(const std::function<double(double)>& f, const Grid& grid,
                      std::string_view column) {
  std::string out = "theta," + std::string(column) + '\n';
  for (const double t : grid.points()) out += fmt(t) + ',' + fmt(f(t)) + '\n';
  return out;
}

}  // namespace fidbayes
