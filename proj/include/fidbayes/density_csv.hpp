#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fidbayes/post_data.hpp"

namespace fidbayes {

/// Evenly spaced theta values with both endpoints included.
struct Grid {
  double lo = 0.0;
  double hi = 0.0;
  int count = 1;

  std::vector<double> points() const;
  void validate() const;
};

/// Parses "LO:HI:COUNT". COUNT = 1 yields LO alone.
Grid parse_grid(std::string_view text);

/// theta,density rows; a point null adds a constant spike_mass_at_zero
/// column holding the atom's mass.
std::string density_csv(const PostData& pd, const Grid& grid);

/// theta,<column> rows for an arbitrary curve (e.g. the likelihood).
std::string curve_csv(const std::function<double(double)>& f, const Grid& grid,
                      std::string_view column = "density");

}  // namespace fidbayes
