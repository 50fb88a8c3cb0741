#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fidbayes {

enum class Method { pure_bayes, fiducial_bayes, mixture };

std::string_view to_string(Method m);

/// Parses "pure-bayes", "fiducial-bayes" or "mixture".
Method parse_method(std::string_view name);

/// Post-data distribution of theta produced by any of the methods.
struct PostData {
  Method method = Method::pure_bayes;
  double p_in = 0.0;
  double p_out = 1.0;

  /// Point mass at spike_location (nonzero only for a point null).
  double spike_mass = 0.0;
  double spike_location = 0.0;

  /// Continuous part; integrates to 1 - spike_mass.
  std::function<double(double)> density;

  /// Named normalizing constants and intermediate integrals.
  std::vector<std::pair<std::string, double>> constants;
  /// Summed quadrature error estimates behind p_in.
  double quad_error = 0.0;

  double pdf(double theta) const { return density(theta); }
  double constant(std::string_view name) const;
};

}  // namespace fidbayes
