#pragma once

#include <vector>

#include "fidbayes/density_csv.hpp"
#include "fidbayes/post_data.hpp"
#include "fidbayes/scenario.hpp"
#include "fidbayes/svg.hpp"

namespace fidbayes {

/// Parameters of the two reference density plots. Both share the interval
/// and data; they differ in the slab / GPD centre and scale.
struct FigureSpec {
  int id = 1;
  double epsilon = 0.2;
  double lam = 0.4;
  double theta0 = 0.0;
  double sigma0 = 10.0;
  double se = 1.0;
  double xbar = 2.576;
  double kappa = 0.2;
  bool with_mixture = true;

  Scenario scenario() const { return Scenario::from_standard_error(se, xbar); }
  IntervalHypothesis hypothesis() const {
    return IntervalHypothesis::symmetric(epsilon, lam);
  }
};

/// Throws ValidationError unless id is 1 or 2.
FigureSpec figure_spec(int id);

PostData figure_density(const FigureSpec& f, Method m);

inline Grid default_figure_grid() { return {-2.0, 6.0, 801}; }

/// Pure Bayesian (long-dash), fiducial-Bayes (solid), mixture (dotted, figure
/// 1 only) and the likelihood (short-dash).
std::vector<Curve> figure_curves(const FigureSpec& f, const Grid& grid);

}  // namespace fidbayes
