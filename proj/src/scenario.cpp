#include "fidbayes/scenario.hpp"

#include <cmath>

#include "fidbayes/errors.hpp"
#include "fidbayes/numerics.hpp"

namespace fidbayes {

Scenario::Scenario(double sigma, double n, double xbar)
    : sigma_(sigma), n_(n), xbar_(xbar), se_(sigma / std::sqrt(n)) {}

Scenario Scenario::from_sample(double sigma, double n, double xbar) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ValidationError("scenario: sigma must be positive and finite");
  }
  if (!(n >= 1.0) || !std::isfinite(n)) {
    throw ValidationError("scenario: n must be at least 1");
  }
  if (!std::isfinite(xbar)) {
    throw ValidationError("scenario: xbar must be finite");
  }
  return Scenario(sigma, n, xbar);
}

Scenario Scenario::from_standard_error(double se, double xbar) {
  if (!(se > 0.0) || !std::isfinite(se)) {
    throw ValidationError("scenario: standard error must be positive");
  }
  return from_sample(se, 1.0, xbar);
}

IntervalHypothesis IntervalHypothesis::symmetric(double eps, double lam) {
  if (!(eps >= 0.0) || !std::isfinite(eps)) {
    throw ValidationError("hypothesis: half-width must be >= 0");
  }
  IntervalHypothesis h{-eps, eps, lam};
  h.validate();
  return h;
}

IntervalHypothesis IntervalHypothesis::interval(double theta_l, double theta_u,
                                                double lam) {
  IntervalHypothesis h{theta_l, theta_u, lam};
  h.validate();
  return h;
}

void IntervalHypothesis::validate() const {
  if (!std::isfinite(theta_l) || !std::isfinite(theta_u) ||
      !(theta_l <= theta_u)) {
    throw ValidationError("hypothesis: need finite theta_l <= theta_u");
  }
  if (!(lam > 0.0 && lam < 1.0)) {
    throw ValidationError("hypothesis: lambda must lie in (0, 1)");
  }
}

double likelihood_height(const Scenario& s, double theta) {
  return std_normal_pdf((s.xbar() - theta) / s.se()) / s.se();
}

double lindley_xbar(double alpha, double sigma, double n) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("lindley_xbar: alpha must lie in (0, 1)");
  }
  if (!(sigma > 0.0) || !(n > 0.0)) {
    throw ValidationError("lindley_xbar: sigma and n must be positive");
  }
  return std_normal_quantile(1.0 - 0.5 * alpha) * sigma / std::sqrt(n);
}

Scenario LindleyFamily::at(double n) const {
  return Scenario::from_sample(sigma, n, lindley_xbar(alpha, sigma, n));
}

double LindleyFamily::z() const {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw ValidationError("lindley family: alpha must lie in (0, 1)");
  }
  return std_normal_quantile(1.0 - 0.5 * alpha);
}

}  // namespace fidbayes
