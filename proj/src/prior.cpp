#include "fidbayes/prior.hpp"

#include <cmath>
#include <string>

#include "fidbayes/errors.hpp"
#include "fidbayes/numerics.hpp"
#include "region_quad.hpp"

namespace fidbayes {

namespace {

void check_slab(double theta0, double sigma0) {
  if (!std::isfinite(theta0)) {
    throw ValidationError("prior: theta0 must be finite");
  }
  if (!(sigma0 > 0.0) || !std::isfinite(sigma0)) {
    throw ValidationError("prior: sigma0 must be positive and finite");
  }
}

}  // namespace

double solve_tau_prior(const IntervalHypothesis& hyp, double theta0,
                       double sigma0) {
  hyp.validate();
  check_slab(theta0, sigma0);
  if (hyp.is_point()) {
    throw ValidationError("solve_tau_prior: interval must have positive width");
  }
  const double lo = hyp.theta_l;
  const double hi = hyp.theta_u;
  auto kernel = [&](double t) { return std_normal_pdf((t - theta0) / sigma0); };
  const detail::Feature ft[] = {{theta0, sigma0}};
  const double g = detail::integrate_span(kernel, lo, hi, ft).value;
  const double h =
      detail::integrate_span(
          [&](double t) { return kernel(t) * beta_bump_density(t, lo, hi); },
          lo, hi, ft)
          .value;
  if (!(h > 0.0)) {
    throw NumericalError("solve_tau_prior: bump integral underflowed");
  }
  double excess = hyp.lam * sigma0 - g;
  if (std::fabs(excess) <= 1e-12 * hyp.lam * sigma0) excess = 0.0;
  if (excess < 0.0) {
    throw InfeasiblePriorError(
        "prior: the slab alone puts mass " + std::to_string(g / sigma0) +
        " on the interval, more than lambda = " + std::to_string(hyp.lam));
  }
  return excess / ((1.0 - hyp.lam) * h);
}

SpikeSlabPrior::SpikeSlabPrior(IntervalHypothesis hyp, double theta0,
                               double sigma0)
    : hyp_(hyp), theta0_(theta0), sigma0_(sigma0) {
  hyp_.validate();
  check_slab(theta0, sigma0);
  if (hyp_.is_point()) return;

  tau_ = solve_tau_prior(hyp_, theta0_, sigma0_);
  const double lo = hyp_.theta_l;
  const double hi = hyp_.theta_u;
  const detail::Feature ft[] = {{theta0_, sigma0_}};
  const double h =
      detail::integrate_span(
          [&](double t) { return slab_kernel(t) * beta_bump_density(t, lo, hi); },
          lo, hi, ft)
          .value;
  // Whole-line kernel integral is sigma0; the bump adds tau * H.
  c1_ = 1.0 / (sigma0_ + tau_ * h);
}

double SpikeSlabPrior::slab_kernel(double theta) const {
  return std_normal_pdf((theta - theta0_) / sigma0_);
}

double SpikeSlabPrior::bumped_kernel(double theta) const {
  const double k = slab_kernel(theta);
  if (hyp_.is_point()) return k;
  return k * (1.0 + tau_ * beta_bump_density(theta, hyp_.theta_l, hyp_.theta_u));
}

double SpikeSlabPrior::pdf(double theta) const {
  if (hyp_.is_point()) {
    return (1.0 - hyp_.lam) * slab_kernel(theta) / sigma0_;
  }
  return c1_ * bumped_kernel(theta);
}

double SpikeSlabPrior::conditional_pdf(double theta, Region region) const {
  if (region == Region::inside) {
    if (hyp_.is_point()) {
      throw ValidationError(
          "conditional_pdf: the inside prior of a point null is a point mass");
    }
    return hyp_.contains(theta) ? pdf(theta) / hyp_.lam : 0.0;
  }
  if (hyp_.is_point()) return slab_kernel(theta) / sigma0_;
  return hyp_.contains(theta) ? 0.0 : pdf(theta) / (1.0 - hyp_.lam);
}

}  // namespace fidbayes
