#pragma once

#include "fidbayes/scenario.hpp"

namespace fidbayes {

/// Bimodal prior: a normal slab N(theta0, sigma0^2) reweighted by
/// (1 + tau * h(theta)) with h the Beta(4, 4) bump on the null interval,
/// tau chosen so the interval carries prior mass lambda. A point null is
/// held exactly as a spike of mass lambda plus (1 - lambda) N(theta0, sigma0^2).
class SpikeSlabPrior {
 public:
  /// Solves tau. Throws InfeasiblePriorError when the slab alone already
  /// puts more than lambda on the interval (tau would be negative).
  SpikeSlabPrior(IntervalHypothesis hyp, double theta0, double sigma0);

  const IntervalHypothesis& hyp() const noexcept { return hyp_; }
  double theta0() const noexcept { return theta0_; }
  double sigma0() const noexcept { return sigma0_; }
  double tau() const noexcept { return tau_; }
  /// Normalizing constant of the bumped slab (0 for a point null).
  double normalizer() const noexcept { return c1_; }

  bool has_spike() const noexcept { return hyp_.is_point(); }
  double spike_mass() const noexcept { return has_spike() ? hyp_.lam : 0.0; }
  double spike_location() const noexcept { return hyp_.theta_l; }

  /// Continuous part of the prior. For a point null this is the defective
  /// slab (1 - lambda) N(theta0, sigma0^2); add spike_mass() to integrate to 1.
  double pdf(double theta) const;

  /// Prior restricted to the interval (or its complement) and renormalized.
  /// Inside is undefined as a density for a point null.
  double conditional_pdf(double theta, Region region) const;

  /// Un-normalized slab kernel phi((theta - theta0) / sigma0).
  double slab_kernel(double theta) const;

  /// phi kernel times (1 + tau h) inside the interval, plain kernel outside.
  double bumped_kernel(double theta) const;

 private:
  IntervalHypothesis hyp_;
  double theta0_;
  double sigma0_;
  double tau_ = 0.0;
  double c1_ = 0.0;
};

/// Closed-form tau from linearity of the lambda-mass condition in tau:
/// tau = (lambda sigma0 - G) / ((1 - lambda) H), G and H the interval
/// integrals of the slab kernel without and with the bump.
double solve_tau_prior(const IntervalHypothesis& hyp, double theta0,
                       double sigma0);

inline double prior_pdf(const SpikeSlabPrior& p, double theta) {
  return p.pdf(theta);
}

inline double conditional_prior_pdf(const SpikeSlabPrior& p, double theta,
                                    Region region) {
  return p.conditional_pdf(theta, region);
}

}  // namespace fidbayes
