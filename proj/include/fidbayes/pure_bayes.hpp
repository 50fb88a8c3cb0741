#pragma once

#include "fidbayes/post_data.hpp"
#include "fidbayes/prior.hpp"
#include "fidbayes/scenario.hpp"

namespace fidbayes {

/// Standard Bayesian analysis under the spike-slab prior. p_in is the ratio
/// lambda m_in / (lambda m_in + (1 - lambda) m_out) of the two
/// region-conditioned marginal likelihoods; the density is C0 g(x | theta)
/// pi(theta). Constants recorded: m_in, m_out, C0.
PostData posterior(const SpikeSlabPrior& prior, const Scenario& s);

inline PostData prob_in_interval(const SpikeSlabPrior& prior,
                                 const Scenario& s) {
  return posterior(prior, s);
}

/// Convenience single-point evaluation; prefer posterior() on grids.
double posterior_pdf(const SpikeSlabPrior& prior, const Scenario& s,
                     double theta);

/// The same probability by the other route: normalize g * pi over the whole
/// line, then integrate the posterior density over the interval.
double prob_in_by_density(const SpikeSlabPrior& prior, const Scenario& s);

/// int g(xbar | theta) N(theta; theta0, sigma0^2) dtheta
///   = N(xbar; theta0, se^2 + sigma0^2).
double slab_marginal_closed_form(double theta0, double sigma0,
                                 const Scenario& s);

/// Same integral by quadrature.
double slab_marginal(double theta0, double sigma0, const Scenario& s);

/// Two-point Bayes ratio fed with region-conditioned *Bayesian* posteriors in
/// place of the conditional fiducial densities. This mixes incompatible
/// analogies and is kept only to show that it disagrees with posterior().
double incompatible_double_bayes_prob(const SpikeSlabPrior& prior,
                                      const Scenario& s);

/// p_in as sigma0 -> infinity (Bartlett) or n -> infinity under Lindley
/// scaling: both tend to one.
inline constexpr double pure_bayes_limit_prob() { return 1.0; }

}  // namespace fidbayes
