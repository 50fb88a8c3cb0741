#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fidbayes/prior.hpp"
#include "fidbayes/scenario.hpp"

namespace fidbayes {

struct Bounds {
  double lower;
  double upper;
};

/// Prior probabilities of a hypothesis H, one per candidate population,
/// with unknown chances of each population being the one sampled.
struct BinaryPriorClass {
  std::vector<double> probs;

  void validate() const;
  double p_smallest() const;
  double p_largest() const;
};

/// Finite class of fully specified spike-slab priors.
struct PriorClass {
  std::vector<SpikeSlabPrior> members;
};

/// Posterior probability of H from prior p and Bayes factor
/// B = g(x | H) / g(x | not H): p B / (p B + 1 - p).
double binary_posterior(double p, double bayes_factor);

/// The posterior is increasing in p, so the bounds come from the smallest
/// and largest prior probabilities in the class.
Bounds binary_posterior_bounds(const BinaryPriorClass& pc, double bayes_factor);

/// Posterior expectation of a functional under the pure Bayesian posterior,
/// spike included.
double posterior_expectation(const SpikeSlabPrior& prior, const Scenario& s,
                             const std::function<double(double)>& functional);

/// Min and max of the posterior expectation over every class member.
Bounds functional_bounds(const PriorClass& pc, const Scenario& s,
                         const std::function<double(double)>& functional);

}  // namespace fidbayes
