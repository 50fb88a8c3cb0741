#include "fidbayes/sensitivity.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "fidbayes/errors.hpp"
#include "fidbayes/pure_bayes.hpp"
#include "region_quad.hpp"

namespace fidbayes {

void BinaryPriorClass::validate() const {
  if (probs.empty()) {
    throw ValidationError("prior class: at least one member required");
  }
  for (double p : probs) {
    if (!(p > 0.0 && p < 1.0)) {
      throw ValidationError("prior class: probabilities must lie in (0, 1)");
    }
  }
}

double BinaryPriorClass::p_smallest() const {
  validate();
  return *std::min_element(probs.begin(), probs.end());
}

double BinaryPriorClass::p_largest() const {
  validate();
  return *std::max_element(probs.begin(), probs.end());
}

double binary_posterior(double p, double bayes_factor) {
  if (!(bayes_factor > 0.0) || !std::isfinite(bayes_factor)) {
    throw ValidationError("binary_posterior: Bayes factor must be positive");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ValidationError("binary_posterior: p must lie in [0, 1]");
  }
  const double a = p * bayes_factor;
  return a / (a + 1.0 - p);
}

Bounds binary_posterior_bounds(const BinaryPriorClass& pc, double bayes_factor) {
  return {binary_posterior(pc.p_smallest(), bayes_factor),
          binary_posterior(pc.p_largest(), bayes_factor)};
}

double posterior_expectation(const SpikeSlabPrior& prior, const Scenario& s,
                             const std::function<double(double)>& functional) {
  const PostData pd = posterior(prior, s);
  const IntervalHypothesis& hyp = prior.hyp();
  const std::array<detail::Feature, 2> ft{
      detail::Feature{s.xbar(), s.se()},
      detail::Feature{prior.theta0(), prior.sigma0()}};
  const std::array<double, 2> edges{hyp.theta_l, hyp.theta_u};
  const double continuous =
      detail::integrate_line(
          [&](double t) { return pd.density(t) * functional(t); }, ft, edges)
          .value;
  const double spike =
      pd.spike_mass > 0.0 ? pd.spike_mass * functional(pd.spike_location) : 0.0;
  return continuous + spike;
}

Bounds functional_bounds(const PriorClass& pc, const Scenario& s,
                         const std::function<double(double)>& functional) {
  if (pc.members.empty()) {
    throw ValidationError("functional_bounds: empty prior class");
  }
  constexpr double inf = std::numeric_limits<double>::infinity();
  Bounds b{inf, -inf};
  for (const SpikeSlabPrior& prior : pc.members) {
    const double e = posterior_expectation(prior, s, functional);
    b.lower = std::min(b.lower, e);
    b.upper = std::max(b.upper, e);
  }
  return b;
}

}  // namespace fidbayes
