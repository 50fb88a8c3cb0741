#pragma once

#include "fidbayes/fiducial_bayes.hpp"
#include "fidbayes/post_data.hpp"
#include "fidbayes/prior.hpp"

namespace fidbayes {

/// kappa is the share of the pre-data population whose composition is
/// known; 0 gives the fiducial-Bayes answer, 1 the pure Bayesian one.
/// Values between 0 and 0.3 are the usual range; 0.2 is the tabulated one.
struct MixtureConfig {
  double kappa = 0.2;
  SpikeSlabPrior prior;
  FidBayesConfig fb;

  void validate() const;
};

/// p1 = kappa * posterior + (1 - kappa) * p0, spike masses mixed likewise.
PostData mixture(const Scenario& s, const MixtureConfig& cfg);

double mixture_pdf(const Scenario& s, const MixtureConfig& cfg, double theta);

inline double mixture_prob_in(const Scenario& s, const MixtureConfig& cfg) {
  return mixture(s, cfg).p_in;
}

/// The same weighted average applied to already computed probabilities
/// (used for the limit columns).
double mix(double kappa, double pure_p_in, double fb_p_in);

}  // namespace fidbayes
