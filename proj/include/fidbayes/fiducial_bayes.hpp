#pragma once

#include "fidbayes/fiducial.hpp"
#include "fidbayes/post_data.hpp"
#include "fidbayes/scenario.hpp"

namespace fidbayes {

enum class TauRule {
  /// tau chosen so the stitched post-data density is continuous at the
  /// interval boundaries.
  continuity,
  /// tau taken from gpd_in.tau as given.
  explicit_value,
};

struct FidBayesConfig {
  IntervalHypothesis hyp;
  GpdSpec gpd_in;
  GpdSpec gpd_out;
  TauRule tau_rule = TauRule::continuity;

  /// Both GPDs normal-weighted with the same (theta0, sigma0).
  static FidBayesConfig normal(const IntervalHypothesis& hyp, double theta0,
                               double sigma0);
  /// Both GPDs flat (the sigma0 -> infinity limit).
  static FidBayesConfig flat(const IntervalHypothesis& hyp);

  void validate() const;
};

/// Expected likelihood of theta_A over the inside conditional fiducial
/// density; g(xbar | theta_l) when that density is a point mass.
double expected_likelihood_in(const Scenario& s, const CondFiducial& cf_in);

/// Expected likelihood of theta_B over the outside conditional fiducial
/// density (both tails).
double expected_likelihood_out(const Scenario& s, const CondFiducial& cf_out);

/// Two-point Bayes ratio lambda g_a / (lambda g_a + (1 - lambda) g_b).
double known_values_prob(double lam, double g_a, double g_b);

/// tau >= 0 making C_in(tau) P_in(tau) = C_out P_out(tau), which (as the bump
/// vanishes at both ends) makes the stitched density continuous at both
/// boundaries. Scans tau = 0, 1, 2, 4, ..., 2^30 for the first sign change
/// and refines with Brent. Throws ContinuityError if there is none.
double solve_tau_continuity(const Scenario& s, const FidBayesConfig& cfg);

struct FidBayesResult {
  PostData post;
  double tau;
  CondFiducial inside;
  CondFiducial outside;
  double e_in;
  double e_out;
};

/// Full method: resolves tau, builds both conditional fiducial densities,
/// forms P_in from the expected likelihoods and stitches
/// p0 = f_in P_in + f_out P_out.
FidBayesResult fiducial_bayes(const Scenario& s, const FidBayesConfig& cfg);

inline PostData fb_prob_in(const Scenario& s, const FidBayesConfig& cfg) {
  return fiducial_bayes(s, cfg).post;
}

double fb_postdata_pdf(const Scenario& s, const FidBayesConfig& cfg,
                       double theta);

enum class LimitKind { sigma0_to_infinity, n_to_infinity };

/// sigma0 -> infinity: the same analysis with flat GPDs.
double fb_limit_sigma0(const Scenario& s, const IntervalHypothesis& hyp);

/// n -> infinity with xbar = z sigma / sqrt(n): for a point null at 0 the
/// standardized limit lambda phi(z) / (lambda phi(z) + (1 - lambda) / (2
/// sqrt(pi))); for a proper interval containing 0 in its interior xbar ends
/// up inside it and the limit is 1.
double fb_limit_n(const LindleyFamily& family, const IntervalHypothesis& hyp);

struct LimitQuery {
  LimitKind kind;
  IntervalHypothesis hyp;
  /// Used for sigma0_to_infinity.
  const Scenario* scenario = nullptr;
  /// Used for n_to_infinity.
  const LindleyFamily* family = nullptr;
};

/// Dispatches to the two limits; ValidationError if the inputs needed for
/// the requested limit are missing or unsupported.
double fb_limits(const LimitQuery& q);

}  // namespace fidbayes
