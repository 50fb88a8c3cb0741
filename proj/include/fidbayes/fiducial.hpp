#pragma once

#include "fidbayes/scenario.hpp"

namespace fidbayes {

enum class GpdVariant { flat, normal_weighted };

/// Weight function of theta applied to the flat fiducial density before
/// renormalizing. The normal-weighted form is phi((theta - theta0) / sigma0)
/// (times 1 + tau h(theta) on the null interval); flat is its sigma0 -> inf
/// limit. Any positive overall scale cancels, so none is stored.
struct GpdSpec {
  GpdVariant variant = GpdVariant::flat;
  double theta0 = 0.0;
  double sigma0 = 1.0;
  double tau = 0.0;

  static GpdSpec flat(double tau = 0.0);
  static GpdSpec normal(double theta0, double sigma0, double tau = 0.0);

  void validate() const;
};

struct NormalDistribution {
  double mean;
  double sd;

  double pdf(double x) const;
  double cdf(double x) const;
  double quantile(double p) const;
  /// P(lo < X < hi).
  double prob(double lo, double hi) const;
};

/// Fiducial distribution of theta with nothing known beforehand:
/// N(xbar, se^2).
NormalDistribution fiducial_flat(const Scenario& s);

struct ConfidenceInterval {
  double lo;
  double hi;
};

/// xbar -/+ Phi^{-1}((1 + beta) / 2) se. Its fiducial_flat mass is beta.
ConfidenceInterval fisher_ci(const Scenario& s, double beta);

/// Location and scale of the GPD-weighted fiducial density before
/// truncation: precision-weighted mean and harmonic variance of
/// (xbar, se^2) and (theta0, sigma0^2); (xbar, se) for a flat GPD.
struct LocationScale {
  double location;
  double scale;
};
LocationScale weighted_location_scale(const Scenario& s, const GpdSpec& gpd);

/// Fiducial density of theta conditioned on lying inside (or outside) the
/// null interval: a normal kernel at (location, scale), times (1 + tau h)
/// inside, truncated to the region and renormalized. Inside a point null it
/// degenerates to a point mass.
class CondFiducial {
 public:
  CondFiducial(const Scenario& s, const IntervalHypothesis& hyp, Region region,
               const GpdSpec& gpd);

  Region region() const noexcept { return region_; }
  const IntervalHypothesis& hyp() const noexcept { return hyp_; }
  double location() const noexcept { return location_; }
  double scale() const noexcept { return scale_; }
  double tau() const noexcept { return tau_; }
  /// Multiplies the kernel to give a unit-mass density (recorded as C_in / C_out).
  double normalizer() const noexcept { return normalizer_; }

  bool is_point_mass() const noexcept {
    return region_ == Region::inside && hyp_.is_point();
  }
  double point() const noexcept { return hyp_.theta_l; }

  /// Unnormalized kernel, zero off the region.
  double kernel(double theta) const;
  /// Throws for a point mass.
  double pdf(double theta) const;

 private:
  Region region_;
  IntervalHypothesis hyp_;
  double location_;
  double scale_;
  double tau_;
  double normalizer_ = 0.0;
};

inline CondFiducial cond_fiducial(const Scenario& s,
                                  const IntervalHypothesis& hyp, Region region,
                                  const GpdSpec& gpd) {
  return CondFiducial(s, hyp, region, gpd);
}

}  // namespace fidbayes
