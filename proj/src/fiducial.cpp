#include "fidbayes/fiducial.hpp"

#include <cmath>

#include "fidbayes/errors.hpp"
#include "fidbayes/numerics.hpp"
#include "region_quad.hpp"

namespace fidbayes {

GpdSpec GpdSpec::flat(double tau) {
  GpdSpec g{GpdVariant::flat, 0.0, 1.0, tau};
  g.validate();
  return g;
}

GpdSpec GpdSpec::normal(double theta0, double sigma0, double tau) {
  GpdSpec g{GpdVariant::normal_weighted, theta0, sigma0, tau};
  g.validate();
  return g;
}

void GpdSpec::validate() const {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw ValidationError("gpd: tau must be finite and >= 0");
  }
  if (variant == GpdVariant::normal_weighted &&
      (!std::isfinite(theta0) || !(sigma0 > 0.0) || !std::isfinite(sigma0))) {
    throw ValidationError("gpd: need finite theta0 and sigma0 > 0");
  }
}

double NormalDistribution::pdf(double x) const { return normal_pdf(x, mean, sd); }

double NormalDistribution::cdf(double x) const {
  return std_normal_cdf((x - mean) / sd);
}

double NormalDistribution::quantile(double p) const {
  return mean + sd * std_normal_quantile(p);
}

double NormalDistribution::prob(double lo, double hi) const {
  if (!(hi > lo)) return 0.0;
  const double a = (lo - mean) / sd;
  const double b = (hi - mean) / sd;
  // Subtract in whichever tail keeps precision.
  if (a >= 0.0) return std_normal_cdf(-a) - std_normal_cdf(-b);
  return std_normal_cdf(b) - std_normal_cdf(a);
}

NormalDistribution fiducial_flat(const Scenario& s) {
  return {s.xbar(), s.se()};
}

ConfidenceInterval fisher_ci(const Scenario& s, double beta) {
  if (!(beta > 0.0 && beta < 1.0)) {
    throw ValidationError("fisher_ci: beta must lie in (0, 1)");
  }
  const double half = std_normal_quantile(0.5 * (1.0 + beta)) * s.se();
  return {s.xbar() - half, s.xbar() + half};
}

LocationScale weighted_location_scale(const Scenario& s, const GpdSpec& gpd) {
  gpd.validate();
  if (gpd.variant == GpdVariant::flat) return {s.xbar(), s.se()};
  const double v = s.se() * s.se();
  const double v0 = gpd.sigma0 * gpd.sigma0;
  const double location = (v0 * s.xbar() + v * gpd.theta0) / (v0 + v);
  const double variance = v * v0 / (v + v0);
  return {location, std::sqrt(variance)};
}

CondFiducial::CondFiducial(const Scenario& s, const IntervalHypothesis& hyp,
                           Region region, const GpdSpec& gpd)
    : region_(region), hyp_(hyp), tau_(region == Region::inside ? gpd.tau : 0.0) {
  hyp_.validate();
  const LocationScale ls = weighted_location_scale(s, gpd);
  location_ = ls.location;
  scale_ = ls.scale;
  if (is_point_mass()) return;

  double mass;
  if (region_ == Region::outside) {
    if (hyp_.is_point()) {
      mass = scale_;
    } else {
      const double lower = std_normal_cdf((hyp_.theta_l - location_) / scale_);
      const double upper = std_normal_cdf((location_ - hyp_.theta_u) / scale_);
      mass = scale_ * (lower + upper);
    }
  } else {
    const detail::Feature ft[] = {{location_, scale_}};
    mass = detail::integrate_span([this](double t) { return kernel(t); },
                                  hyp_.theta_l, hyp_.theta_u, ft)
               .value;
  }
  if (!(mass > 0.0)) {
    throw NumericalError("cond_fiducial: region carries no fiducial mass");
  }
  normalizer_ = 1.0 / mass;
}

double CondFiducial::kernel(double theta) const {
  const bool inside = hyp_.contains(theta);
  if (region_ == Region::inside) {
    if (!inside) return 0.0;
    const double bump =
        hyp_.is_point() ? 0.0
                        : beta_bump_density(theta, hyp_.theta_l, hyp_.theta_u);
    return std_normal_pdf((theta - location_) / scale_) * (1.0 + tau_ * bump);
  }
  if (inside && !hyp_.is_point()) return 0.0;
  return std_normal_pdf((theta - location_) / scale_);
}

double CondFiducial::pdf(double theta) const {
  if (is_point_mass()) {
    throw ValidationError("CondFiducial::pdf: distribution is a point mass");
  }
  return normalizer_ * kernel(theta);
}

}  // namespace fidbayes
