#include "fidbayes/fiducial_bayes.hpp"

#include <array>
#include <cmath>
#include <string>

#include "fidbayes/errors.hpp"
#include "fidbayes/numerics.hpp"
#include "region_quad.hpp"

namespace fidbayes {

namespace {

std::array<detail::Feature, 2> features(const Scenario& s,
                                        const LocationScale& ls) {
  return {detail::Feature{s.xbar(), s.se()},
          detail::Feature{ls.location, ls.scale}};
}

}  // namespace

FidBayesConfig FidBayesConfig::normal(const IntervalHypothesis& hyp,
                                      double theta0, double sigma0) {
  FidBayesConfig cfg{hyp, GpdSpec::normal(theta0, sigma0),
                     GpdSpec::normal(theta0, sigma0), TauRule::continuity};
  cfg.validate();
  return cfg;
}

FidBayesConfig FidBayesConfig::flat(const IntervalHypothesis& hyp) {
  FidBayesConfig cfg{hyp, GpdSpec::flat(), GpdSpec::flat(),
                     TauRule::continuity};
  cfg.validate();
  return cfg;
}

void FidBayesConfig::validate() const {
  hyp.validate();
  gpd_in.validate();
  gpd_out.validate();
}

double expected_likelihood_in(const Scenario& s, const CondFiducial& cf_in) {
  if (cf_in.region() != Region::inside) {
    throw ValidationError("expected_likelihood_in: needs the inside density");
  }
  if (cf_in.is_point_mass()) return likelihood_height(s, cf_in.point());
  const auto ft = features(s, {cf_in.location(), cf_in.scale()});
  return detail::integrate_span(
             [&](double t) { return likelihood_height(s, t) * cf_in.pdf(t); },
             cf_in.hyp().theta_l, cf_in.hyp().theta_u, ft)
      .value;
}

double expected_likelihood_out(const Scenario& s, const CondFiducial& cf_out) {
  if (cf_out.region() != Region::outside) {
    throw ValidationError("expected_likelihood_out: needs the outside density");
  }
  const auto ft = features(s, {cf_out.location(), cf_out.scale()});
  auto integrand = [&](double t) {
    return likelihood_height(s, t) * cf_out.pdf(t);
  };
  const IntervalHypothesis& hyp = cf_out.hyp();
  if (hyp.is_point()) return detail::integrate_line(integrand, ft, {}).value;
  return detail::integrate_complement(integrand, hyp.theta_l, hyp.theta_u, ft)
      .value;
}

double known_values_prob(double lam, double g_a, double g_b) {
  if (!(lam >= 0.0 && lam <= 1.0)) {
    throw ValidationError("known_values_prob: lambda must lie in [0, 1]");
  }
  if (!(g_a >= 0.0) || !(g_b >= 0.0)) {
    throw ValidationError("known_values_prob: likelihoods must be >= 0");
  }
  const double a = lam * g_a;
  const double denom = a + (1.0 - lam) * g_b;
  if (!(denom > 0.0)) {
    throw ValidationError("known_values_prob: both weighted likelihoods are 0");
  }
  return a / denom;
}

double solve_tau_continuity(const Scenario& s, const FidBayesConfig& cfg) {
  cfg.validate();
  const IntervalHypothesis& hyp = cfg.hyp;
  if (hyp.is_point()) {
    throw ValidationError(
        "solve_tau_continuity: a point null has no continuous solution");
  }
  const double lo = hyp.theta_l;
  const double hi = hyp.theta_u;
  const LocationScale ls = weighted_location_scale(s, cfg.gpd_in);
  const auto ft = features(s, ls);
  auto kern = [&](double t) { return std_normal_pdf((t - ls.location) / ls.scale); };
  auto bump = [&](double t) { return beta_bump_density(t, lo, hi); };
  auto g = [&](double t) { return likelihood_height(s, t); };

  // Inside pieces, linear in tau: mass A + tau B, likelihood mass Ag + tau Bg.
  const double a = detail::integrate_span(kern, lo, hi, ft).value;
  const double b =
      detail::integrate_span([&](double t) { return kern(t) * bump(t); }, lo,
                             hi, ft).value;
  const double ag =
      detail::integrate_span([&](double t) { return g(t) * kern(t); }, lo, hi,
                             ft).value;
  const double bg = detail::integrate_span(
                        [&](double t) { return g(t) * kern(t) * bump(t); }, lo,
                        hi, ft).value;

  const CondFiducial out(s, hyp, Region::outside, cfg.gpd_out);
  const double c5 = out.normalizer();
  const double e_out = expected_likelihood_out(s, out);
  // C_out P_out, up to the shared 1 / (lambda E_in + (1 - lambda) E_out).
  const double target = (1.0 - hyp.lam) * c5 * e_out;
  if (!(target > 0.0) || !(a > 0.0)) {
    throw NumericalError("solve_tau_continuity: degenerate fiducial masses");
  }

  // Relative mismatch of the two boundary heights.
  auto residual = [&](double tau) {
    const double mass = a + tau * b;
    return hyp.lam * (ag + tau * bg) / (mass * mass) / target - 1.0;
  };

  double prev_tau = 0.0;
  double prev_r = residual(prev_tau);
  if (prev_r == 0.0) return 0.0;
  for (double tau = 1.0; tau <= 1073741824.0; tau *= 2.0) {
    const double r = residual(tau);
    if (r == 0.0) return tau;
    if ((r > 0.0) != (prev_r > 0.0)) {
      const double root =
          find_root(residual, {prev_tau, tau}, 1e-14 * std::max(1.0, tau));
      if (std::fabs(residual(root)) > 1e-9) {
        throw NumericalError("solve_tau_continuity: residual not reduced");
      }
      return root;
    }
    prev_tau = tau;
    prev_r = r;
  }
  throw ContinuityError(
      "no tau >= 0 makes the post-data density continuous (lambda = " +
      std::to_string(hyp.lam) + " is too small for this interval and data)");
}

FidBayesResult fiducial_bayes(const Scenario& s, const FidBayesConfig& cfg) {
  cfg.validate();
  const IntervalHypothesis& hyp = cfg.hyp;
  GpdSpec gpd_in = cfg.gpd_in;
  if (!hyp.is_point() && cfg.tau_rule == TauRule::continuity) {
    gpd_in.tau = solve_tau_continuity(s, cfg);
  }
  const CondFiducial inside(s, hyp, Region::inside, gpd_in);
  const CondFiducial outside(s, hyp, Region::outside, cfg.gpd_out);
  const double e_in = expected_likelihood_in(s, inside);
  const double e_out = expected_likelihood_out(s, outside);
  const double p_in = known_values_prob(hyp.lam, e_in, e_out);
  const double p_out = 1.0 - p_in;

  PostData pd;
  pd.method = Method::fiducial_bayes;
  pd.p_in = p_in;
  pd.p_out = p_out;
  pd.spike_location = hyp.theta_l;
  pd.spike_mass = hyp.is_point() ? p_in : 0.0;
  pd.density = [inside, outside, p_in, p_out](double t) {
    if (inside.is_point_mass()) return outside.pdf(t) * p_out;
    return inside.hyp().contains(t) ? inside.pdf(t) * p_in
                                    : outside.pdf(t) * p_out;
  };
  pd.constants = {{"E_in", e_in},
                  {"E_out", e_out},
                  {"tau", gpd_in.tau},
                  {"theta1", outside.location()},
                  {"sigma1", outside.scale()},
                  {"C_in", inside.normalizer()},
                  {"C_out", outside.normalizer()}};
  return {pd, gpd_in.tau, inside, outside, e_in, e_out};
}

double fb_postdata_pdf(const Scenario& s, const FidBayesConfig& cfg,
                       double theta) {
  return fiducial_bayes(s, cfg).post.pdf(theta);
}

double fb_limit_sigma0(const Scenario& s, const IntervalHypothesis& hyp) {
  return fiducial_bayes(s, FidBayesConfig::flat(hyp)).post.p_in;
}

double fb_limit_n(const LindleyFamily& family, const IntervalHypothesis& hyp) {
  hyp.validate();
  if (hyp.is_point() && hyp.theta_l == 0.0) {
    const double height = std_normal_pdf(family.z());
    return known_values_prob(hyp.lam, height, kInvTwoSqrtPi);
  }
  if (hyp.theta_l < 0.0 && hyp.theta_u > 0.0) return 1.0;
  throw ValidationError(
      "fb_limit_n: supported for a point null at 0 or an interval with 0 "
      "in its interior");
}

double fb_limits(const LimitQuery& q) {
  switch (q.kind) {
    case LimitKind::sigma0_to_infinity:
      if (q.scenario == nullptr) {
        throw ValidationError("fb_limits: sigma0 limit needs a scenario");
      }
      return fb_limit_sigma0(*q.scenario, q.hyp);
    case LimitKind::n_to_infinity:
      if (q.family == nullptr) {
        throw ValidationError("fb_limits: n limit needs a Lindley family");
      }
      return fb_limit_n(*q.family, q.hyp);
  }
  throw ValidationError("fb_limits: unknown limit");
}

}  // namespace fidbayes
