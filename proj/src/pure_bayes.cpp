#include "fidbayes/pure_bayes.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fidbayes/errors.hpp"
#include "fidbayes/numerics.hpp"
#include "region_quad.hpp"

namespace fidbayes {

namespace {

std::array<detail::Feature, 2> features(const SpikeSlabPrior& prior,
                                        const Scenario& s) {
  return {detail::Feature{s.xbar(), s.se()},
          detail::Feature{prior.theta0(), prior.sigma0()}};
}

struct Marginals {
  double in;
  double out;
  double error;
};

// Marginal likelihoods under the inside and outside conditional priors.
Marginals marginals(const SpikeSlabPrior& prior, const Scenario& s) {
  const IntervalHypothesis& hyp = prior.hyp();
  const auto ft = features(prior, s);
  auto g = [&s](double t) { return likelihood_height(s, t); };

  if (hyp.is_point()) {
    const QuadResult out = detail::integrate_line(
        [&](double t) { return g(t) * prior.conditional_pdf(t, Region::outside); },
        ft, {});
    return {g(hyp.theta_l), out.value, out.abs_error};
  }
  const QuadResult in = detail::integrate_span(
      [&](double t) { return g(t) * prior.bumped_kernel(t); }, hyp.theta_l,
      hyp.theta_u, ft);
  const QuadResult out = detail::integrate_complement(
      [&](double t) { return g(t) * prior.slab_kernel(t); }, hyp.theta_l,
      hyp.theta_u, ft);
  const double c1 = prior.normalizer();
  return {c1 * in.value / hyp.lam, c1 * out.value / (1.0 - hyp.lam),
          c1 * (in.abs_error + out.abs_error)};
}

}  // namespace

PostData posterior(const SpikeSlabPrior& prior, const Scenario& s) {
  const IntervalHypothesis& hyp = prior.hyp();
  const Marginals m = marginals(prior, s);
  const double a = hyp.lam * m.in;
  const double b = (1.0 - hyp.lam) * m.out;
  const double evidence = a + b;
  if (!(evidence > 0.0)) {
    throw NumericalError("posterior: marginal likelihood underflowed");
  }
  const double c0 = 1.0 / evidence;

  PostData pd;
  pd.method = Method::pure_bayes;
  pd.p_in = a / evidence;
  pd.p_out = b / evidence;
  pd.spike_location = hyp.theta_l;
  pd.spike_mass = hyp.is_point() ? pd.p_in : 0.0;
  pd.density = [prior, s, c0](double t) {
    return c0 * likelihood_height(s, t) * prior.pdf(t);
  };
  pd.constants = {{"m_in", m.in}, {"m_out", m.out}, {"C0", c0},
                  {"C1", prior.normalizer()}, {"tau", prior.tau()}};
  pd.quad_error = m.error * c0;
  return pd;
}

double posterior_pdf(const SpikeSlabPrior& prior, const Scenario& s,
                     double theta) {
  return posterior(prior, s).pdf(theta);
}

double prob_in_by_density(const SpikeSlabPrior& prior, const Scenario& s) {
  const IntervalHypothesis& hyp = prior.hyp();
  const auto ft = features(prior, s);
  auto unnormalized = [&](double t) {
    return likelihood_height(s, t) * prior.pdf(t);
  };
  const std::array<double, 2> edges{hyp.theta_l, hyp.theta_u};
  const double spike = prior.spike_mass() * likelihood_height(s, hyp.theta_l);
  const double total = detail::integrate_line(unnormalized, ft, edges).value + spike;
  if (hyp.is_point()) return spike / total;
  const double inside =
      detail::integrate_span(unnormalized, hyp.theta_l, hyp.theta_u, ft).value;
  return inside / total;
}

double slab_marginal_closed_form(double theta0, double sigma0,
                                 const Scenario& s) {
  return normal_pdf(s.xbar(), theta0, std::hypot(s.se(), sigma0));
}

double slab_marginal(double theta0, double sigma0, const Scenario& s) {
  const std::array<detail::Feature, 2> ft{detail::Feature{s.xbar(), s.se()},
                                          detail::Feature{theta0, sigma0}};
  return detail::integrate_line(
             [&](double t) {
               return likelihood_height(s, t) * normal_pdf(t, theta0, sigma0);
             },
             ft, {})
      .value;
}

double incompatible_double_bayes_prob(const SpikeSlabPrior& prior,
                                      const Scenario& s) {
  const IntervalHypothesis& hyp = prior.hyp();
  const auto ft0 = features(prior, s);
  const std::array<detail::Feature, 3> ft{
      ft0[0], ft0[1], detail::Feature{s.xbar(), s.se() / std::numbers::sqrt2}};
  auto g = [&s](double t) { return likelihood_height(s, t); };

  // E[g] under the region-conditioned posterior: int g^2 pi / int g pi.
  double e_a;
  if (hyp.is_point()) {
    e_a = g(hyp.theta_l);
  } else {
    const double num = detail::integrate_span(
        [&](double t) { return g(t) * g(t) * prior.bumped_kernel(t); },
        hyp.theta_l, hyp.theta_u, ft).value;
    const double den = detail::integrate_span(
        [&](double t) { return g(t) * prior.bumped_kernel(t); }, hyp.theta_l,
        hyp.theta_u, ft).value;
    e_a = num / den;
  }
  const double num_b = detail::integrate_complement(
      [&](double t) { return g(t) * g(t) * prior.slab_kernel(t); },
      hyp.theta_l, hyp.theta_u, ft).value;
  const double den_b = detail::integrate_complement(
      [&](double t) { return g(t) * prior.slab_kernel(t); }, hyp.theta_l,
      hyp.theta_u, ft).value;
  const double e_b = num_b / den_b;

  const double a = hyp.lam * e_a;
  return a / (a + (1.0 - hyp.lam) * e_b);
}

}  // namespace fidbayes
