#include "fidbayes/mixture.hpp"

#include "fidbayes/errors.hpp"
#include "fidbayes/pure_bayes.hpp"

namespace fidbayes {

void MixtureConfig::validate() const {
  if (!(kappa >= 0.0 && kappa <= 1.0)) {
    throw ValidationError("mixture: kappa must lie in [0, 1]");
  }
  fb.validate();
  const IntervalHypothesis& a = prior.hyp();
  const IntervalHypothesis& b = fb.hyp;
  if (a.theta_l != b.theta_l || a.theta_u != b.theta_u || a.lam != b.lam) {
    throw ValidationError(
        "mixture: prior and fiducial-Bayes parts need the same interval and "
        "lambda");
  }
}

double mix(double kappa, double pure_p_in, double fb_p_in) {
  if (!(kappa >= 0.0 && kappa <= 1.0)) {
    throw ValidationError("mix: kappa must lie in [0, 1]");
  }
  return kappa * pure_p_in + (1.0 - kappa) * fb_p_in;
}

PostData mixture(const Scenario& s, const MixtureConfig& cfg) {
  cfg.validate();
  const double k = cfg.kappa;
  PostData bayes = posterior(cfg.prior, s);
  PostData fid = fiducial_bayes(s, cfg.fb).post;

  PostData pd;
  pd.method = Method::mixture;
  pd.p_in = mix(k, bayes.p_in, fid.p_in);
  pd.p_out = mix(k, bayes.p_out, fid.p_out);
  pd.spike_location = bayes.spike_location;
  pd.spike_mass = mix(k, bayes.spike_mass, fid.spike_mass);
  pd.density = [k, b = bayes.density, f = fid.density](double t) {
    return k * b(t) + (1.0 - k) * f(t);
  };
  pd.constants = {{"kappa", k},
                  {"p_in_pure_bayes", bayes.p_in},
                  {"p_in_fiducial_bayes", fid.p_in}};
  pd.quad_error = k * bayes.quad_error + (1.0 - k) * fid.quad_error;
  return pd;
}

double mixture_pdf(const Scenario& s, const MixtureConfig& cfg, double theta) {
  return mixture(s, cfg).pdf(theta);
}

}  // namespace fidbayes
