#include "fidbayes/figures.hpp"

#include <string>

#include "fidbayes/errors.hpp"
#include "fidbayes/fiducial_bayes.hpp"
#include "fidbayes/mixture.hpp"
#include "fidbayes/prior.hpp"
#include "fidbayes/pure_bayes.hpp"

namespace fidbayes {

FigureSpec figure_spec(int id) {
  FigureSpec f;
  f.id = id;
  switch (id) {
    case 1:
      break;
    case 2:
      f.theta0 = 1.5;
      f.sigma0 = 1.0;
      f.with_mixture = false;
      break;
    default:
      throw ValidationError("figure id must be 1 or 2, got " +
                            std::to_string(id));
  }
  return f;
}

PostData figure_density(const FigureSpec& f, Method m) {
  const Scenario s = f.scenario();
  const IntervalHypothesis hyp = f.hypothesis();
  switch (m) {
    case Method::pure_bayes:
      return posterior(SpikeSlabPrior(hyp, f.theta0, f.sigma0), s);
    case Method::fiducial_bayes:
      return fiducial_bayes(s, FidBayesConfig::normal(hyp, f.theta0, f.sigma0))
          .post;
    case Method::mixture:
      return mixture(s, {f.kappa, SpikeSlabPrior(hyp, f.theta0, f.sigma0),
                         FidBayesConfig::normal(hyp, f.theta0, f.sigma0)});
  }
  throw ValidationError("figure_density: unknown method");
}

std::vector<Curve> figure_curves(const FigureSpec& f, const Grid& grid) {
  const std::vector<double> xs = grid.points();
  auto sample = [&](const std::string& name, Stroke stroke, auto&& fn) {
    Curve c{name, xs, {}, stroke};
    c.y.reserve(xs.size());
    for (const double t : xs) c.y.push_back(fn(t));
    return c;
  };
  std::vector<Curve> out;
  const PostData pure = figure_density(f, Method::pure_bayes);
  const PostData fb = figure_density(f, Method::fiducial_bayes);
  out.push_back(sample("pure-bayes", Stroke::long_dash,
                       [&](double t) { return pure.pdf(t); }));
  out.push_back(sample("fiducial-bayes", Stroke::solid,
                       [&](double t) { return fb.pdf(t); }));
  if (f.with_mixture) {
    const PostData mx = figure_density(f, Method::mixture);
    out.push_back(sample("mixture", Stroke::dotted,
                         [&](double t) { return mx.pdf(t); }));
  }
  const Scenario s = f.scenario();
  out.push_back(sample("likelihood", Stroke::short_dash,
                       [&](double t) { return likelihood_height(s, t); }));
  return out;
}

}  // namespace fidbayes
