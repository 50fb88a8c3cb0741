#include "fidbayes/tables.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "fidbayes/errors.hpp"
#include "fidbayes/fiducial_bayes.hpp"
#include "fidbayes/mixture.hpp"
#include "fidbayes/numerics.hpp"
#include "fidbayes/prior.hpp"
#include "fidbayes/pure_bayes.hpp"

namespace fidbayes {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Cell {
  double p_in;
  double quad_error;
};

// Scenario and slab/GPD scale for one column.
struct Column {
  Scenario s;
  double sigma0;
};

Column column(const TableSpec& t, double v) {
  if (t.axis == Axis::sigma0) {
    return {Scenario::from_standard_error(t.se, t.xbar), v};
  }
  return {LindleyFamily{t.alpha, t.sigma}.at(v), t.sigma0};
}

Cell pure_cell(const TableSpec& t, double eps, double v) {
  if (std::isinf(v)) return {pure_bayes_limit_prob(), 0.0};
  const Column c = column(t, v);
  const SpikeSlabPrior prior(IntervalHypothesis::symmetric(eps, t.lam),
                             t.theta0, c.sigma0);
  const PostData pd = posterior(prior, c.s);
  return {pd.p_in, pd.quad_error};
}

Cell fb_cell(const TableSpec& t, double eps, double v) {
  const auto hyp = IntervalHypothesis::symmetric(eps, t.lam);
  if (std::isinf(v)) {
    if (t.axis == Axis::sigma0) {
      return {fb_limit_sigma0(Scenario::from_standard_error(t.se, t.xbar), hyp),
              0.0};
    }
    return {fb_limit_n(LindleyFamily{t.alpha, t.sigma}, hyp), 0.0};
  }
  const Column c = column(t, v);
  const PostData pd =
      fiducial_bayes(c.s, FidBayesConfig::normal(hyp, t.theta0, c.sigma0)).post;
  return {pd.p_in, pd.quad_error};
}

Cell mixture_cell(const TableSpec& t, double v) {
  if (std::isinf(v)) {
    return {mix(t.kappa, pure_cell(t, 0.0, v).p_in, fb_cell(t, 0.0, v).p_in),
            0.0};
  }
  const auto hyp = IntervalHypothesis::symmetric(0.0, t.lam);
  const Column c = column(t, v);
  const MixtureConfig cfg{t.kappa, SpikeSlabPrior(hyp, t.theta0, c.sigma0),
                          FidBayesConfig::normal(hyp, t.theta0, c.sigma0)};
  const PostData pd = mixture(c.s, cfg);
  return {pd.p_in, pd.quad_error};
}

std::string format_g(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_short(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

}  // namespace

TableSpec table_spec(int id) {
  TableSpec t;
  t.id = id;
  const double z995 = std_normal_quantile(0.995);
  switch (id) {
    case 1:
    case 2:
    case 3:
      t.axis = Axis::sigma0;
      t.axis_values = {1, 2, 4, 10, 25, 100, 1000, kInf};
      t.epsilons = {0.0, 0.1, 0.2};
      t.xbar = id == 1 ? z995 : id == 2 ? 0.8326 : 0.0;
      t.title = "Bartlett's paradox, part " + std::to_string(id);
      break;
    case 4:
    case 5:
      t.axis = Axis::n;
      t.axis_values = {1, 4, 10, 20, 50, 200, 1000, 5000, kInf};
      t.epsilons = {0.0, 0.05, 0.1};
      t.theta0 = id == 4 ? 0.0 : 1.5;
      t.sigma0 = id == 4 ? 4.0 : 1.0;
      t.title = "Lindley's paradox, part " + std::to_string(id - 3);
      break;
    default:
      throw ValidationError("table id must be 1..5, got " + std::to_string(id));
  }
  return t;
}

void TableSpec::set_z(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) {
    throw ValidationError("table: z must be positive and finite");
  }
  if (axis == Axis::n) {
    alpha = 2.0 * std_normal_cdf(-z);
  } else if (id == 1) {
    xbar = z * se;
  }
}

std::vector<CellResult> run_table(const TableSpec& spec) {
  std::vector<CellResult> out;
  for (const Method m : {Method::pure_bayes, Method::fiducial_bayes}) {
    for (const double eps : spec.epsilons) {
      for (const double v : spec.axis_values) {
        const Cell c = m == Method::pure_bayes ? pure_cell(spec, eps, v)
                                               : fb_cell(spec, eps, v);
        out.push_back({m, eps, v, c.p_in, c.quad_error});
      }
    }
  }
  for (const double v : spec.axis_values) {
    const Cell c = mixture_cell(spec, v);
    out.push_back({Method::mixture, 0.0, v, c.p_in, c.quad_error});
  }
  return out;
}

std::vector<CellResult> run_table(int id) { return run_table(table_spec(id)); }

std::string format_p4(double p) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", p);
  return buf;
}

std::string table_csv(const TableSpec& spec,
                      const std::vector<CellResult>& cells) {
  std::string out = "method,epsilon,";
  out += spec.axis == Axis::sigma0 ? "sigma0" : "n";
  out += ",p_in_4dp,p_in,quad_error\n";
  for (const CellResult& c : cells) {
    char err[32];
    std::snprintf(err, sizeof err, "%.3e", c.quad_error);
    out += std::string(to_string(c.method)) + ',' + format_short(c.epsilon) +
           ',' + format_short(c.axis_value) + ',' + format_p4(c.p_in) + ',' +
           format_g(c.p_in) + ',' + err + '\n';
  }
  return out;
}

}  // namespace fidbayes
