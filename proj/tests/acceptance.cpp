// One line per acceptance criterion: PASS/FAIL, criterion id, evidence.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "fidbayes/fiducial.hpp"
#include "fidbayes/fiducial_bayes.hpp"
#include "fidbayes/figures.hpp"
#include "fidbayes/mixture.hpp"
#include "fidbayes/prior.hpp"
#include "fidbayes/pure_bayes.hpp"
#include "fidbayes/sensitivity.hpp"
#include "fidbayes/tables.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"

using namespace fidbayes;

namespace {

int failures = 0;

void report(bool ok, const char* id, const std::string& detail) {
  std::printf("%s  %-3s %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Scenario and scale behind a finite table column.
struct Column {
  Scenario s;
  double sigma0;
};

Column column(const TableSpec& t, double v) {
  if (t.axis == Axis::sigma0) return {Scenario::from_standard_error(t.se, t.xbar), v};
  return {LindleyFamily{t.alpha, t.sigma}.at(v), t.sigma0};
}

// Total mass of a post-data distribution by the oracle integrator.
double total_mass(const PostData& pd, const Scenario& s, double eps) {
  const double lo = std::min(s.xbar() - 40 * s.se(), -eps - s.se());
  const double hi = std::max(s.xbar() + 40 * s.se(), eps + s.se());
  std::vector<double> cuts{lo, hi};
  if (eps > 0) cuts = {lo, -eps, eps, hi};
  return oracle::integrate([&](double t) { return pd.pdf(t); }, cuts, 2000) +
         pd.spike_mass;
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  double worst_tight = 0, worst_loose = 0;
  std::string where_tight, where_loose;
  for (int id = 1; id <= 5; ++id) {
    const TableSpec spec = table_spec(id);
    const auto cells = run_table(spec);
    const auto& pub = reference_tables()[id - 1].rows;
    const size_t ncol = spec.axis_values.size();
    for (size_t i = 0; i < cells.size(); ++i) {
      const size_t row = i / ncol, col = i % ncol;
      const CellResult& c = cells[i];
      const double d = std::fabs(c.p_in - pub[row][col]);
      const bool loose = c.method == Method::fiducial_bayes && c.epsilon > 0 &&
                         std::isfinite(c.axis_value);
      const std::string at = "T" + std::to_string(id) + " " +
                             std::string(to_string(c.method)) +
                             fmt(" eps=%g axis=%g", c.epsilon, c.axis_value);
      if (loose && d > worst_loose) worst_loose = d, where_loose = at;
      if (!loose && d > worst_tight) worst_tight = d, where_tight = at;
    }
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  // Printed digits: how many cells agree exactly at 4 decimals, with the
  // full-precision quantile and with z = 2.576.
  int exact_full = 0, exact_rounded = 0, total = 0;
  for (int id = 1; id <= 5; ++id) {
    for (const bool rounded : {false, true}) {
      TableSpec spec = table_spec(id);
      if (rounded) spec.set_z(2.576);
      const auto cells = run_table(spec);
      const auto& pub = reference_tables()[id - 1].rows;
      const size_t ncol = spec.axis_values.size();
      for (size_t i = 0; i < cells.size(); ++i) {
        const bool same = std::fabs(std::stod(format_p4(cells[i].p_in)) -
                                    pub[i / ncol][i % ncol]) < 1e-9;
        (rounded ? exact_rounded : exact_full) += same;
        total += !rounded;
      }
    }
  }
  const bool ok = worst_tight <= 5e-4 && worst_loose <= 2e-3 && secs < 60;
  report(ok, "1",
         "table reproduction: max |diff| " + fmt("%.2e", worst_tight) + " (" +
             where_tight + ", tol 5e-4); eps>0 fiducial-Bayes " +
             fmt("%.2e", worst_loose) + " (" + where_loose + ", tol 2e-3); " +
             fmt("%.2f s", secs) + "; exact at 4 dp: " + std::to_string(exact_full) +
             "/" + std::to_string(total) + " (z = 2.576: " +
             std::to_string(exact_rounded) + ")");
}

void criterion2() {
  const double z = oracle::quantile(0.995);
  const Scenario s = Scenario::from_standard_error(1.0, z);
  const auto hyp = IntervalHypothesis::symmetric(0.0, 0.4);
  std::vector<double> pure;
  for (double s0 : {10.0, 25.0, 100.0, 1000.0}) {
    pure.push_back(posterior(SpikeSlabPrior(hyp, 0.0, s0), s).p_in);
  }
  const bool increasing = std::is_sorted(pure.begin(), pure.end()) &&
                          std::adjacent_find(pure.begin(), pure.end()) == pure.end();
  std::vector<double> fb;
  for (double s0 : {10.0, 25.0, 100.0, 1000.0}) {
    fb.push_back(fiducial_bayes(s, FidBayesConfig::normal(hyp, 0.0, s0)).post.p_in);
  }
  fb.push_back(fb_limit_sigma0(s, hyp));
  const auto [mn, mx] = std::minmax_element(fb.begin(), fb.end());
  const double spread = *mx - *mn;
  report(increasing && pure.back() >= 0.96 && spread < 1e-3, "2",
         fmt("Bartlett: pure p_in increasing over sigma0 10..1000, %.4f at 1000 "
             "(>= 0.96); fiducial-Bayes spread %.2e (< 1e-3)",
             pure.back(), spread));
}

void criterion3() {
  const double lam = 0.4;
  const LindleyFamily fam{0.01, 4.0};
  auto pure_at = [&](double theta0, double sigma0, double n) {
    return posterior(SpikeSlabPrior(IntervalHypothesis::symmetric(0.0, lam), theta0,
                                    sigma0),
                     fam.at(n))
        .p_in;
  };
  // Integer n up to 5000: find the minimum and check the rise after it.
  auto scan = [&](double theta0, double sigma0, int& argmin, double& minval,
                  bool& rises) {
    std::vector<double> p;
    for (int n = 1; n <= 5000; ++n) p.push_back(pure_at(theta0, sigma0, n));
    const auto it = std::min_element(p.begin(), p.end());
    argmin = static_cast<int>(it - p.begin()) + 1;
    minval = *it;
    rises = std::is_sorted(it, p.end());
  };
  int n4, n5;
  double v4, v5;
  bool r4, r5;
  scan(0.0, 4.0, n4, v4, r4);
  scan(1.5, 1.0, n5, v5, r5);

  const auto hyp0 = IntervalHypothesis::symmetric(0.0, lam);
  const double fb200 =
      fiducial_bayes(fam.at(200), FidBayesConfig::normal(hyp0, 0.0, 4.0)).post.p_in;
  const double z = oracle::quantile(0.995);
  const double h = oracle::phi(z);
  const double analytic = lam * h / (lam * h + (1 - lam) / (2 * std::sqrt(M_PI)));
  const double lim = fb_limit_n(fam, hyp0);
  const bool ok = n4 == 6 && std::fabs(v4 - 0.0931) <= 5e-4 && r4 && n5 == 25 &&
                  std::fabs(v5 - 0.0408) <= 5e-4 && r5 &&
                  std::fabs(fb200 - 0.0330) <= 5e-4 &&
                  std::fabs(lim - analytic) <= 1e-15;
  report(ok, "3",
         "Lindley: pure minimum n=" + std::to_string(n4) + fmt(" p=%.5f", v4) +
             " (table-4 setting), n=" + std::to_string(n5) + fmt(" p=%.5f", v5) +
             " (table-5 setting), rising after; fiducial-Bayes at n=200 " +
             fmt("%.5f; limit %.17g vs analytic %.17g", fb200, lim, analytic));
}

void criterion4a() {
  double worst = 0;
  int count = 0;
  for (int id = 1; id <= 5; ++id) {
    const TableSpec t = table_spec(id);
    for (double eps : t.epsilons) {
      const auto hyp = IntervalHypothesis::symmetric(eps, t.lam);
      for (double v : t.axis_values) {
        if (std::isinf(v)) continue;
        const Column c = column(t, v);
        const SpikeSlabPrior prior(hyp, t.theta0, c.sigma0);
        const auto cfg = FidBayesConfig::normal(hyp, t.theta0, c.sigma0);
        for (const PostData& pd :
             {posterior(prior, c.s), fiducial_bayes(c.s, cfg).post,
              mixture(c.s, {t.kappa, prior, cfg})}) {
          worst = std::max(worst, std::fabs(total_mass(pd, c.s, eps) - 1.0));
          ++count;
        }
      }
    }
  }
  report(worst <= 1e-8, "4a",
         "densities integrate to 1: " + std::to_string(count) +
             fmt(" densities, max |mass - 1| %.2e (tol 1e-8)", worst));
}

void criterion4b() {
  double worst = 0;
  for (int id = 1; id <= 5; ++id) {
    const TableSpec t = table_spec(id);
    for (double eps : t.epsilons) {
      for (double v : t.axis_values) {
        if (std::isinf(v)) continue;
        const Column c = column(t, v);
        const SpikeSlabPrior prior(IntervalHypothesis::symmetric(eps, t.lam),
                                   t.theta0, c.sigma0);
        worst = std::max(worst, std::fabs(posterior(prior, c.s).p_in -
                                          prob_in_by_density(prior, c.s)));
      }
    }
  }
  report(worst <= 1e-9, "4b",
         fmt("ratio route vs density-integration route: max |diff| %.2e (tol 1e-9)",
             worst));
}

void criterion4c() {
  double worst = 0;
  for (double se : {0.3, 1.0, 4.0}) {
    for (double xbar : {-2.0, 0.0, 2.576}) {
      const Scenario s = Scenario::from_standard_error(se, xbar);
      for (double beta : {0.5, 0.9, 0.95, 0.99}) {
        const ConfidenceInterval ci = fisher_ci(s, beta);
        const double mass = oracle::big_phi((ci.hi - xbar) / se) -
                            oracle::big_phi((ci.lo - xbar) / se);
        const double lib = fiducial_flat(s).prob(ci.lo, ci.hi);
        worst = std::max({worst, std::fabs(mass - beta), std::fabs(lib - beta)});
      }
    }
  }
  report(worst <= 1e-10, "4c",
         fmt("fiducial mass of the confidence interval equals beta: max |diff| "
             "%.2e (tol 1e-10)",
             worst));
}

// Draws from a conditional fiducial density by rejection.
double sample_cf(const CondFiducial& cf, std::mt19937_64& rng) {
  const IntervalHypothesis& h = cf.hyp();
  if (cf.region() == Region::inside) {
    std::uniform_real_distribution<double> u(h.theta_l, h.theta_u), acc(0.0, 1.0);
    // Envelope: the normal kernel's peak over the interval times the bump's
    // largest factor 1 + tau * 140 / 64 / width.
    const double gap = std::max({0.0, h.theta_l - cf.location(),
                                 cf.location() - h.theta_u}) / cf.scale();
    const double ceiling = oracle::phi(gap) * (1.0 + cf.tau() * 140.0 / 64.0 / h.width());
    while (true) {
      const double t = u(rng);
      if (acc(rng) * ceiling <= cf.kernel(t)) return t;
    }
  }
  std::normal_distribution<double> n(cf.location(), cf.scale());
  while (true) {
    const double t = n(rng);
    if (!h.contains(t)) return t;
  }
}

void criterion4d() {
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  constexpr int kDraws = 1000000;
  double worst_z = 0;
  for (int k = 0; k < 5; ++k) {
    const double se = 0.5 + 1.5 * U(rng);
    const double xbar = -2.0 + 4.0 * U(rng);
    const double eps = 0.05 + 0.45 * U(rng);
    const double theta0 = -1.0 + 2.0 * U(rng);
    const double sigma0 = 0.5 + 9.5 * U(rng);
    const double tau = 5.0 * U(rng);
    const Scenario s = Scenario::from_standard_error(se, xbar);
    const auto hyp = IntervalHypothesis::symmetric(eps, 0.4);
    const CondFiducial in(s, hyp, Region::inside, GpdSpec::normal(theta0, sigma0, tau));
    const CondFiducial out(s, hyp, Region::outside, GpdSpec::normal(theta0, sigma0));
    for (const CondFiducial* cf : {&in, &out}) {
      double sum = 0, sum2 = 0;
      for (int i = 0; i < kDraws; ++i) {
        const double g =
            oracle::phi((xbar - sample_cf(*cf, rng)) / se) / se;
        sum += g;
        sum2 += g * g;
      }
      const double mean = sum / kDraws;
      const double sd = std::sqrt(std::max(0.0, sum2 / kDraws - mean * mean));
      const double expect = cf == &in ? expected_likelihood_in(s, in)
                                      : expected_likelihood_out(s, out);
      worst_z = std::max(worst_z, std::fabs(expect - mean) / (sd / std::sqrt(kDraws)));
    }
  }
  report(worst_z <= 3.0, "4d",
         fmt("Monte Carlo expected likelihoods (5 configs x 2 regions, 1e6 draws): "
             "max |z| %.2f (tol 3)",
             worst_z));
}

void criterion4e() {
  const Scenario s = Scenario::from_standard_error(1.0, oracle::quantile(0.995));
  double smallest = std::numeric_limits<double>::infinity();
  for (double eps : {0.0, 0.1, 0.2}) {
    const SpikeSlabPrior prior(IntervalHypothesis::symmetric(eps, 0.4), 0.0, 1.0);
    smallest = std::min(smallest, std::fabs(incompatible_double_bayes_prob(prior, s) -
                                            posterior(prior, s).p_in));
  }
  report(smallest > 1e-3, "4e",
         fmt("double-Bayes counterexample departs from the posterior by >= %.4f "
             "(need > 1e-3)",
             smallest));
}

void criterion4f() {
  double worst = 0;
  for (int id = 1; id <= 5; ++id) {
    const TableSpec t = table_spec(id);
    const auto cells = run_table(t);
    const size_t ncol = t.axis_values.size(), neps = t.epsilons.size();
    for (size_t col = 0; col < ncol; ++col) {
      const double pure = cells[col].p_in;
      const double fb = cells[neps * ncol + col].p_in;
      const double mx = cells[2 * neps * ncol + col].p_in;
      worst = std::max(worst, std::fabs(mx - (0.2 * pure + 0.8 * fb)));
    }
  }
  report(worst <= 1e-12, "4f",
         fmt("mixture row equals 0.2 pure + 0.8 fiducial-Bayes on every column: "
             "max |diff| %.2e (tol 1e-12)",
             worst));
}

void criterion4g() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  bool ok = true;
  int members = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int size = 1 + static_cast<int>(U(rng) * 10);
    std::vector<double> probs;
    for (int i = 0; i < size; ++i) probs.push_back(0.01 + 0.98 * U(rng));
    const double b = std::exp(-4.0 + 8.0 * U(rng));
    const Bounds bd = binary_posterior_bounds(BinaryPriorClass{probs}, b);
    for (double p : probs) {
      const double post = p * b / (p * b + 1 - p);
      ok = ok && post >= bd.lower - 1e-15 && post <= bd.upper + 1e-15;
      ++members;
    }
  }
  for (int trial = 0; trial < 10; ++trial) {
    const int size = 1 + static_cast<int>(U(rng) * 10);
    const double eps = 0.3 * U(rng);
    const Scenario s = Scenario::from_standard_error(0.5 + U(rng), -2 + 4 * U(rng));
    PriorClass pc;
    for (int i = 0; i < size; ++i) {
      pc.members.emplace_back(IntervalHypothesis::symmetric(eps, 0.2 + 0.6 * U(rng)),
                              -1 + 2 * U(rng), 1.0 + 9.0 * U(rng));
    }
    auto indicator = [eps](double t) { return std::fabs(t) <= eps ? 1.0 : 0.0; };
    const Bounds bd = functional_bounds(pc, s, indicator);
    for (const SpikeSlabPrior& p : pc.members) {
      const double v = posterior(p, s).p_in;
      ok = ok && v >= bd.lower - 1e-9 && v <= bd.upper + 1e-9;
      ++members;
    }
  }
  report(ok, "4g",
         "sensitivity bounds bracket all " + std::to_string(members) +
             " members of 210 randomized classes");
}

void criterion5() {
  const FigureSpec f = figure_spec(1);
  const PostData pure = figure_density(f, Method::pure_bayes);
  const PostData fb = figure_density(f, Method::fiducial_bayes);
  const PostData mx = figure_density(f, Method::mixture);

  double mode = 0, best = -1;
  for (int i = 0; i <= 8000; ++i) {
    const double t = -2.0 + i * 0.001;
    if (fb.pdf(t) > best) best = fb.pdf(t), mode = t;
  }
  const double pure_mass =
      oracle::integrate([&](double t) { return pure.pdf(t); }, {-0.2, 0.2}, 2000);
  double jump = 0;
  for (double b : {-0.2, 0.2}) {
    const double inside = fb.pdf(b);
    const double outside = fb.pdf(std::nextafter(b, b > 0 ? 1.0 : -1.0));
    jump = std::max(jump, std::fabs(inside - outside) / std::max(inside, outside));
  }
  double mix_dev = 0;
  for (int i = 0; i <= 800; ++i) {
    const double t = -2.0 + i * 0.01;
    mix_dev = std::max(mix_dev, std::fabs(mx.pdf(t) - (0.2 * pure.pdf(t) + 0.8 * fb.pdf(t))));
  }
  const bool ok = std::fabs(mode - f.xbar) <= 0.1 && pure_mass >= 0.19 &&
                  jump < 1e-5 && mix_dev <= 1e-12;
  report(ok, "5",
         fmt("figure 1: fiducial-Bayes mode %.3f (xbar %.3f); pure mass on "
             "[-0.2, 0.2] %.4f (>= 0.19); ",
             mode, f.xbar, pure_mass) +
             fmt("relative jump at +-0.2 %.2e (< 1e-5); mixture deviation %.2e "
                 "(<= 1e-12)",
                 jump, mix_dev));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4a();
  criterion4b();
  criterion4c();
  criterion4d();
  criterion4e();
  criterion4f();
  criterion4g();
  criterion5();
  std::printf("%d failing criteria\n", failures);
  return failures == 0 ? 0 : 1;
}
