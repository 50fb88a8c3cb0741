#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fidbayes/density_csv.hpp"
#include "fidbayes/errors.hpp"
#include "fidbayes/fiducial_bayes.hpp"
#include "fidbayes/figures.hpp"
#include "fidbayes/mixture.hpp"
#include "fidbayes/prior.hpp"
#include "fidbayes/pure_bayes.hpp"
#include "fidbayes/sensitivity.hpp"
#include "fidbayes/svg.hpp"
#include "fidbayes/tables.hpp"

using namespace fidbayes;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw NumericalError("write to '" + path + "' failed");
}

double parse_real(const std::string& text, const char* what) {
  if (text == "inf" || text == "Inf" || text == "infinity") {
    return std::numeric_limits<double>::infinity();
  }
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ValidationError(std::string(what) + ": not a number: '" + text + "'");
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct MethodArgs {
  std::string method = "fiducial-bayes";
  double epsilon = 0.0;
  double lambda = 0.4;
  double theta0 = 0.0;
  std::string sigma0 = "1";
  double kappa = 0.2;
  double se = 1.0;
  double xbar = 0.0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--method", method,
                    "pure-bayes | fiducial-bayes | mixture")
        ->required();
    cmd->add_option("--epsilon", epsilon, "Half-width of the null interval")
        ->required();
    cmd->add_option("--lambda", lambda, "Pre-data probability of the interval")
        ->required();
    cmd->add_option("--theta0", theta0, "Slab / GPD centre")->required();
    cmd->add_option("--sigma0", sigma0,
                    "Slab / GPD scale ('inf' gives flat GPDs, fiducial-bayes "
                    "only)")
        ->required();
    cmd->add_option("--kappa", kappa, "Mixture weight of the Bayesian answer");
    cmd->add_option("--se", se, "Standard error of the sample mean")->required();
    cmd->add_option("--xbar", xbar, "Observed sample mean")->required();
  }

  PostData evaluate() const {
    const Method m = parse_method(method);
    const double s0 = parse_real(sigma0, "--sigma0");
    const Scenario s = Scenario::from_standard_error(se, xbar);
    const auto hyp = IntervalHypothesis::symmetric(epsilon, lambda);
    if (std::isinf(s0) && s0 > 0) {
      if (m != Method::fiducial_bayes) {
        throw ValidationError("--sigma0 inf is only meaningful for "
                              "fiducial-bayes");
      }
      return fiducial_bayes(s, FidBayesConfig::flat(hyp)).post;
    }
    switch (m) {
      case Method::pure_bayes:
        return posterior(SpikeSlabPrior(hyp, theta0, s0), s);
      case Method::fiducial_bayes:
        return fiducial_bayes(s, FidBayesConfig::normal(hyp, theta0, s0)).post;
      case Method::mixture:
        return mixture(s, {kappa, SpikeSlabPrior(hyp, theta0, s0),
                           FidBayesConfig::normal(hyp, theta0, s0)});
    }
    throw ValidationError("unknown method");
  }
};

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item, "--priors"));
  if (out.empty()) throw ValidationError("--priors: empty list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interval-null inference: pure Bayesian, fiducial-Bayes and "
               "mixture post-data probabilities"};
  app.require_subcommand(1);

  int table_id = 0;
  std::string out_path;
  auto* table = app.add_subcommand("table", "Regenerate one of the five tables as CSV");
  table->add_option("--id", table_id, "Table number 1..5")->required();
  table->add_option("--out", out_path, "Output file (default stdout)");
  double table_z = 0.0;
  table->add_option("--z", table_z,
                    "Override Phi^{-1}(0.995) in tables 1, 4 and 5 (e.g. 2.576)");

  MethodArgs margs;
  std::string grid_text;
  auto* density = app.add_subcommand("density", "Post-data density on a grid as CSV");
  margs.add_to(density);
  density->add_option("--grid", grid_text, "LO:HI:COUNT")->required();
  density->add_option("--out", out_path, "Output file (default stdout)");

  auto* prob = app.add_subcommand("prob", "Post-data probability of the interval");
  margs.add_to(prob);

  double lik_se = 1.0, lik_xbar = 0.0;
  auto* lik = app.add_subcommand("likelihood", "Likelihood of theta on a grid as CSV");
  lik->add_option("--se", lik_se, "Standard error of the sample mean")->required();
  lik->add_option("--xbar", lik_xbar, "Observed sample mean")->required();
  lik->add_option("--grid", grid_text, "LO:HI:COUNT")->required();
  lik->add_option("--out", out_path, "Output file (default stdout)");

  std::vector<std::string> svg_in, svg_names;
  auto* svg = app.add_subcommand("svg", "Render CSV curves as an SVG line chart");
  svg->add_option("--in", svg_in, "Input CSV files (theta,value columns)")->required();
  svg->add_option("--name", svg_names, "Legend names, one per input (default: file stem)");
  svg->add_option("--out", out_path, "Output SVG file")->required();

  int figure_id = 0;
  std::string csv_dir;
  auto* figure = app.add_subcommand("figure", "Render one of the two density figures");
  figure->add_option("--id", figure_id, "Figure number 1..2")->required();
  figure->add_option("--grid", grid_text, "LO:HI:COUNT (default -2:6:801)");
  figure->add_option("--out", out_path, "Output SVG file")->required();
  figure->add_option("--csv-dir", csv_dir, "Also write one CSV per curve here");

  std::string priors;
  double bayes_factor = 1.0;
  auto* bounds = app.add_subcommand("bounds",
                                    "Posterior bounds over a class of prior probabilities");
  bounds->add_option("--priors", priors, "Comma-separated prior probabilities")->required();
  bounds->add_option("--bayes-factor", bayes_factor, "Bayes factor g(x|H)/g(x|not H)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  try {
    if (*table) {
      TableSpec spec = table_spec(table_id);
      if (table->count("--z") > 0) spec.set_z(table_z);
      emit(table_csv(spec, run_table(spec)), out_path);
    } else if (*density) {
      emit(density_csv(margs.evaluate(), parse_grid(grid_text)), out_path);
    } else if (*prob) {
      const PostData pd = margs.evaluate();
      std::string text = "name,value\np_in," + fmt(pd.p_in) + "\np_out," +
                         fmt(pd.p_out) + "\nspike_mass," + fmt(pd.spike_mass) +
                         "\nquad_error," + fmt(pd.quad_error) + '\n';
      for (const auto& [name, value] : pd.constants) {
        text += name + ',' + fmt(value) + '\n';
      }
      emit(text, "");
    } else if (*lik) {
      const Scenario s = Scenario::from_standard_error(lik_se, lik_xbar);
      emit(curve_csv([&](double t) { return likelihood_height(s, t); },
                     parse_grid(grid_text), "likelihood"),
           out_path);
    } else if (*svg) {
      if (!svg_names.empty() && svg_names.size() != svg_in.size()) {
        throw ValidationError("--name must be given once per --in file");
      }
      std::vector<Curve> curves;
      for (size_t i = 0; i < svg_in.size(); ++i) {
        std::ifstream in(svg_in[i], std::ios::binary);
        if (!in) throw ValidationError("cannot read '" + svg_in[i] + "'");
        const std::string name = svg_names.empty()
                                     ? std::filesystem::path(svg_in[i]).stem().string()
                                     : svg_names[i];
        curves.push_back(read_curve_csv(in, name));
      }
      emit(render_svg(curves), out_path);
    } else if (*figure) {
      const FigureSpec f = figure_spec(figure_id);
      const Grid grid = grid_text.empty() ? default_figure_grid() : parse_grid(grid_text);
      const std::vector<Curve> curves = figure_curves(f, grid);
      if (!csv_dir.empty()) {
        std::filesystem::create_directories(csv_dir);
        for (const Curve& c : curves) {
          std::string text = "theta,density\n";
          for (size_t i = 0; i < c.x.size(); ++i) {
            text += fmt(c.x[i]) + ',' + fmt(c.y[i]) + '\n';
          }
          emit(text, (std::filesystem::path(csv_dir) /
                      ("figure" + std::to_string(f.id) + "_" + c.name + ".csv"))
                         .string());
        }
      }
      emit(render_svg(curves), out_path);
    } else if (*bounds) {
      const Bounds b =
          binary_posterior_bounds(BinaryPriorClass{parse_list(priors)}, bayes_factor);
      emit("lower,upper\n" + fmt(b.lower) + ',' + fmt(b.upper) + '\n', "");
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
  return 0;
}
