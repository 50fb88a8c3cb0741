#pragma once

#include <string>
#include <vector>

#include "fidbayes/post_data.hpp"

namespace fidbayes {

enum class Axis { sigma0, n };

/// One of the five reference sweeps. Tables 1-3 vary the slab / GPD scale
/// sigma0 with se = 1; tables 4-5 vary n with xbar on the 0.995 quantile of
/// its null sampling distribution. The last axis value is +infinity and is
/// filled from the analytic limits.
struct TableSpec {
  int id = 0;
  std::string title;
  Axis axis = Axis::sigma0;
  double lam = 0.4;
  double theta0 = 0.0;
  double kappa = 0.2;

  // Tables 1-3.
  double se = 1.0;
  double xbar = 0.0;

  // Tables 4-5.
  double sigma0 = 1.0;
  double sigma = 4.0;
  double alpha = 0.01;

  std::vector<double> axis_values;
  std::vector<double> epsilons;

  /// Places xbar on z standard errors (table 1) or moves alpha so that
  /// Phi^{-1}(1 - alpha/2) = z (tables 4-5). Tables 2-3 fix xbar directly and
  /// are left alone. z = 2.576 mimics a rounded quantile.
  void set_z(double z);
};

/// Throws ValidationError unless 1 <= id <= 5.
TableSpec table_spec(int id);

struct CellResult {
  Method method;
  double epsilon;
  double axis_value;
  double p_in;
  double quad_error;
};

/// Every cell: pure Bayesian and fiducial-Bayes rows for each epsilon, then
/// the kappa mixture row at epsilon = 0, in row-major order.
std::vector<CellResult> run_table(const TableSpec& spec);
std::vector<CellResult> run_table(int id);

/// Four-decimal rendering used for the reference tables.
std::string format_p4(double p);

/// CSV: method,epsilon,<sigma0|n>,p_in_4dp,p_in,quad_error with LF endings.
std::string table_csv(const TableSpec& spec,
                      const std::vector<CellResult>& cells);

}  // namespace fidbayes
