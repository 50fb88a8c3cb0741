#pragma once

namespace fidbayes {

/// Normal sampling model with known variance, reduced to its sufficient
/// statistic: the sample mean and its standard error sigma / sqrt(n).
class Scenario {
 public:
  /// sigma > 0, n >= 1 (n may be non-integral).
  static Scenario from_sample(double sigma, double n, double xbar);

  /// se > 0; stored as sigma = se, n = 1.
  static Scenario from_standard_error(double se, double xbar);

  double sigma() const noexcept { return sigma_; }
  double n() const noexcept { return n_; }
  double xbar() const noexcept { return xbar_; }
  double se() const noexcept { return se_; }

 private:
  Scenario(double sigma, double n, double xbar);

  double sigma_;
  double n_;
  double xbar_;
  double se_;
};

inline Scenario make_scenario(double sigma, double n, double xbar) {
  return Scenario::from_sample(sigma, n, xbar);
}

inline Scenario make_scenario(double se, double xbar) {
  return Scenario::from_standard_error(se, xbar);
}

/// The null region [theta_l, theta_u] and its prior probability lam.
/// theta_l == theta_u is a point null.
struct IntervalHypothesis {
  double theta_l = 0.0;
  double theta_u = 0.0;
  double lam = 0.5;

  static IntervalHypothesis symmetric(double eps, double lam);
  static IntervalHypothesis interval(double theta_l, double theta_u,
                                     double lam);

  bool is_point() const noexcept { return theta_l == theta_u; }
  bool contains(double theta) const noexcept {
    return theta >= theta_l && theta <= theta_u;
  }
  double width() const noexcept { return theta_u - theta_l; }

  void validate() const;
};

enum class Region { inside, outside };

/// Density of the sample mean at the observed value given theta:
/// phi((xbar - theta) / se) / se.
double likelihood_height(const Scenario& s, double theta);

/// Sample mean placed on the 1 - alpha/2 quantile of its null sampling
/// distribution: Phi^{-1}(1 - alpha/2) * sigma / sqrt(n).
double lindley_xbar(double alpha, double sigma, double n);

/// Scenarios sharing sigma and alpha with xbar following lindley_xbar as n
/// varies.
struct LindleyFamily {
  double alpha = 0.01;
  double sigma = 1.0;

  Scenario at(double n) const;
  /// The fixed standardized statistic Phi^{-1}(1 - alpha/2).
  double z() const;
};

}  // namespace fidbayes
