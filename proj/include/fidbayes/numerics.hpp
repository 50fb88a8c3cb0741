#pragma once

#include <functional>
#include <span>
#include <vector>

namespace fidbayes {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;
inline constexpr double kInvTwoSqrtPi = 0.282094791773878143474039725780;

// ---------------------------------------------------------------------------
// Standard normal special functions
// ---------------------------------------------------------------------------

double std_normal_pdf(double z);

/// Lower-tail probability. Computed from erfc so that both tails keep full
/// relative precision far from the origin.
double std_normal_cdf(double z);

/// Inverse of std_normal_cdf on (0, 1), accurate to a few ulp.
double std_normal_quantile(double p);

/// Density of N(mean, sd^2) at x.
double normal_pdf(double x, double mean, double sd);

/// Beta(4, 4) density rescaled onto [lo, hi]; zero outside, and zero at both
/// endpoints.
double beta_bump_density(double theta, double lo, double hi);

/// Symmetric form on [-eps, eps].
double beta_bump_density(double theta, double eps);

// ---------------------------------------------------------------------------
// Quadrature
// ---------------------------------------------------------------------------

struct QuadSpec {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_subdivisions = 200;

  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int subdivisions = 0;
};

using Integrand = std::function<double(double)>;

/// Adaptive 21-point Gauss-Kronrod integration over [lo, hi]. Either limit
/// may be infinite; infinite ranges are mapped onto a finite interval first.
/// Throws QuadratureError (carrying the partial estimate) if the tolerance
/// is not met within spec.max_subdivisions bisections.
QuadResult integrate(const Integrand& f, double lo, double hi,
                     const QuadSpec& spec = {});

/// Same, over [points.front(), points.back()] with every listed point used
/// as an initial subinterval boundary. Points must be finite and sorted.
QuadResult integrate(const Integrand& f, std::span<const double> points,
                     const QuadSpec& spec = {});

// ---------------------------------------------------------------------------
// Root finding
// ---------------------------------------------------------------------------

struct Bracket {
  double lo;
  double hi;
};

/// Brent's method. Requires a sign change of f over the bracket; throws
/// BracketError otherwise.
double find_root(const std::function<double(double)>& f, Bracket bracket,
                 double tol = 1e-12);

}  // namespace fidbayes
