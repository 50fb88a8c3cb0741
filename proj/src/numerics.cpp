#include "fidbayes/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <string>

#include "fidbayes/errors.hpp"

namespace fidbayes {

namespace {

void require_finite(double z, const char* what) {
  if (!std::isfinite(z)) {
    throw ValidationError(std::string(what) + ": argument must be finite");
  }
}

// Wichura's AS241 (PPND16) for the lower tail, p <= 0.5.
double quantile_lower(double p) {
  const double q = p - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    const double num =
        (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
              6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
            1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
          1.3314166789178437745e+2) * r + 3.3871328727963666080e+0);
    const double den =
        (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
              3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
            5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
          4.2313330701600911252e+1) * r + 1.0);
    return q * num / den;
  }
  double r = std::sqrt(-std::log(p));
  double x;
  if (r <= 5.0) {
    r -= 1.6;
    const double num =
        (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
            3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
          4.63033784615654529590e+0) * r + 1.42343711074968357734e+0);
    const double den =
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
          2.05319162663775882187e+0) * r + 1.0);
    x = num / den;
  } else {
    r -= 5.0;
    const double num =
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
          5.46378491116411436990e+0) * r + 6.65790464350110377720e+0);
    const double den =
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
            1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
          5.99832206555887937690e-1) * r + 1.0);
    x = num / den;
  }
  x = -x;

  // One Halley step against the erfc-based cdf.
  const double e = std_normal_cdf(x) - p;
  const double u = e / std_normal_pdf(x);
  return x - u / (1.0 + 0.5 * x * u);
}

// QUADPACK qk21 abscissae (descending, last is the centre) and weights.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208965402700, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for the odd-indexed Kronrod abscissae.
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

Segment gk21(const Integrand& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(centre);
  double kronrod = fc * kWgk[10];
  double gauss = 0.0;
  double abs_sum = std::fabs(kronrod);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    const double f1 = f(centre - dx);
    const double f2 = f(centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    abs_sum += kWgk[j] * (std::fabs(f1) + std::fabs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  const double value = kronrod * half;
  double error = std::fabs((kronrod - gauss) * half);
  const double roundoff =
      50.0 * std::numeric_limits<double>::epsilon() * abs_sum * std::fabs(half);
  error = std::max(error, roundoff);
  if (!std::isfinite(value)) {
    throw NumericalError("integrate: integrand is not finite on [" +
                         std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  return {a, b, value, error};
}

QuadResult adaptive(const Integrand& f, std::span<const double> points,
                    const QuadSpec& spec) {
  std::priority_queue<Segment> heap;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i + 1] == points[i]) continue;
    const Segment s = gk21(f, points[i], points[i + 1]);
    total += s.value;
    total_err += s.error;
    heap.push(s);
  }
  int splits = 0;
  auto tolerance = [&] {
    return std::max(spec.abs_tol, spec.rel_tol * std::fabs(total));
  };
  while (total_err > tolerance()) {
    if (splits >= spec.max_subdivisions) {
      throw QuadratureError("integrate: tolerance not met after " +
                                std::to_string(splits) + " subdivisions",
                            total, total_err);
    }
    const Segment worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Interval cannot be split further in double precision.
      throw QuadratureError("integrate: interval underflow", total, total_err);
    }
    heap.pop();
    const Segment left = gk21(f, worst.a, mid);
    const Segment right = gk21(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++splits;
  }
  // Re-sum to shed accumulated cancellation in the running totals.
  double sum = 0.0;
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {sum, err, splits};
}

}  // namespace

double std_normal_pdf(double z) {
  require_finite(z, "std_normal_pdf");
  return kInvSqrt2Pi * std::exp(-0.5 * z * z);
}

double std_normal_cdf(double z) {
  require_finite(z, "std_normal_cdf");
  return 0.5 * std::erfc(-z * std::numbers::sqrt2 * 0.5);
}

double std_normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw ValidationError("std_normal_quantile: p must lie in (0, 1)");
  }
  if (p == 0.5) return 0.0;
  // 1 - p is exact for p in [0.5, 1).
  return p < 0.5 ? quantile_lower(p) : -quantile_lower(1.0 - p);
}

double normal_pdf(double x, double mean, double sd) {
  return std_normal_pdf((x - mean) / sd) / sd;
}

double beta_bump_density(double theta, double lo, double hi) {
  if (!(hi > lo)) {
    throw ValidationError("beta_bump_density: empty support");
  }
  if (theta <= lo || theta >= hi) return 0.0;
  const double width = hi - lo;
  const double u = (theta - lo) / width;
  const double v = 1.0 - u;
  // 1 / B(4, 4) = 140.
  return 140.0 * u * u * u * v * v * v / width;
}

double beta_bump_density(double theta, double eps) {
  if (!(eps > 0.0)) {
    throw ValidationError("beta_bump_density: half-width must be positive");
  }
  return beta_bump_density(theta, -eps, eps);
}

void QuadSpec::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1) {
    throw ValidationError(
        "QuadSpec: tolerances must be positive and max_subdivisions >= 1");
  }
}

QuadResult integrate(const Integrand& f, double lo, double hi,
                     const QuadSpec& spec) {
  spec.validate();
  if (std::isnan(lo) || std::isnan(hi)) {
    throw ValidationError("integrate: NaN limit");
  }
  if (lo == hi) return {};
  if (lo > hi) {
    QuadResult r = integrate(f, hi, lo, spec);
    r.value = -r.value;
    return r;
  }
  const bool lo_inf = std::isinf(lo);
  const bool hi_inf = std::isinf(hi);
  if (!lo_inf && !hi_inf) {
    const std::array<double, 2> pts{lo, hi};
    return adaptive(f, pts, spec);
  }
  if (lo_inf && hi_inf) {
    // x = t / (1 - t^2), t in (-1, 1)
    auto g = [&f](double t) {
      const double d = 1.0 - t * t;
      return f(t / d) * (1.0 + t * t) / (d * d);
    };
    const std::array<double, 3> pts{-1.0, 0.0, 1.0};
    return adaptive(g, pts, spec);
  }
  // Half line: x = a +/- t / (1 - t), t in [0, 1)
  const double a = lo_inf ? hi : lo;
  const double sign = lo_inf ? -1.0 : 1.0;
  auto g = [&f, a, sign](double t) {
    const double d = 1.0 - t;
    return f(a + sign * t / d) / (d * d);
  };
  const std::array<double, 2> pts{0.0, 1.0};
  return adaptive(g, pts, spec);
}

QuadResult integrate(const Integrand& f, std::span<const double> points,
                     const QuadSpec& spec) {
  spec.validate();
  if (points.size() < 2) {
    throw ValidationError("integrate: need at least two points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i])) {
      throw ValidationError("integrate: breakpoints must be finite");
    }
    if (i > 0 && points[i] < points[i - 1]) {
      throw ValidationError("integrate: breakpoints must be sorted");
    }
  }
  return adaptive(f, points, spec);
}

double find_root(const std::function<double(double)>& f, Bracket bracket,
                 double tol) {
  double a = bracket.lo;
  double b = bracket.hi;
  if (!(a < b)) {
    throw ValidationError("find_root: bracket must satisfy lo < hi");
  }
  double fa = f(a);
  double fb = f(b);
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  if ((fa > 0.0) == (fb > 0.0)) {
    throw BracketError("find_root: no sign change over [" + std::to_string(a) +
                       ", " + std::to_string(b) + "]");
  }

  // Brent (1973), zeroin.
  double c = a;
  double fc = fa;
  double d = b - a;
  double e = d;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 200; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * tol;
    const double m = 0.5 * (c - b);
    if (std::fabs(m) <= tol1 || fb == 0.0) return b;

    if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
      double p;
      double q;
      const double s = fb / fa;
      if (a == c) {
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) {
        q = -q;
      } else {
        p = -p;
      }
      if (2.0 * p < std::min(3.0 * m * q - std::fabs(tol1 * q),
                             std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = d;
      }
    } else {
      d = m;
      e = d;
    }
    a = b;
    fa = fb;
    b += std::fabs(d) > tol1 ? d : (m > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  throw NumericalError("find_root: iteration limit reached");
}

}  // namespace fidbayes
