#pragma once

#include <span>

#include "fidbayes/numerics.hpp"

// Quadrature over the pieces of the real line the inference methods need.
// Every integrand here is a product of Gaussian kernels (times a bounded
// bump), so each factor is described by a centre and scale; those drive both
// the initial breakpoints and the truncation window of +/- 12 scales, beyond
// which a Gaussian factor carries less than 1e-32 of its mass.
namespace fidbayes::detail {

struct Feature {
  double center;
  double scale;
};

inline constexpr double kTailScales = 12.0;

/// Tolerances used by every method integral.
inline constexpr QuadSpec kMethodQuad{1e-15, 1e-12, 5000};

QuadResult integrate_span(const Integrand& f, double lo, double hi,
                          std::span<const Feature> features,
                          const QuadSpec& spec = kMethodQuad);

/// Integral over the real line minus [lo, hi].
QuadResult integrate_complement(const Integrand& f, double lo, double hi,
                                std::span<const Feature> features,
                                const QuadSpec& spec = kMethodQuad);

/// Integral over the real line with extra breakpoints (e.g. discontinuities).
QuadResult integrate_line(const Integrand& f, std::span<const Feature> features,
                          std::span<const double> extra_points,
                          const QuadSpec& spec = kMethodQuad);

}  // namespace fidbayes::detail
