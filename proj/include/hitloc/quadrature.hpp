#pragma once

#include <functional>
#include <span>

namespace hitloc {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  int max_intervals = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int evaluations = 0;
  int intervals = 0;
};

using Integrand = std::function<double(double)>;

/// Globally adaptive 15-point Gauss-Kronrod on [a, b]. The interval with the
/// largest error estimate is bisected until the summed estimate meets
/// max(abs_tol, rel_tol * |value|). Throws ConvergenceError when
/// max_intervals is reached first.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureOptions& opts = {});

/// Same, seeded with the panels between consecutive breakpoints (sorted,
/// at least two entries).
QuadratureResult integrate(const Integrand& f, std::span<const double> breakpoints,
                           const QuadratureOptions& opts = {});

/// int_a^inf f via x = a + scale * s / (1 - s), s in [0, 1).
QuadratureResult integrate_upper_tail(const Integrand& f, double a, double scale, const QuadratureOptions& opts = {});

/// int_{-inf}^b f via x = b - scale * s / (1 - s).
QuadratureResult integrate_lower_tail(const Integrand& f, double b, double scale, const QuadratureOptions& opts = {});

}  // namespace hitloc
