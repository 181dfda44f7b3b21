#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "hitloc/ndfhl.hpp"

namespace hitloc {

enum class EntropyMethod {
  quadrature,
  monte_carlo,
  closed_form_d3,
  bound_lower,
  bound_upper,
  closed_form_cauchy,
};

std::string_view method_name(EntropyMethod method);

/// A differential entropy in nats. `error` is an absolute error estimate:
/// the quadrature estimate plus truncation bound, the standard error for
/// Monte Carlo, 0 for closed forms.
struct EntropyEstimate {
  double value = 0.0;
  EntropyMethod method = EntropyMethod::quadrature;
  double error = 0.0;
  NdfhlParams params;
};

/// -S_{p-1} int_0^inf r^{p-1} f log f dr. For u > 0 the range is cut at a
/// radius where the exponential tail envelope bounds the remainder by tol/10;
/// u == 0 integrates the Cauchy branch in r = lambda tan(theta).
EntropyEstimate entropy_quadrature(const NdfhlParams& params, double tol = 1e-8);

/// Plug-in estimate -mean log f(N_i) over n_samples seeded draws (u > 0,
/// n_samples >= 10^4).
EntropyEstimate entropy_mc(const NdfhlParams& params, std::size_t n_samples, std::uint64_t seed);

/// Closed form for d = 3 in terms of exponential integrals (u > 0).
EntropyEstimate entropy_closed_form_d3(double lambda, double u);

/// h(N | T) = (p/2) log(2 pi e) + (p/2) E[log T].
EntropyEstimate entropy_lower(const NdfhlParams& params, double tol = 1e-11);

/// Gaussian entropy at matched covariance, (p/2) log(2 pi e lambda / u).
EntropyEstimate entropy_upper(const NdfhlParams& params);

/// entropy_upper - entropy_lower = (p/2) (log E[T] - E[log T]) >= 0.
double jensen_gap(const NdfhlParams& params, double tol = 1e-11);

/// I(N; T) = h(N) - h(N | T), clamped at 0.
double mutual_info_TN(const NdfhlParams& params, double tol = 1e-8);

/// Best available h(N): the closed form for d = 3, quadrature otherwise,
/// g(p) at u == 0.
EntropyEstimate noise_entropy(const NdfhlParams& params, double tol = 1e-8);

}  // namespace hitloc
