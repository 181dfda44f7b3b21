#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace hitloc {

/// Inverse-Gaussian law of the first-hitting time T: mean nu, shape kappa.
struct IgParams {
  double nu = 1.0;
  double kappa = 1.0;

  /// Throws DomainError unless nu > 0 and kappa > 0 (both finite).
  void validate() const;
  double variance() const { return nu * nu * nu / kappa; }
};

/// Physical drift-diffusion transport. The normalized drift u = mu / sigma2
/// may take either sign; its sign encodes the drift direction.
struct PhysicalTransport {
  double lambda = 1.0;  // boundary separation
  double u = 1.0;       // normalized drift speed, 1/length
  double sigma2 = 1.0;  // diffusion coefficient

  double mu() const { return u * sigma2; }
  void validate() const;
};

/// (nu, kappa) = (lambda / mu, lambda^2 / sigma2). Requires u > 0.
IgParams ig_from_physical(const PhysicalTransport& phys);

/// Density sqrt(kappa / (2 pi t^3)) exp(-kappa (t - nu)^2 / (2 nu^2 t)), t > 0.
double ig_pdf(const IgParams& params, double t);

/// log ig_pdf, finite wherever the density underflows.
double ig_log_pdf(const IgParams& params, double t);

/// The same density written as C t^{-3/2} exp(-kappa t / (2 nu^2) - kappa / (2t))
/// with C = sqrt(kappa / 2 pi) e^{kappa / nu}. Kept as a cross-check of ig_pdf;
/// overflows for kappa / nu beyond ~700.
double ig_pdf_expanded(const IgParams& params, double t);

/// Seeded i.i.d. draws. Throws DomainError for count == 0.
std::vector<double> ig_sample(const IgParams& params, std::size_t count, std::uint64_t seed);

/// E[e^{-sT}] = exp((kappa/nu)(1 - sqrt(1 + 2 nu^2 s / kappa))), s >= 0.
double ig_laplace(const IgParams& params, double s);

/// E[g(T)] by adaptive quadrature in y = log t, split at t = nu, with
/// absolute tolerance `tol`.
double ig_expectation(const IgParams& params, const std::function<double(double)>& g, double tol = 1e-11);

/// E[log T].
double ig_mean_log(const IgParams& params, double tol = 1e-11);

/// E[|log T|].
double ig_mean_abs_log(const IgParams& params, double tol = 1e-11);

/// E[1/T] = 1/nu + 1/kappa.
double ig_mean_inverse(const IgParams& params);

/// Differential entropy h(T) from the expanded-density decomposition.
double ig_entropy(const IgParams& params, double tol = 1e-11);

}  // namespace hitloc
