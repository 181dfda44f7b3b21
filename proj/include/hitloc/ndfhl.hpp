#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hitloc/ig_mixing.hpp"

namespace hitloc {

/// Boundary-hitting noise law on R^p, p = d - 1: ambient dimension d,
/// source-to-boundary distance lambda, normalized drift u >= 0. u == 0 is the
/// isotropic Cauchy law with scale lambda.
struct NdfhlParams {
  int d = 3;
  double lambda = 1.0;
  double u = 1.0;

  int p() const { return d - 1; }
  double bessel_order() const { return 0.5 * d; }

  /// Throws DomainError unless d >= 2, lambda > 0 and u >= 0 (all finite).
  void validate() const;

  /// Mixing law of the first-hitting time under the sigma = 1 gauge:
  /// IG(lambda / u, lambda^2). Requires u > 0.
  IgParams mixing() const;
};

/// Reverse-drift family: the proper law over |u| plus a hit probability.
struct SignedDriftParams {
  NdfhlParams base;  // base.u == |u_signed|
  double u_signed = 0.0;

  static SignedDriftParams make(int d, double lambda, double u_signed);
  void validate() const;
};

/// count draws in R^p, row-major, with the inputs that produced them.
struct SampleBatch {
  std::vector<double> points;
  NdfhlParams params;
  std::uint64_t seed = 0;
  std::size_t count = 0;

  int dim() const { return params.p(); }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(points).subspan(i * dim(), dim());
  }
};

/// Normal-inverse-Gaussian parameter tuple matching a symmetric NDFHL member.
struct NigParams {
  int p = 1;
  double alpha = 0.0;
  std::vector<double> beta;        // length p, zero
  double delta = 0.0;
  std::vector<double> mu;          // length p, zero
  std::vector<double> dispersion;  // p x p, identity

  /// Order of the Bessel kernel of the elliptic NIG density, (p + 1) / 2.
  double bessel_order() const { return 0.5 * (p + 1); }
};

/// sqrt(r^2 + lambda^2): distance from the source to a boundary point at radius r.
double boundary_distance(double lambda, double r);

/// Density at n in R^p (u > 0). d == 3 uses the elementary form; other d the
/// Bessel form evaluated in log space.
double pdf(const NdfhlParams& params, std::span<const double> n);

/// Density as a function of the radius |n| (u > 0).
double pdf_radial(const NdfhlParams& params, double r);
double log_pdf_radial(const NdfhlParams& params, double r);

/// The Bessel-form density for any d, without the d == 3 shortcut.
double pdf_bessel_form(const NdfhlParams& params, double r);

/// Isotropic multivariate Cauchy density with scale lambda in R^p.
double cauchy_pdf(int p, double lambda, std::span<const double> x);
double cauchy_log_pdf_radial(int p, double lambda, double r);

/// pdf for u > 0, the Cauchy branch at u == 0.
double pdf_dispatch(const NdfhlParams& params, std::span<const double> x);
double log_pdf_dispatch_radial(const NdfhlParams& params, double r);

/// Characteristic function exp(-lambda (sqrt(u^2 + |w|^2) - u)); real valued.
double cf(const NdfhlParams& params, std::span<const double> omega);
double cf_radial(const NdfhlParams& params, double omega_norm);

/// sqrt(T) Z draws with T ~ IG(lambda / u, lambda^2), Z ~ N(0, I_p). Requires
/// u > 0 and count >= 1; deterministic given seed.
SampleBatch sample(const NdfhlParams& params, std::size_t count, std::uint64_t seed);

/// (lambda / u) I_p, row-major. DomainError at u == 0 (infinite variance).
std::vector<double> covariance(const NdfhlParams& params);

/// P(T < inf): 1 for u_signed >= 0, exp(-2 lambda |u_signed|) otherwise.
double hit_probability(double lambda, double u_signed);

/// Sub-probability hitting density for u_signed < 0:
/// hit_probability * pdf(n; |u_signed|).
double defective_pdf(const SignedDriftParams& sp, std::span<const double> n);

/// Differential entropy of the p-dimensional isotropic Cauchy law, nats.
double cauchy_entropy(int p, double lambda);

/// alpha = u, beta = 0, delta = lambda, mu = 0, dispersion = I. Requires u > 0.
NigParams nig_identification(const NdfhlParams& params);

}  // namespace hitloc
