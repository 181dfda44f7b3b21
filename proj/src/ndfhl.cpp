#include "hitloc/ndfhl.hpp"

#include <cmath>
#include <numbers>

#include "hitloc/errors.hpp"
#include "hitloc/kernels.hpp"
#include "hitloc/special_functions.hpp"

namespace hitloc {

namespace {

constexpr double kPi = std::numbers::pi;

double finite_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) throw DomainError("non-finite coordinate");
    s += x * x;
  }
  return std::sqrt(s);
}

void require_dim(const NdfhlParams& params, std::span<const double> v) {
  if (static_cast<int>(v.size()) != params.p()) throw DomainError("point dimension does not match p = d - 1");
}

void require_positive_drift(const NdfhlParams& params, const char* what) {
  params.validate();
  if (!(params.u > 0.0)) throw DomainError(std::string(what) + ": requires u > 0");
}

// rho - lambda without cancellation.
double excess_distance(double lambda, double r) { return r * r / (boundary_distance(lambda, r) + lambda); }

}  // namespace

void NdfhlParams::validate() const {
  if (d < 2) throw DomainError("NdfhlParams: d must be >= 2");
  if (!(std::isfinite(lambda) && lambda > 0.0)) throw DomainError("NdfhlParams: lambda must be finite and > 0");
  if (!(std::isfinite(u) && u >= 0.0)) throw DomainError("NdfhlParams: u must be finite and >= 0");
}

IgParams NdfhlParams::mixing() const {
  require_positive_drift(*this, "NdfhlParams::mixing");
  return IgParams{lambda / u, lambda * lambda};
}

SignedDriftParams SignedDriftParams::make(int d, double lambda, double u_signed) {
  SignedDriftParams sp{NdfhlParams{d, lambda, std::abs(u_signed)}, u_signed};
  sp.validate();
  return sp;
}

void SignedDriftParams::validate() const {
  base.validate();
  if (!std::isfinite(u_signed) || base.u != std::abs(u_signed)) {
    throw DomainError("SignedDriftParams: base.u must equal |u_signed|");
  }
}

double boundary_distance(double lambda, double r) { return std::hypot(r, lambda); }

double log_pdf_radial(const NdfhlParams& params, double r) {
  require_positive_drift(params, "pdf");
  if (!std::isfinite(r)) throw DomainError("pdf: non-finite radius");
  r = std::abs(r);
  const double lambda = params.lambda;
  const double u = params.u;
  const double rho = boundary_distance(lambda, r);
  if (params.d == 3) {
    // lambda / (2 pi rho^3) (1 + u rho) exp(-u (rho - lambda))
    return std::log(lambda / (2.0 * kPi)) - 3.0 * std::log(rho) + std::log1p(u * rho) -
           u * excess_distance(lambda, r);
  }
  const double order = params.bessel_order();
  return std::log(lambda) - (order - 1.0) * std::log(2.0) - order * std::log(kPi) + order * std::log(u / rho) -
         u * excess_distance(lambda, r) + std::log(bessel_k_scaled(order, u * rho));
}

double pdf_radial(const NdfhlParams& params, double r) { return std::exp(log_pdf_radial(params, r)); }

double pdf_bessel_form(const NdfhlParams& params, double r) {
  require_positive_drift(params, "pdf_bessel_form");
  const double order = params.bessel_order();
  const double rho = boundary_distance(params.lambda, r);
  const double log_value = std::log(params.lambda) - (order - 1.0) * std::log(2.0) - order * std::log(kPi) +
                           order * std::log(params.u / rho) + params.lambda * params.u +
                           log_bessel_k(order, params.u * rho);
  return std::exp(log_value);
}

double pdf(const NdfhlParams& params, std::span<const double> n) {
  require_positive_drift(params, "pdf");
  require_dim(params, n);
  return pdf_radial(params, finite_norm(n));
}

double cauchy_log_pdf_radial(int p, double lambda, double r) {
  if (p < 1) throw DomainError("cauchy_pdf: p must be >= 1");
  if (!(std::isfinite(lambda) && lambda > 0.0)) throw DomainError("cauchy_pdf: lambda must be > 0");
  if (!std::isfinite(r)) throw DomainError("cauchy_pdf: non-finite radius");
  const double a = 0.5 * (p + 1);
  const double z = r / lambda;
  return log_gamma(a) - a * std::log(kPi) - p * std::log(lambda) - a * std::log1p(z * z);
}

double cauchy_pdf(int p, double lambda, std::span<const double> x) {
  if (static_cast<int>(x.size()) != p) throw DomainError("cauchy_pdf: point dimension does not match p");
  return std::exp(cauchy_log_pdf_radial(p, lambda, finite_norm(x)));
}

double log_pdf_dispatch_radial(const NdfhlParams& params, double r) {
  params.validate();
  if (params.u == 0.0) return cauchy_log_pdf_radial(params.p(), params.lambda, r);
  return log_pdf_radial(params, r);
}

double pdf_dispatch(const NdfhlParams& params, std::span<const double> x) {
  params.validate();
  require_dim(params, x);
  if (params.u == 0.0) return cauchy_pdf(params.p(), params.lambda, x);
  return pdf(params, x);
}

double cf_radial(const NdfhlParams& params, double omega_norm) {
  params.validate();
  if (!std::isfinite(omega_norm)) throw DomainError("cf: non-finite frequency");
  const double w2 = omega_norm * omega_norm;
  if (w2 == 0.0) return 1.0;
  // sqrt(u^2 + w^2) - u = w^2 / (sqrt(u^2 + w^2) + u)
  const double u = params.u;
  return std::exp(-params.lambda * w2 / (std::sqrt(u * u + w2) + u));
}

double cf(const NdfhlParams& params, std::span<const double> omega) {
  params.validate();
  require_dim(params, omega);
  return cf_radial(params, finite_norm(omega));
}

SampleBatch sample(const NdfhlParams& params, std::size_t count, std::uint64_t seed) {
  require_positive_drift(params, "sample");
  if (count == 0) throw DomainError("sample: count must be >= 1");
  SampleBatch batch;
  batch.points = kernels::gaussian_mixture_draws(params.p(), params.mixing(), count, seed);
  batch.params = params;
  batch.seed = seed;
  batch.count = count;
  return batch;
}

std::vector<double> covariance(const NdfhlParams& params) {
  params.validate();
  if (params.u == 0.0) throw DomainError("covariance: infinite at u = 0");
  const int p = params.p();
  std::vector<double> cov(static_cast<std::size_t>(p) * p, 0.0);
  for (int i = 0; i < p; ++i) cov[i * p + i] = params.lambda / params.u;
  return cov;
}

double hit_probability(double lambda, double u_signed) {
  if (!(std::isfinite(lambda) && lambda > 0.0)) throw DomainError("hit_probability: lambda must be > 0");
  if (!std::isfinite(u_signed)) throw DomainError("hit_probability: non-finite drift");
  if (u_signed >= 0.0) return 1.0;
  return std::exp(-2.0 * lambda * std::abs(u_signed));
}

double defective_pdf(const SignedDriftParams& sp, std::span<const double> n) {
  sp.validate();
  if (!(sp.u_signed < 0.0)) throw DomainError("defective_pdf: requires u_signed < 0");
  return hit_probability(sp.base.lambda, sp.u_signed) * pdf(sp.base, n);
}

double cauchy_entropy(int p, double lambda) {
  if (p < 1) throw DomainError("cauchy_entropy: p must be >= 1");
  if (!(std::isfinite(lambda) && lambda > 0.0)) throw DomainError("cauchy_entropy: lambda must be > 0");
  const double a = 0.5 * (p + 1);
  return a * std::log(kPi) + p * std::log(lambda) - log_gamma(a) + a * (digamma(a) - digamma(0.5));
}

NigParams nig_identification(const NdfhlParams& params) {
  require_positive_drift(params, "nig_identification");
  const int p = params.p();
  NigParams nig;
  nig.p = p;
  nig.alpha = params.u;
  nig.beta.assign(p, 0.0);
  nig.delta = params.lambda;
  nig.mu.assign(p, 0.0);
  nig.dispersion.assign(static_cast<std::size_t>(p) * p, 0.0);
  for (int i = 0; i < p; ++i) nig.dispersion[i * p + i] = 1.0;
  return nig;
}

}  // namespace hitloc
