#include "hitloc/ig_mixing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hitloc/errors.hpp"
#include "hitloc/kernels.hpp"
#include "hitloc/quadrature.hpp"

namespace hitloc {

namespace {

constexpr double kPi = std::numbers::pi;

// log of the density of Y = log T at y.
double log_density_of_log(const IgParams& ig, double y) {
  const double t = std::exp(y);
  const double inv_t = std::exp(-y);
  const double expo = ig.kappa * t / (2.0 * ig.nu * ig.nu) - ig.kappa / ig.nu + 0.5 * ig.kappa * inv_t;
  return 0.5 * std::log(ig.kappa / (2.0 * kPi)) - 0.5 * y - expo;
}

}  // namespace

void IgParams::validate() const {
  if (!(std::isfinite(nu) && nu > 0.0)) throw DomainError("IgParams: nu must be finite and > 0");
  if (!(std::isfinite(kappa) && kappa > 0.0)) throw DomainError("IgParams: kappa must be finite and > 0");
}

void PhysicalTransport::validate() const {
  if (!(std::isfinite(lambda) && lambda > 0.0)) throw DomainError("PhysicalTransport: lambda must be > 0");
  if (!(std::isfinite(sigma2) && sigma2 > 0.0)) throw DomainError("PhysicalTransport: sigma2 must be > 0");
  if (!std::isfinite(u)) throw DomainError("PhysicalTransport: u must be finite");
}

IgParams ig_from_physical(const PhysicalTransport& phys) {
  phys.validate();
  if (!(phys.u > 0.0)) throw DomainError("ig_from_physical: u must be > 0 (hitting time is defective otherwise)");
  return IgParams{phys.lambda / phys.mu(), phys.lambda * phys.lambda / phys.sigma2};
}

double ig_log_pdf(const IgParams& params, double t) {
  params.validate();
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("ig_pdf: t must be finite and > 0");
  const double dev = t - params.nu;
  return 0.5 * std::log(params.kappa / (2.0 * kPi * t * t * t)) -
         params.kappa * dev * dev / (2.0 * params.nu * params.nu * t);
}

double ig_pdf(const IgParams& params, double t) { return std::exp(ig_log_pdf(params, t)); }

double ig_pdf_expanded(const IgParams& params, double t) {
  params.validate();
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("ig_pdf: t must be finite and > 0");
  const double c = std::sqrt(params.kappa / (2.0 * kPi)) * std::exp(params.kappa / params.nu);
  return c * std::pow(t, -1.5) *
         std::exp(-params.kappa / (2.0 * params.nu * params.nu) * t - params.kappa / (2.0 * t));
}

std::vector<double> ig_sample(const IgParams& params, std::size_t count, std::uint64_t seed) {
  params.validate();
  if (count == 0) throw DomainError("ig_sample: count must be >= 1");
  return kernels::inverse_gaussian_draws(params, count, seed);
}

double ig_laplace(const IgParams& params, double s) {
  params.validate();
  if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("ig_laplace: s must be finite and >= 0");
  const double ratio = params.kappa / params.nu;
  const double z = 2.0 * params.nu * params.nu * s / params.kappa;
  // 1 - sqrt(1 + z) = -z / (1 + sqrt(1 + z)) avoids cancellation for small z
  return std::exp(-ratio * z / (1.0 + std::sqrt(1.0 + z)));
}

double ig_expectation(const IgParams& params, const std::function<double(double)>& g, double tol) {
  params.validate();
  const double y0 = std::log(params.nu);
  const double scale = std::clamp(std::sqrt(params.nu / params.kappa), 1e-4, 1.0);
  Integrand integrand = [&params, &g](double y) {
    const double w = std::exp(log_density_of_log(params, y));
    if (w == 0.0) return 0.0;
    return g(std::exp(y)) * w;
  };
  QuadratureOptions opts;
  opts.abs_tol = 0.5 * tol;
  const QuadratureResult left = integrate_lower_tail(integrand, y0, scale, opts);
  const QuadratureResult right = integrate_upper_tail(integrand, y0, scale, opts);
  return left.value + right.value;
}

double ig_mean_log(const IgParams& params, double tol) {
  return ig_expectation(params, [](double t) { return std::log(t); }, tol);
}

double ig_mean_abs_log(const IgParams& params, double tol) {
  return ig_expectation(params, [](double t) { return std::abs(std::log(t)); }, tol);
}

double ig_mean_inverse(const IgParams& params) {
  params.validate();
  return 1.0 / params.nu + 1.0 / params.kappa;
}

double ig_entropy(const IgParams& params, double tol) {
  params.validate();
  const double log_c = 0.5 * std::log(params.kappa / (2.0 * kPi)) + params.kappa / params.nu;
  const double mean_t = params.nu;
  return -log_c + 1.5 * ig_mean_log(params, tol) + params.kappa / (2.0 * params.nu * params.nu) * mean_t +
         0.5 * params.kappa * ig_mean_inverse(params);
}

}  // namespace hitloc
