#include "hitloc/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hitloc/entropy.hpp"
#include "hitloc/errors.hpp"
#include "hitloc/ig_mixing.hpp"
#include "hitloc/kernels.hpp"

namespace hitloc {

namespace {

constexpr double kTwoPiE = 2.0 * std::numbers::pi * std::numbers::e;

void require_positive_drift(const NdfhlParams& params, const char* what) {
  params.validate();
  if (!(params.u > 0.0)) throw DomainError(std::string(what) + ": requires u > 0");
}

void require_power(double power, const char* what) {
  if (!(power >= 0.0) || !std::isfinite(power)) throw DomainError(std::string(what) + ": power must be finite and >= 0");
}

double upper_from_entropy(const NdfhlParams& params, double power, double h) {
  const double p = params.p();
  return 0.5 * p * std::log(kTwoPiE * (power / p + params.lambda / params.u)) - h;
}

double gaussian_input_rate(const NdfhlParams& params, double power, double tol) {
  if (power == 0.0) return 0.0;
  const double p = params.p();
  return ig_expectation(params.mixing(), [&](double t) { return 0.5 * p * std::log1p(power / (p * t)); }, tol);
}

// I(T; N) = h(N) - h(N | T), using the same h(N) as the upper bound so the
// entropy cancels in upper - lower.
double mutual_info(const NdfhlParams& params, double h, double tol) {
  return std::max(h - entropy_lower(params, tol).value, 0.0);
}

}  // namespace

double capacity_upper(const NdfhlParams& params, double power) {
  require_positive_drift(params, "capacity_upper");
  require_power(power, "capacity_upper");
  return upper_from_entropy(params, power, noise_entropy(params).value);
}

double capacity_lower(const NdfhlParams& params, double power, double tol) {
  require_positive_drift(params, "capacity_lower");
  require_power(power, "capacity_lower");
  const double h = noise_entropy(params, tol).value;
  return gaussian_input_rate(params, power, 0.1 * tol) - mutual_info(params, h, 0.1 * tol);
}

std::pair<double, double> gaussian_input_rate_mc(const NdfhlParams& params, double power, std::size_t count,
                                                 std::uint64_t seed) {
  require_positive_drift(params, "gaussian_input_rate_mc");
  require_power(power, "gaussian_input_rate_mc");
  const double p = params.p();
  const std::vector<double> t = ig_sample(params.mixing(), count, seed);
  const kernels::MeanVariance mv =
      kernels::value_statistics(t, [&](double v) { return 0.5 * p * std::log1p(power / (p * v)); });
  return {mv.mean, std::sqrt(mv.variance / static_cast<double>(mv.count))};
}

std::vector<CapacityReport> capacity_sweep(const NdfhlParams& params, std::span<const double> powers, double tol) {
  require_positive_drift(params, "capacity_sweep");
  const double h = noise_entropy(params, tol).value;
  const double info = mutual_info(params, h, 0.1 * tol);
  const double c_star = 0.5 * params.p() * std::log(kTwoPiE / params.p()) - h;
  std::vector<CapacityReport> out;
  out.reserve(powers.size());
  for (double power : powers) {
    require_power(power, "capacity_sweep");
    CapacityReport r;
    r.power = power;
    r.upper = upper_from_entropy(params, power, h);
    r.lower = gaussian_input_rate(params, power, 0.1 * tol) - info;
    r.lower_clamped = std::max(r.lower, 0.0);
    r.gap = r.upper - r.lower;
    r.offset_c_star = c_star;
    r.params = params;
    out.push_back(r);
  }
  return out;
}

double refined_offset(const NdfhlParams& params) {
  require_positive_drift(params, "refined_offset");
  return 0.5 * params.p() * std::log(kTwoPiE / params.p()) - noise_entropy(params).value;
}

double effective_noise_power(const NdfhlParams& params) {
  require_positive_drift(params, "effective_noise_power");
  return std::exp(2.0 * noise_entropy(params).value / params.p()) / kTwoPiE;
}

std::vector<std::pair<double, double>> offset_curve(int d, double lambda, std::span<const double> u_grid) {
  std::vector<std::pair<double, double>> out;
  out.reserve(u_grid.size());
  for (double u : u_grid) {
    const NdfhlParams params{d, lambda, u};
    params.validate();
    const double h = noise_entropy(params).value;
    out.emplace_back(u, 0.5 * params.p() * std::log(kTwoPiE / params.p()) - h);
  }
  return out;
}

double conditioning_gap_bound(const NdfhlParams& params, double tol) {
  require_positive_drift(params, "conditioning_gap_bound");
  return mutual_info(params, noise_entropy(params, tol).value, 0.1 * tol);
}

}  // namespace hitloc
