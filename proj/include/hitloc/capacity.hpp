#pragma once

// High-SNR capacity of Y = X + N with N boundary-hitting noise and input
// power constraint E|X|^2 <= P. Everything is in nats under the sigma = 1
// gauge, where the mixing time is T ~ IG(lambda / u, lambda^2).

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hitloc/ndfhl.hpp"

namespace hitloc {

struct CapacityReport {
  double power = 0.0;
  double upper = 0.0;
  double lower = 0.0;          // raw; negative at low power
  double lower_clamped = 0.0;  // max(lower, 0)
  double gap = 0.0;            // upper - lower
  double offset_c_star = 0.0;
  NdfhlParams params;
};

/// (p/2) log(2 pi e (P/p + lambda/u)) - h(N). Requires u > 0, P >= 0.
double capacity_upper(const NdfhlParams& params, double power);

/// E[(p/2) log(1 + P/(p T))] - I(T; N), expectation by quadrature.
double capacity_lower(const NdfhlParams& params, double power, double tol = 1e-8);

/// Monte-Carlo estimate of E[(p/2) log(1 + P/(p T))] from `count` seeded
/// draws of T: {mean, standard error}. Cross-check for capacity_lower.
std::pair<double, double> gaussian_input_rate_mc(const NdfhlParams& params, double power, std::size_t count,
                                                 std::uint64_t seed);

/// Reports for each power; h(N) and I(T; N) are computed once.
std::vector<CapacityReport> capacity_sweep(const NdfhlParams& params, std::span<const double> powers,
                                           double tol = 1e-8);

/// c* = (p/2) log(2 pi e / p) - h(N), the exact constant in
/// C(P) = (p/2) log P + c* + o(1).
double refined_offset(const NdfhlParams& params);

/// Entropy power exp(2 h(N) / p) / (2 pi e).
double effective_noise_power(const NdfhlParams& params);

/// L(u) = (p/2) log(2 pi e / p) - h(N; u) at each u >= 0; u == 0 uses the
/// Cauchy entropy.
std::vector<std::pair<double, double>> offset_curve(int d, double lambda, std::span<const double> u_grid);

/// Conditioning gap I(T; sqrt(T) Z), which equals I(T; N). Independent of P.
double conditioning_gap_bound(const NdfhlParams& params, double tol = 1e-8);

}  // namespace hitloc
