#pragma once

// Statistical and physical oracles: raw SDE first-hitting simulation,
// empirical-CF gates, convolution and divisibility checks, the Cauchy-limit
// sweep. A report passes iff statistic <= threshold.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hitloc/ig_mixing.hpp"
#include "hitloc/ndfhl.hpp"

namespace hitloc {

struct SdeConfig {
  int d = 3;
  PhysicalTransport phys;
  double dt = 0.0;             // 0 selects 1e-3 * nu
  std::size_t max_steps = 0;   // 0 selects 50 * nu / dt
  bool bridge_correction = true;

  /// Fills defaults and validates (u > 0, dt > 0).
  SdeConfig resolved() const;
};

struct SdeSample {
  std::vector<double> times;
  SampleBatch locations;  // params carry (d, lambda, u)
  std::size_t exhausted = 0;
};

struct ValidationReport {
  std::string check_name;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::vector<std::pair<std::string, double>> metadata;
};

ValidationReport make_report(std::string name, double statistic, double threshold,
                             std::vector<std::pair<std::string, double>> metadata = {});

/// Euler-Maruyama paths from the origin absorbed at x_1 = lambda, with the
/// Brownian-bridge crossing test when enabled. Paths that never hit are
/// dropped; NonTerminationError if they exceed 0.1% of count.
SdeSample sde_hitting_sample(const SdeConfig& cfg, std::size_t count, std::uint64_t seed);

/// 20 frequencies with norms evenly spaced in [0.1, 5], directions cycling
/// through the coordinate axes and the main diagonal. m x p row-major.
std::vector<double> default_omega_grid(int p);

/// max over the grid of |empirical CF - cf|, gated at 4 / sqrt(count).
ValidationReport empirical_cf_check(const SampleBatch& batch, const NdfhlParams& params,
                                    std::span<const double> omega_grid);
ValidationReport empirical_cf_check(const SampleBatch& batch, const NdfhlParams& params);

/// max over the grid of the difference of two empirical CFs, gated at
/// 4 sqrt(1/n1 + 1/n2).
ValidationReport two_sample_cf_check(std::span<const double> a, std::span<const double> b, int p,
                                     std::span<const double> omega_grid);

/// Sum of independent NDFHL(lambda1, u) and NDFHL(lambda2, u) batches
/// against NDFHL(target_lambda, u); target_lambda <= 0 means lambda1 + lambda2.
ValidationReport convolution_closure_check(double lambda1, double lambda2, double u, int d, std::size_t count,
                                           std::uint64_t seed, double target_lambda = 0.0);

/// Sum of k independent NDFHL(lambda / k, u) batches against `target`
/// (defaults to params).
ValidationReport divisibility_check(const NdfhlParams& params, int k, std::size_t count, std::uint64_t seed);
ValidationReport divisibility_check(const NdfhlParams& params, int k, std::size_t count, std::uint64_t seed,
                                    const NdfhlParams& target);

/// Along a decreasing positive u_list: the entropy distance |h(u) - g(p)| and
/// the CF distance sup |cf(w; u) - exp(-lambda |w|)|. For each u after the
/// first, one report per distance gated by the previous u's distance (so the
/// sequence must decrease), then a final entropy report gated at 0.05.
std::vector<ValidationReport> cauchy_limit_sweep(int d, double lambda, std::span<const double> u_list);

struct SuiteConfig {
  std::uint64_t seed = 7;
  std::size_t count = 200000;      // draws per CF gate
  std::size_t sde_paths = 100000;
};

/// Every check of the suite. Each report carries metadata "expected_pass"
/// (1 for positive checks, 0 for negative controls).
std::vector<ValidationReport> validation_suite(const SuiteConfig& cfg);

/// True iff every report's pass flag matches its expected_pass metadata.
bool all_as_expected(std::span<const ValidationReport> reports);

}  // namespace hitloc
