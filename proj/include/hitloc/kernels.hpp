#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version and a `_serial`
// twin kept as the reference implementation for tests and benchmarks.
// Random kernels split work into fixed chunks with their own engine, so both
// versions return bit-identical draws for any thread count. Reductions combine
// per-chunk partials in chunk order; the serial twins use a single running sum.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hitloc/ig_mixing.hpp"
#include "hitloc/random.hpp"

namespace hitloc::kernels {

/// One inverse-Gaussian draw (Michael-Schucany-Haas transformation).
double draw_inverse_gaussian(const IgParams& ig, Engine& engine, std::normal_distribution<double>& normal,
                             std::uniform_real_distribution<double>& uniform);

std::vector<double> inverse_gaussian_draws(const IgParams& ig, std::size_t count, std::uint64_t seed);
std::vector<double> inverse_gaussian_draws_serial(const IgParams& ig, std::size_t count, std::uint64_t seed);

/// count x p row-major draws of sqrt(T) Z with T ~ ig and Z ~ N(0, I_p).
std::vector<double> gaussian_mixture_draws(int p, const IgParams& ig, std::size_t count, std::uint64_t seed);
std::vector<double> gaussian_mixture_draws_serial(int p, const IgParams& ig, std::size_t count, std::uint64_t seed);

/// For each row w of `omegas` (m x p), the sample mean of cos<w, x_i> over
/// the rows of `points` (n x p).
std::vector<double> empirical_cf(std::span<const double> points, int p, std::span<const double> omegas);
std::vector<double> empirical_cf_serial(std::span<const double> points, int p, std::span<const double> omegas);

struct MeanVariance {
  double mean = 0.0;
  double variance = 0.0;  // unbiased
  std::size_t count = 0;
};

using RowFunction = std::function<double(std::span<const double>)>;

/// Mean and variance of fn(row) over the rows of `points`.
MeanVariance row_statistics(std::span<const double> points, int p, const RowFunction& fn);
MeanVariance row_statistics_serial(std::span<const double> points, int p, const RowFunction& fn);

/// Mean and variance of fn(v) over a flat sample.
MeanVariance value_statistics(std::span<const double> values, const std::function<double(double)>& fn);

struct SdeKernelConfig {
  int p = 1;
  double lambda = 1.0;
  double mu = 1.0;       // longitudinal drift velocity
  double sigma2 = 1.0;   // diffusion coefficient
  double dt = 1e-3;
  std::size_t max_steps = 0;
  bool bridge_correction = true;
};

struct SdeHits {
  std::vector<double> times;
  std::vector<double> locations;  // times.size() x p
  std::size_t exhausted = 0;      // paths that never hit within max_steps
};

/// Euler-Maruyama paths from the origin, absorbed at x = lambda.
SdeHits sde_first_hits(const SdeKernelConfig& cfg, std::size_t count, std::uint64_t seed);
SdeHits sde_first_hits_serial(const SdeKernelConfig& cfg, std::size_t count, std::uint64_t seed);

}  // namespace hitloc::kernels
