// The OpenMP kernels must reproduce their serial twins: bit-for-bit for
// random draws, to rounding for reductions.

#include <doctest.h>
#include <omp.h>

#include <cmath>
#include <vector>

#include "hitloc/kernels.hpp"

using namespace hitloc;
using namespace hitloc::kernels;

namespace {

struct ThreadScope {
  int saved = omp_get_max_threads();
  explicit ThreadScope(int n) { omp_set_num_threads(n); }
  ~ThreadScope() { omp_set_num_threads(saved); }
};

const IgParams kIg{1.0, 1.0};

}  // namespace

TEST_CASE("inverse-Gaussian draws match the serial twin for any thread count") {
  const std::size_t n = 3 * kDrawChunk + 17;
  const auto ref = inverse_gaussian_draws_serial(kIg, n, 42);
  for (int threads : {1, 2, 4, 7}) {
    ThreadScope scope(threads);
    CHECK(inverse_gaussian_draws(kIg, n, 42) == ref);
  }
  for (double v : ref) CHECK(v > 0.0);
}

TEST_CASE("draws are a pure function of (seed, chunk)") {
  const auto shorter = inverse_gaussian_draws(kIg, kDrawChunk, 9);
  const auto longer = inverse_gaussian_draws(kIg, 2 * kDrawChunk, 9);
  CHECK(std::vector<double>(longer.begin(), longer.begin() + kDrawChunk) == shorter);
  CHECK(inverse_gaussian_draws(kIg, 100, 9) != inverse_gaussian_draws(kIg, 100, 10));
}

TEST_CASE("Gaussian mixture draws match the serial twin") {
  for (int p : {1, 2, 3}) {
    const std::size_t n = 2 * kDrawChunk + 5;
    const auto ref = gaussian_mixture_draws_serial(p, kIg, n, 3);
    CHECK(ref.size() == n * p);
    ThreadScope scope(4);
    CHECK(gaussian_mixture_draws(p, kIg, n, 3) == ref);
  }
}

TEST_CASE("empirical CF and row statistics agree with the serial reductions") {
  const int p = 2;
  const std::size_t n = 5 * kDrawChunk + 123;
  const auto pts = gaussian_mixture_draws(p, kIg, n, 11);
  const std::vector<double> omegas = {0.1, 0.0, 0.0, 1.0, 2.0, -0.5, 3.0, 3.0};
  const auto ref = empirical_cf_serial(pts, p, omegas);
  ThreadScope scope(4);
  const auto par = empirical_cf(pts, p, omegas);
  REQUIRE(par.size() == ref.size());
  for (std::size_t j = 0; j < ref.size(); ++j) CHECK(std::abs(par[j] - ref[j]) < 1e-13);

  const RowFunction sq = [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; };
  const MeanVariance a = row_statistics(pts, p, sq);
  const MeanVariance b = row_statistics_serial(pts, p, sq);
  CHECK(a.count == n);
  CHECK(b.count == n);
  CHECK(std::abs(a.mean - b.mean) < 1e-12 * std::abs(b.mean));
  CHECK(std::abs(a.variance - b.variance) < 1e-10 * b.variance);
}

TEST_CASE("row statistics on a known sample") {
  const std::vector<double> v = {1.0, 2.0, 3.0, 4.0};
  const MeanVariance mv = value_statistics(v, [](double x) { return x; });
  CHECK(mv.mean == doctest::Approx(2.5));
  CHECK(mv.variance == doctest::Approx(5.0 / 3.0));
  CHECK(mv.count == 4);
}

TEST_CASE("SDE paths match the serial twin and respect the step cap") {
  SdeKernelConfig cfg;
  cfg.p = 2;
  cfg.lambda = 1.0;
  cfg.mu = 1.0;
  cfg.sigma2 = 1.0;
  cfg.dt = 1e-2;
  cfg.max_steps = 5000;
  const SdeHits ref = sde_first_hits_serial(cfg, 3 * kPathChunk + 9, 5);
  ThreadScope scope(4);
  const SdeHits par = sde_first_hits(cfg, 3 * kPathChunk + 9, 5);
  CHECK(par.times == ref.times);
  CHECK(par.locations == ref.locations);
  CHECK(par.exhausted == ref.exhausted);
  CHECK(ref.locations.size() == ref.times.size() * 2);
  for (double t : ref.times) CHECK(t > 0.0);

  cfg.max_steps = 1;
  const SdeHits capped = sde_first_hits(cfg, 100, 5);
  CHECK(capped.exhausted + capped.times.size() == 100);
  CHECK(capped.exhausted > 90);
}
