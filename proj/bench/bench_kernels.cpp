// Serial twins against the OpenMP kernels. Thread count follows
// OMP_NUM_THREADS / HITLOC_THREADS.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "hitloc/kernels.hpp"
#include "hitloc/parallel.hpp"

using namespace hitloc;
using namespace hitloc::kernels;

namespace {

const IgParams kIg{1.0, 1.0};

template <bool Parallel>
void BM_InverseGaussianDraws(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto v = Parallel ? inverse_gaussian_draws(kIg, n, 1) : inverse_gaussian_draws_serial(kIg, n, 1);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_MixtureDraws(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto v = Parallel ? gaussian_mixture_draws(2, kIg, n, 1) : gaussian_mixture_draws_serial(2, kIg, n, 1);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_EmpiricalCf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pts = gaussian_mixture_draws(2, kIg, n, 2);
  std::vector<double> omegas;
  for (int j = 0; j < 20; ++j) {
    omegas.push_back(0.1 + 0.25 * j);
    omegas.push_back(j % 2 ? 0.0 : 0.05 * j);
  }
  for (auto _ : state) {
    auto v = Parallel ? empirical_cf(pts, 2, omegas) : empirical_cf_serial(pts, 2, omegas);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_RowStatistics(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pts = gaussian_mixture_draws(2, kIg, n, 3);
  const RowFunction fn = [](std::span<const double> x) { return std::log1p(x[0] * x[0] + x[1] * x[1]); };
  for (auto _ : state) {
    auto mv = Parallel ? row_statistics(pts, 2, fn) : row_statistics_serial(pts, 2, fn);
    benchmark::DoNotOptimize(mv.mean);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_SdeFirstHits(benchmark::State& state) {
  SdeKernelConfig cfg;
  cfg.p = 2;
  cfg.lambda = 1.0;
  cfg.mu = 1.0;
  cfg.sigma2 = 1.0;
  cfg.dt = 1e-3;
  cfg.max_steps = 50000;
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto hits = Parallel ? sde_first_hits(cfg, n, 4) : sde_first_hits_serial(cfg, n, 4);
    benchmark::DoNotOptimize(hits.times.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_InverseGaussianDraws<false>)->Name("ig_draws/serial")->Arg(1 << 20);
BENCHMARK(BM_InverseGaussianDraws<true>)->Name("ig_draws/omp")->Arg(1 << 20);
BENCHMARK(BM_MixtureDraws<false>)->Name("mixture_draws/serial")->Arg(1 << 20);
BENCHMARK(BM_MixtureDraws<true>)->Name("mixture_draws/omp")->Arg(1 << 20);
BENCHMARK(BM_EmpiricalCf<false>)->Name("empirical_cf/serial")->Arg(1 << 18);
BENCHMARK(BM_EmpiricalCf<true>)->Name("empirical_cf/omp")->Arg(1 << 18);
BENCHMARK(BM_RowStatistics<false>)->Name("row_statistics/serial")->Arg(1 << 20);
BENCHMARK(BM_RowStatistics<true>)->Name("row_statistics/omp")->Arg(1 << 20);
BENCHMARK(BM_SdeFirstHits<false>)->Name("sde_first_hits/serial")->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SdeFirstHits<true>)->Name("sde_first_hits/omp")->Arg(4096)->Unit(benchmark::kMillisecond);

int main(int argc, char** argv) {
  apply_thread_limit();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
