#include "hitloc/kernels.hpp"

#include <omp.h>

#include <cmath>

#include "hitloc/errors.hpp"

namespace hitloc::kernels {

namespace {

void fill_inverse_gaussian_chunk(const IgParams& ig, std::uint64_t seed, std::size_t chunk, std::span<double> out) {
  Engine engine = chunk_engine(seed, Stream::inverse_gaussian, chunk);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  for (double& v : out) v = draw_inverse_gaussian(ig, engine, normal, uniform);
}

void fill_mixture_chunk(int p, const IgParams& ig, std::uint64_t seed, std::size_t chunk, std::span<double> out) {
  Engine engine = chunk_engine(seed, Stream::gaussian_mixture, chunk);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  const std::size_t rows = out.size() / static_cast<std::size_t>(p);
  for (std::size_t i = 0; i < rows; ++i) {
    const double scale = std::sqrt(draw_inverse_gaussian(ig, engine, normal, uniform));
    for (int k = 0; k < p; ++k) out[i * p + k] = scale * normal(engine);
  }
}

std::span<double> chunk_span(std::vector<double>& v, std::size_t chunk, std::size_t chunk_items, std::size_t width) {
  const std::size_t begin = chunk * chunk_items * width;
  const std::size_t end = std::min(v.size(), begin + chunk_items * width);
  return std::span<double>(v.data() + begin, end - begin);
}

void cf_partial(std::span<const double> points, int p, std::span<const double> omegas, std::size_t row_begin,
                std::size_t row_end, std::span<double> acc) {
  const std::size_t m = acc.size();
  for (std::size_t i = row_begin; i < row_end; ++i) {
    const double* x = points.data() + i * p;
    for (std::size_t j = 0; j < m; ++j) {
      const double* w = omegas.data() + j * p;
      double dot = 0.0;
      for (int k = 0; k < p; ++k) dot += w[k] * x[k];
      acc[j] += std::cos(dot);
    }
  }
}

struct SdeChunk {
  std::vector<double> times;
  std::vector<double> locations;
  std::size_t exhausted = 0;
};

SdeChunk simulate_sde_chunk(const SdeKernelConfig& cfg, std::size_t paths, std::uint64_t seed, std::size_t chunk) {
  Engine engine = chunk_engine(seed, Stream::sde_paths, chunk);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  const double sd = std::sqrt(cfg.sigma2 * cfg.dt);
  const double drift_step = cfg.mu * cfg.dt;
  const double bridge_scale = 2.0 / (cfg.sigma2 * cfg.dt);
  SdeChunk out;
  out.times.reserve(paths);
  out.locations.reserve(paths * cfg.p);
  std::vector<double> y(cfg.p);
  for (std::size_t path = 0; path < paths; ++path) {
    std::fill(y.begin(), y.end(), 0.0);
    double x = 0.0;
    bool hit = false;
    std::size_t step = 0;
    while (step < cfg.max_steps) {
      ++step;
      const double xn = x + drift_step + sd * normal(engine);
      for (double& yk : y) yk += sd * normal(engine);
      if (xn >= cfg.lambda) {
        hit = true;
        break;
      }
      if (cfg.bridge_correction) {
        // P(bridge from x to xn crosses lambda) = exp(-2 (lambda-x)(lambda-xn) / (sigma2 dt))
        const double expo = bridge_scale * (cfg.lambda - x) * (cfg.lambda - xn);
        if (expo < 40.0 && uniform(engine) < std::exp(-expo)) {
          hit = true;
          break;
        }
      }
      x = xn;
    }
    if (!hit) {
      ++out.exhausted;
      continue;
    }
    out.times.push_back(static_cast<double>(step) * cfg.dt);
    out.locations.insert(out.locations.end(), y.begin(), y.end());
  }
  return out;
}

void validate_sde(const SdeKernelConfig& cfg) {
  if (cfg.p < 1) throw DomainError("sde: p must be >= 1");
  if (!(cfg.dt > 0.0)) throw DomainError("sde: dt must be > 0");
  if (!(cfg.lambda > 0.0) || !(cfg.sigma2 > 0.0)) throw DomainError("sde: lambda and sigma2 must be > 0");
  if (cfg.max_steps == 0) throw DomainError("sde: max_steps must be >= 1");
}

SdeHits concatenate(std::vector<SdeChunk>& chunks) {
  SdeHits hits;
  for (auto& c : chunks) {
    hits.times.insert(hits.times.end(), c.times.begin(), c.times.end());
    hits.locations.insert(hits.locations.end(), c.locations.begin(), c.locations.end());
    hits.exhausted += c.exhausted;
  }
  return hits;
}

}  // namespace

double draw_inverse_gaussian(const IgParams& ig, Engine& engine, std::normal_distribution<double>& normal,
                             std::uniform_real_distribution<double>& uniform) {
  const double z = normal(engine);
  // Smaller root of the chi-square(1) transformation, written as
  // nu / (1 + a + sqrt(a (2 + a))) to avoid cancellation for large a.
  const double a = ig.nu * z * z / (2.0 * ig.kappa);
  const double x = ig.nu / (1.0 + a + std::sqrt(a * (2.0 + a)));
  if (uniform(engine) * (ig.nu + x) <= ig.nu) return x;
  return ig.nu * ig.nu / x;
}

std::vector<double> inverse_gaussian_draws(const IgParams& ig, std::size_t count, std::uint64_t seed) {
  std::vector<double> out(count);
  const auto chunks = static_cast<std::int64_t>(chunk_count(count, kDrawChunk));
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    fill_inverse_gaussian_chunk(ig, seed, c, chunk_span(out, c, kDrawChunk, 1));
  }
  return out;
}

std::vector<double> inverse_gaussian_draws_serial(const IgParams& ig, std::size_t count, std::uint64_t seed) {
  std::vector<double> out(count);
  for (std::size_t c = 0; c < chunk_count(count, kDrawChunk); ++c) {
    fill_inverse_gaussian_chunk(ig, seed, c, chunk_span(out, c, kDrawChunk, 1));
  }
  return out;
}

std::vector<double> gaussian_mixture_draws(int p, const IgParams& ig, std::size_t count, std::uint64_t seed) {
  std::vector<double> out(count * static_cast<std::size_t>(p));
  const auto chunks = static_cast<std::int64_t>(chunk_count(count, kDrawChunk));
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < chunks; ++c) {
    fill_mixture_chunk(p, ig, seed, c, chunk_span(out, c, kDrawChunk, p));
  }
  return out;
}

std::vector<double> gaussian_mixture_draws_serial(int p, const IgParams& ig, std::size_t count, std::uint64_t seed) {
  std::vector<double> out(count * static_cast<std::size_t>(p));
  for (std::size_t c = 0; c < chunk_count(count, kDrawChunk); ++c) {
    fill_mixture_chunk(p, ig, seed, c, chunk_span(out, c, kDrawChunk, p));
  }
  return out;
}

std::vector<double> empirical_cf(std::span<const double> points, int p, std::span<const double> omegas) {
  const std::size_t n = points.size() / p;
  const std::size_t m = omegas.size() / p;
  const std::size_t chunks = chunk_count(n, kDrawChunk);
  std::vector<double> partial(chunks * m, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::size_t begin = c * kDrawChunk;
    const std::size_t end = std::min(n, begin + kDrawChunk);
    cf_partial(points, p, omegas, begin, end, std::span<double>(partial.data() + c * m, m));
  }
  std::vector<double> result(m, 0.0);
  for (std::size_t c = 0; c < chunks; ++c) {
    for (std::size_t j = 0; j < m; ++j) result[j] += partial[c * m + j];
  }
  for (double& r : result) r /= static_cast<double>(n);
  return result;
}

std::vector<double> empirical_cf_serial(std::span<const double> points, int p, std::span<const double> omegas) {
  const std::size_t n = points.size() / p;
  const std::size_t m = omegas.size() / p;
  std::vector<double> result(m, 0.0);
  cf_partial(points, p, omegas, 0, n, result);
  for (double& r : result) r /= static_cast<double>(n);
  return result;
}

MeanVariance row_statistics(std::span<const double> points, int p, const RowFunction& fn) {
  const std::size_t n = points.size() / p;
  const std::size_t chunks = chunk_count(n, kDrawChunk);
  std::vector<MeanVariance> parts(chunks);
  std::vector<double> m2s(chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::size_t begin = c * kDrawChunk;
    const std::size_t end = std::min(n, begin + kDrawChunk);
    MeanVariance& mv = parts[c];
    double m2 = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
      const double v = fn(points.subspan(i * p, p));
      ++mv.count;
      const double delta = v - mv.mean;
      mv.mean += delta / mv.count;
      m2 += delta * (v - mv.mean);
    }
    m2s[c] = m2;
  }
  // Chan et al. pairwise merge, in chunk order
  MeanVariance total;
  double m2 = 0.0;
  for (std::size_t c = 0; c < chunks; ++c) {
    const auto na = static_cast<double>(total.count);
    const auto nb = static_cast<double>(parts[c].count);
    if (nb == 0.0) continue;
    const double delta = parts[c].mean - total.mean;
    const double nt = na + nb;
    total.mean += delta * nb / nt;
    m2 += m2s[c] + delta * delta * na * nb / nt;
    total.count += parts[c].count;
  }
  total.variance = n > 1 ? m2 / (n - 1) : 0.0;
  return total;
}

MeanVariance row_statistics_serial(std::span<const double> points, int p, const RowFunction& fn) {
  const std::size_t n = points.size() / p;
  // Welford
  MeanVariance mv;
  double m2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double v = fn(points.subspan(i * p, p));
    ++mv.count;
    const double delta = v - mv.mean;
    mv.mean += delta / mv.count;
    m2 += delta * (v - mv.mean);
  }
  mv.variance = n > 1 ? m2 / (n - 1) : 0.0;
  return mv;
}

MeanVariance value_statistics(std::span<const double> values, const std::function<double(double)>& fn) {
  return row_statistics(values, 1, [&fn](std::span<const double> row) { return fn(row[0]); });
}

SdeHits sde_first_hits(const SdeKernelConfig& cfg, std::size_t count, std::uint64_t seed) {
  validate_sde(cfg);
  const std::size_t chunks = chunk_count(count, kPathChunk);
  std::vector<SdeChunk> parts(chunks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(chunks); ++c) {
    const std::size_t paths = std::min(kPathChunk, count - c * kPathChunk);
    parts[c] = simulate_sde_chunk(cfg, paths, seed, c);
  }
  return concatenate(parts);
}

SdeHits sde_first_hits_serial(const SdeKernelConfig& cfg, std::size_t count, std::uint64_t seed) {
  validate_sde(cfg);
  const std::size_t chunks = chunk_count(count, kPathChunk);
  std::vector<SdeChunk> parts(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t paths = std::min(kPathChunk, count - c * kPathChunk);
    parts[c] = simulate_sde_chunk(cfg, paths, seed, c);
  }
  return concatenate(parts);
}

}  // namespace hitloc::kernels
