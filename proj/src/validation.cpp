#include "hitloc/validation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hitloc/entropy.hpp"
#include "hitloc/errors.hpp"
#include "hitloc/kernels.hpp"

namespace hitloc {

namespace {

constexpr int kGridPoints = 20;

// Independent user-level seeds for the batches inside one check.
std::uint64_t derived_seed(std::uint64_t seed, std::uint64_t k) { return seed + k * 0x9E3779B97F4A7C15ULL; }

double max_abs_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

SampleBatch summed_batch(const NdfhlParams& part, int k, std::size_t count, std::uint64_t seed) {
  SampleBatch total = sample(part, count, derived_seed(seed, 0));
  for (int j = 1; j < k; ++j) {
    const SampleBatch next = sample(part, count, derived_seed(seed, j));
    for (std::size_t i = 0; i < total.points.size(); ++i) total.points[i] += next.points[i];
  }
  return total;
}

std::vector<double> omega_norms(const std::vector<double>& grid, int p) {
  std::vector<double> norms;
  for (std::size_t j = 0; j < grid.size() / p; ++j) {
    double s = 0.0;
    for (int k = 0; k < p; ++k) s += grid[j * p + k] * grid[j * p + k];
    norms.push_back(std::sqrt(s));
  }
  return norms;
}

void tag(ValidationReport& r, double expected) { r.metadata.emplace_back("expected_pass", expected); }

}  // namespace

SdeConfig SdeConfig::resolved() const {
  phys.validate();
  if (d < 2) throw DomainError("SdeConfig: d must be >= 2");
  const IgParams ig = ig_from_physical(phys);
  SdeConfig out = *this;
  if (out.dt == 0.0) out.dt = 1e-3 * ig.nu;
  if (!(out.dt > 0.0) || !std::isfinite(out.dt)) throw DomainError("SdeConfig: dt must be > 0");
  if (out.max_steps == 0) out.max_steps = static_cast<std::size_t>(std::ceil(50.0 * ig.nu / out.dt));
  return out;
}

ValidationReport make_report(std::string name, double statistic, double threshold,
                             std::vector<std::pair<std::string, double>> metadata) {
  ValidationReport r;
  r.check_name = std::move(name);
  r.statistic = statistic;
  r.threshold = threshold;
  r.pass = statistic <= threshold;
  r.metadata = std::move(metadata);
  return r;
}

SdeSample sde_hitting_sample(const SdeConfig& cfg_in, std::size_t count, std::uint64_t seed) {
  const SdeConfig cfg = cfg_in.resolved();
  if (count == 0) throw DomainError("sde_hitting_sample: count must be >= 1");
  kernels::SdeKernelConfig k;
  k.p = cfg.d - 1;
  k.lambda = cfg.phys.lambda;
  k.mu = cfg.phys.mu();
  k.sigma2 = cfg.phys.sigma2;
  k.dt = cfg.dt;
  k.max_steps = cfg.max_steps;
  k.bridge_correction = cfg.bridge_correction;
  kernels::SdeHits hits = kernels::sde_first_hits(k, count, seed);
  if (static_cast<double>(hits.exhausted) > 1e-3 * static_cast<double>(count)) {
    throw NonTerminationError("sde_hitting_sample: " + std::to_string(hits.exhausted) + " of " +
                              std::to_string(count) + " paths exhausted max_steps");
  }
  SdeSample out;
  out.times = std::move(hits.times);
  out.exhausted = hits.exhausted;
  out.locations.points = std::move(hits.locations);
  out.locations.params = NdfhlParams{cfg.d, cfg.phys.lambda, cfg.phys.u};
  out.locations.seed = seed;
  out.locations.count = out.times.size();
  return out;
}

std::vector<double> default_omega_grid(int p) {
  if (p < 1) throw DomainError("default_omega_grid: p must be >= 1");
  std::vector<double> grid(static_cast<std::size_t>(kGridPoints) * p, 0.0);
  const int directions = p == 1 ? 1 : p + 1;
  for (int j = 0; j < kGridPoints; ++j) {
    const double norm = 0.1 + (5.0 - 0.1) * j / (kGridPoints - 1);
    const int dir = j % directions;
    double* w = grid.data() + static_cast<std::size_t>(j) * p;
    if (dir < p) {
      w[dir] = norm;
    } else {
      for (int k = 0; k < p; ++k) w[k] = norm / std::sqrt(static_cast<double>(p));
    }
  }
  return grid;
}

ValidationReport empirical_cf_check(const SampleBatch& batch, const NdfhlParams& params,
                                    std::span<const double> omega_grid) {
  params.validate();
  const int p = params.p();
  if (batch.dim() != p) throw DomainError("empirical_cf_check: batch dimension does not match params");
  if (batch.count == 0) throw DomainError("empirical_cf_check: empty batch");
  const std::vector<double> emp = kernels::empirical_cf(batch.points, p, omega_grid);
  std::vector<double> exact;
  for (std::size_t j = 0; j < emp.size(); ++j) exact.push_back(cf(params, omega_grid.subspan(j * p, p)));
  return make_report("empirical_cf", max_abs_diff(emp, exact), 4.0 / std::sqrt(static_cast<double>(batch.count)),
                     {{"d", params.d}, {"lambda", params.lambda}, {"u", params.u},
                      {"count", static_cast<double>(batch.count)}});
}

ValidationReport empirical_cf_check(const SampleBatch& batch, const NdfhlParams& params) {
  const std::vector<double> grid = default_omega_grid(params.p());
  return empirical_cf_check(batch, params, grid);
}

ValidationReport two_sample_cf_check(std::span<const double> a, std::span<const double> b, int p,
                                     std::span<const double> omega_grid) {
  if (p < 1 || a.empty() || b.empty()) throw DomainError("two_sample_cf_check: empty input");
  const double n1 = static_cast<double>(a.size() / p);
  const double n2 = static_cast<double>(b.size() / p);
  const std::vector<double> ea = kernels::empirical_cf(a, p, omega_grid);
  const std::vector<double> eb = kernels::empirical_cf(b, p, omega_grid);
  return make_report("two_sample_cf", max_abs_diff(ea, eb), 4.0 * std::sqrt(1.0 / n1 + 1.0 / n2),
                     {{"n1", n1}, {"n2", n2}});
}

ValidationReport convolution_closure_check(double lambda1, double lambda2, double u, int d, std::size_t count,
                                           std::uint64_t seed, double target_lambda) {
  const NdfhlParams first{d, lambda1, u};
  const NdfhlParams second{d, lambda2, u};
  const double target = target_lambda > 0.0 ? target_lambda : lambda1 + lambda2;
  SampleBatch total = sample(first, count, derived_seed(seed, 0));
  const SampleBatch other = sample(second, count, derived_seed(seed, 1));
  for (std::size_t i = 0; i < total.points.size(); ++i) total.points[i] += other.points[i];
  const NdfhlParams target_params{d, target, u};
  ValidationReport r = empirical_cf_check(total, target_params);
  r.check_name = "convolution_closure";
  r.metadata = {{"d", d}, {"lambda1", lambda1}, {"lambda2", lambda2}, {"u", u}, {"target_lambda", target},
                {"count", static_cast<double>(count)}};
  return r;
}

ValidationReport divisibility_check(const NdfhlParams& params, int k, std::size_t count, std::uint64_t seed) {
  return divisibility_check(params, k, count, seed, params);
}

ValidationReport divisibility_check(const NdfhlParams& params, int k, std::size_t count, std::uint64_t seed,
                                    const NdfhlParams& target) {
  params.validate();
  if (k < 2) throw DomainError("divisibility_check: k must be >= 2");
  const NdfhlParams part{params.d, params.lambda / k, params.u};
  const SampleBatch total = summed_batch(part, k, count, seed);
  ValidationReport r = empirical_cf_check(total, target);
  r.check_name = "divisibility";
  r.metadata = {{"d", params.d},       {"lambda", params.lambda}, {"u", params.u},
                {"k", k},              {"target_u", target.u},    {"target_lambda", target.lambda},
                {"count", static_cast<double>(count)}};
  return r;
}

std::vector<ValidationReport> cauchy_limit_sweep(int d, double lambda, std::span<const double> u_list) {
  const NdfhlParams base{d, lambda, 0.0};
  base.validate();
  if (u_list.empty()) throw DomainError("cauchy_limit_sweep: empty u_list");
  const double g = cauchy_entropy(base.p(), lambda);
  const std::vector<double> norms = omega_norms(default_omega_grid(base.p()), base.p());

  std::vector<ValidationReport> out;
  double prev_h = 0.0;
  double prev_cf = 0.0;
  for (std::size_t i = 0; i < u_list.size(); ++i) {
    const double u = u_list[i];
    if (!(u > 0.0)) throw DomainError("cauchy_limit_sweep: u values must be > 0");
    const NdfhlParams params{d, lambda, u};
    const double h_dist = std::abs(entropy_quadrature(params).value - g);
    double cf_dist = 0.0;
    for (double w : norms) cf_dist = std::max(cf_dist, std::abs(cf_radial(params, w) - std::exp(-lambda * w)));
    if (i > 0) {
      out.push_back(make_report("cauchy_limit_entropy", h_dist, prev_h,
                                {{"d", d}, {"lambda", lambda}, {"u", u}, {"u_prev", u_list[i - 1]}}));
      out.push_back(make_report("cauchy_limit_cf", cf_dist, prev_cf,
                                {{"d", d}, {"lambda", lambda}, {"u", u}, {"u_prev", u_list[i - 1]}}));
    }
    if (i + 1 == u_list.size()) {
      out.push_back(make_report("cauchy_limit_entropy_final", h_dist, 0.05, {{"d", d}, {"lambda", lambda}, {"u", u}}));
    }
    prev_h = h_dist;
    prev_cf = cf_dist;
  }
  return out;
}

std::vector<ValidationReport> validation_suite(const SuiteConfig& cfg) {
  if (cfg.count == 0 || cfg.sde_paths == 0) throw DomainError("validation_suite: counts must be >= 1");
  std::vector<ValidationReport> out;
  auto add = [&out](ValidationReport r, bool expected) {
    tag(r, expected ? 1.0 : 0.0);
    out.push_back(std::move(r));
  };
  std::uint64_t stream = 0;
  auto next_seed = [&]() { return derived_seed(cfg.seed, 100 + stream++); };

  // Sampler against the closed-form CF.
  const NdfhlParams settings[] = {{2, 1.0, 1.0}, {3, 1.0, 1.0}, {4, 1.0, 1.0},
                                  {3, 2.0, 4.0}, {3, 0.5, 0.2}, {2, 1.0, 10.0}};
  for (const NdfhlParams& params : settings) {
    add(empirical_cf_check(sample(params, cfg.count, next_seed()), params), true);
  }
  {
    ValidationReport r = empirical_cf_check(sample(NdfhlParams{3, 1.0, 1.0}, cfg.count, next_seed()),
                                            NdfhlParams{3, 1.0, 2.0});
    r.check_name = "empirical_cf_mismatched_u";
    add(std::move(r), false);
  }

  add(convolution_closure_check(0.5, 0.5, 1.0, 3, cfg.count, next_seed()), true);
  add(convolution_closure_check(1.0, 2.0, 1.0, 2, cfg.count, next_seed()), true);
  add(convolution_closure_check(1.0, 2.0, 1.0, 2, cfg.count, next_seed(), 2.5), false);

  const NdfhlParams unit{3, 1.0, 1.0};
  add(divisibility_check(unit, 2, cfg.count, next_seed()), true);
  add(divisibility_check(unit, 5, cfg.count, next_seed()), true);
  add(divisibility_check(unit, 2, cfg.count, next_seed(), NdfhlParams{3, 1.0, 2.0}), false);

  // Raw SDE against the mixture representation.
  SdeConfig sde;
  sde.d = 3;
  sde.phys = PhysicalTransport{1.0, 1.0, 1.0};
  const SdeConfig resolved = sde.resolved();
  const IgParams ig = ig_from_physical(resolved.phys);
  const std::uint64_t sde_seed = next_seed();
  const SdeSample hits = sde_hitting_sample(resolved, cfg.sde_paths, sde_seed);
  const double n = static_cast<double>(hits.times.size());
  const double allowance = 2.0 * resolved.dt;
  {
    const kernels::MeanVariance t = kernels::value_statistics(hits.times, [](double v) { return v; });
    add(make_report("sde_hit_time_mean", std::abs(t.mean - ig.nu), 4.0 * std::sqrt(t.variance / n) + allowance,
                    {{"mean", t.mean}, {"expected", ig.nu}, {"dt", resolved.dt}}),
        true);
    const kernels::MeanVariance sq =
        kernels::value_statistics(hits.times, [m = t.mean](double v) { return (v - m) * (v - m); });
    add(make_report("sde_hit_time_variance", std::abs(t.variance - ig.variance()),
                    4.0 * std::sqrt(sq.variance / n) + allowance,
                    {{"variance", t.variance}, {"expected", ig.variance()}, {"dt", resolved.dt}}),
        true);
  }
  {
    const int p = resolved.d - 1;
    const double expected = resolved.phys.lambda / resolved.phys.u;
    double worst = 0.0;
    double worst_gate = 0.0;
    for (int axis = 0; axis < p; ++axis) {
      const kernels::MeanVariance sq = kernels::row_statistics(
          hits.locations.points, p, [axis](std::span<const double> x) { return x[axis] * x[axis]; });
      const double gate = 4.0 * std::sqrt(sq.variance / n) + allowance * resolved.phys.sigma2;
      // Excess over the gate, so the worst axis decides.
      if (std::abs(sq.mean - expected) - gate > worst - worst_gate || axis == 0) {
        worst = std::abs(sq.mean - expected);
        worst_gate = gate;
      }
    }
    add(make_report("sde_location_variance", worst, worst_gate, {{"expected", expected}, {"dt", resolved.dt}}), true);
  }
  {
    ValidationReport r = empirical_cf_check(hits.locations, hits.locations.params);
    r.check_name = "sde_location_cf";
    add(std::move(r), true);
    const SampleBatch mixture = sample(hits.locations.params, hits.times.size(), next_seed());
    const std::vector<double> grid = default_omega_grid(hits.locations.dim());
    ValidationReport two = two_sample_cf_check(hits.locations.points, mixture.points, hits.locations.dim(), grid);
    two.check_name = "sde_vs_mixture_cf";
    add(std::move(two), true);
  }
  {
    SdeConfig raw = resolved;
    raw.bridge_correction = false;
    const SdeSample biased = sde_hitting_sample(raw, cfg.sde_paths, sde_seed);
    const double on = kernels::value_statistics(hits.times, [](double v) { return v; }).mean;
    const double off = kernels::value_statistics(biased.times, [](double v) { return v; }).mean;
    // Without the bridge test, intra-step crossings are missed and hit times
    // shift upward.
    add(make_report("sde_bridge_bias", on - off, 0.0, {{"mean_bridge", on}, {"mean_raw", off}}), true);
  }

  const double u_list[] = {1.0, 0.1, 0.01, 0.001};
  for (int d : {2, 4}) {
    for (ValidationReport& r : cauchy_limit_sweep(d, 1.0, u_list)) add(std::move(r), true);
  }
  return out;
}

bool all_as_expected(std::span<const ValidationReport> reports) {
  for (const ValidationReport& r : reports) {
    double expected = 1.0;
    for (const auto& [key, value] : r.metadata) {
      if (key == "expected_pass") expected = value;
    }
    if (r.pass != (expected != 0.0)) return false;
  }
  return true;
}

}  // namespace hitloc
