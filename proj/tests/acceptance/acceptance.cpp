// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Reference constants are mpmath values (30 digits) or analytic identities.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "hitloc/capacity.hpp"
#include "hitloc/entropy.hpp"
#include "hitloc/ig_mixing.hpp"
#include "hitloc/kernels.hpp"
#include "hitloc/ndfhl.hpp"
#include "hitloc/parallel.hpp"
#include "hitloc/validation.hpp"

using namespace hitloc;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

int failures = 0;

void criterion(const char* id, const char* title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %s: %s [%s] (%.1fs)\n", id, out.pass ? "PASS" : "FAIL", title, out.detail.c_str(), secs);
  std::fflush(stdout);
  failures += !out.pass;
}

const std::vector<double> kLambdas = {0.5, 1.0, 2.0};
const std::vector<double> kUs = {0.1, 1.0, 10.0};

}  // namespace

int main() {
  apply_thread_limit();

  criterion("AC1", "d=3 quadrature matches the closed form", [] {
    double worst = 0.0;
    for (double lambda : kLambdas) {
      for (double u : kUs) {
        worst = std::max(worst, std::abs(entropy_quadrature({3, lambda, u}).value -
                                         entropy_closed_form_d3(lambda, u).value));
      }
    }
    return Outcome{worst <= 1e-6, fmt("max |diff| = %.3g <= 1e-6", worst)};
  });

  criterion("AC2", "Cauchy entropy and the u -> 0+ limit", [] {
    const double g1 = cauchy_entropy(1, 1.0);
    const double e1 = std::abs(g1 - 2.53102424696929079);
    const double e2 = std::abs(entropy_closed_form_d3(1.0, 1e-9).value - cauchy_entropy(2, 1.0));
    return Outcome{e1 <= 1e-9 && e2 <= 1e-6, fmt("|g(1) - ref| = %.3g, |h3(u=1e-9) - g(2)| = %.3g", e1, e2)};
  });

  criterion("AC3", "entropy and CF converge to the Cauchy limit", [] {
    const double u_list[] = {1.0, 0.1, 0.01, 0.001};
    bool ok = true;
    double worst_final = 0.0;
    for (int d : {2, 3, 4}) {
      for (const ValidationReport& r : cauchy_limit_sweep(d, 1.0, u_list)) {
        ok = ok && r.pass;
        if (r.check_name == "cauchy_limit_entropy_final") worst_final = std::max(worst_final, r.statistic);
      }
    }
    return Outcome{ok, fmt("monotone for d=2,3,4; max |h(1e-3) - g(p)| = %.3g <= 0.05", worst_final)};
  });

  criterion("AC4", "lower <= h <= upper on the 27-point grid", [] {
    double slack = INFINITY;
    for (int d : {2, 3, 4}) {
      for (double lambda : kLambdas) {
        for (double u : kUs) {
          const NdfhlParams params{d, lambda, u};
          const double h = noise_entropy(params).value;
          slack = std::min({slack, h - entropy_lower(params).value, entropy_upper(params).value - h});
        }
      }
    }
    return Outcome{slack >= -1e-8, fmt("min slack = %.3g >= -1e-8", slack)};
  });

  criterion("AC5", "sample covariance equals lambda/u", [] {
    const NdfhlParams params{3, 2.0, 4.0};
    const SampleBatch batch = sample(params, 1000000, 2025);
    bool ok = true;
    double worst = 0.0;
    for (int axis = 0; axis < 2; ++axis) {
      const auto sq = kernels::row_statistics(batch.points, 2,
                                              [axis](std::span<const double> x) { return x[axis] * x[axis]; });
      const double z = std::abs(sq.mean - 0.5) / std::sqrt(sq.variance / sq.count);
      worst = std::max(worst, z);
      ok = ok && z <= 4.0;
    }
    return Outcome{ok, fmt("max |var - 0.5| / SE = %.3g <= 4", worst)};
  });

  criterion("AC6", "CF, convolution and divisibility gates", [] {
    const std::size_t n = 1000000;
    const NdfhlParams settings[] = {{2, 1.0, 1.0}, {3, 1.0, 1.0}, {4, 1.0, 1.0},
                                    {3, 2.0, 4.0}, {3, 0.5, 0.2}, {2, 1.0, 10.0}};
    bool ok = true;
    double worst = 0.0;
    std::uint64_t seed = 600;
    for (const NdfhlParams& params : settings) {
      const ValidationReport r = empirical_cf_check(sample(params, n, seed++), params);
      ok = ok && r.pass;
      worst = std::max(worst, r.statistic / r.threshold);
    }
    const NdfhlParams unit{3, 1.0, 1.0};
    const ValidationReport positives[] = {convolution_closure_check(0.5, 0.5, 1.0, 3, n, seed++),
                                          convolution_closure_check(1.0, 2.0, 1.0, 2, n, seed++),
                                          divisibility_check(unit, 2, n, seed++),
                                          divisibility_check(unit, 5, n, seed++)};
    for (const auto& r : positives) {
      ok = ok && r.pass;
      worst = std::max(worst, r.statistic / r.threshold);
    }
    const ValidationReport negatives[] = {
        empirical_cf_check(sample(unit, n, seed++), NdfhlParams{3, 1.0, 2.0}),
        convolution_closure_check(1.0, 2.0, 1.0, 2, n, seed++, 2.5),
        divisibility_check(unit, 2, n, seed++, NdfhlParams{3, 1.0, 2.0})};
    double weakest = INFINITY;
    for (const auto& r : negatives) {
      ok = ok && !r.pass;
      weakest = std::min(weakest, r.statistic / r.threshold);
    }
    return Outcome{ok, fmt("positives max stat/gate = %.3g; negatives min stat/gate = %.3g", worst, weakest)};
  });

  criterion("AC7", "upper-bound slope is p/2", [] {
    double worst = 0.0;
    for (int d : {2, 3, 4}) {
      const NdfhlParams params{d, 1.0, 1.0};
      const double slope = (capacity_upper(params, 1e8) - capacity_upper(params, 1e4)) / std::log(1e4);
      worst = std::max(worst, std::abs(slope - 0.5 * (d - 1)));
    }
    return Outcome{worst <= 1e-3, fmt("max |slope - p/2| = %.3g <= 1e-3", worst)};
  });

  criterion("AC8", "high-power offset and gap", [] {
    double off = 0.0;
    double gap = 0.0;
    for (int d : {2, 3, 4}) {
      const NdfhlParams params{d, 1.0, 1.0};
      const double lower = capacity_lower(params, 1e8);
      off = std::max(off, std::abs(lower - (0.5 * (d - 1) * std::log(1e8) + refined_offset(params))));
      gap = std::max(gap, capacity_upper(params, 1e8) - lower);
    }
    return Outcome{off <= 5e-3 && gap <= 1e-3, fmt("offset error %.3g <= 5e-3, gap %.3g <= 1e-3", off, gap)};
  });

  criterion("AC9", "offset curve at the Cauchy endpoint", [] {
    const double grid[] = {0.0, 1e-3};
    const auto curve = offset_curve(2, 1.0, grid);
    const double e0 = std::abs(curve[0].second - (-1.11208571376461805));
    const double step = std::abs(curve[1].second - curve[0].second);
    return Outcome{e0 <= 1e-6 && step <= 0.05, fmt("|L(0) - ref| = %.3g, |L(1e-3) - L(0)| = %.3g", e0, step)};
  });

  criterion("AC10", "raw SDE hits match the mixture law", [] {
    SdeConfig cfg;
    cfg.d = 3;
    cfg.phys = PhysicalTransport{1.0, 1.0, 1.0};
    const SdeConfig resolved = cfg.resolved();
    const SdeSample s = sde_hitting_sample(resolved, 100000, 1001);
    const double n = static_cast<double>(s.times.size());
    const IgParams ig = ig_from_physical(resolved.phys);
    const auto t = kernels::value_statistics(s.times, [](double v) { return v; });
    const double t_gate = 4.0 * std::sqrt(t.variance / n) + 2.0 * resolved.dt;
    bool ok = std::abs(t.mean - ig.nu) <= t_gate;
    double worst_var = 0.0;
    for (int axis = 0; axis < 2; ++axis) {
      const auto sq = kernels::row_statistics(s.locations.points, 2,
                                              [axis](std::span<const double> x) { return x[axis] * x[axis]; });
      const double diff = std::abs(sq.mean - 1.0);
      worst_var = std::max(worst_var, diff);
      ok = ok && diff <= 4.0 * std::sqrt(sq.variance / n) + 2.0 * resolved.dt;
    }
    const ValidationReport cf_report = empirical_cf_check(s.locations, s.locations.params);
    ok = ok && cf_report.pass;
    return Outcome{ok, fmt("|E[T] - 1| = %.3g, max |var - 1| = %.3g, CF stat %.3g", std::abs(t.mean - ig.nu),
                           worst_var, cf_report.statistic)};
  });

  criterion("AC11", "mixing law: inverse moment, Laplace transform, Levy limit", [] {
    const IgParams unit{1.0, 1.0};
    const bool inv = ig_mean_inverse(unit) == 2.0;
    const auto draws = ig_sample(unit, 1000000, 1101);
    double worst_z = 0.0;
    for (double s : {0.1, 1.0, 10.0}) {
      const auto mv = kernels::value_statistics(draws, [s](double t) { return std::exp(-s * t); });
      worst_z = std::max(worst_z, std::abs(mv.mean - ig_laplace(unit, s)) / std::sqrt(mv.variance / mv.count));
    }
    const IgParams wide{1e4, 1.0};
    double levy = 0.0;
    for (double s : {0.01, 0.03, 0.1, 0.3, 1.0, 3.0, 10.0}) {
      levy = std::max(levy, std::abs(ig_laplace(wide, s) - std::exp(-std::sqrt(2.0 * s))));
    }
    return Outcome{inv && worst_z <= 4.0 && levy <= 1e-3,
                   fmt("E[1/T] = %.17g, Laplace max z = %.3g, Levy error %.3g", ig_mean_inverse(unit), worst_z, levy)};
  });

  std::printf("%s: %d failing\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
