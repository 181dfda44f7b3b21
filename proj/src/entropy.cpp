#include "hitloc/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hitloc/errors.hpp"
#include "hitloc/kernels.hpp"
#include "hitloc/quadrature.hpp"
#include "hitloc/special_functions.hpp"

namespace hitloc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

void require_positive_drift(const NdfhlParams& params, const char* what) {
  params.validate();
  if (!(params.u > 0.0)) throw DomainError(std::string(what) + ": requires u > 0");
}

void require_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("entropy: tol must be finite and > 0");
}

EntropyEstimate cauchy_quadrature(const NdfhlParams& params, double tol) {
  const int p = params.p();
  const double a = 0.5 * (p + 1);
  const double log_c = log_gamma(a) - a * std::log(kPi);
  const double c = std::exp(log_c);
  const double surface = sphere_surface_area(p);
  const double log_scale = log_c - p * std::log(params.lambda);
  // With r = lambda tan(theta): r^{p-1} f dr = c sin^{p-1}(theta) dtheta and
  // log f = log_scale + (p + 1) log cos(theta). The log singularity at
  // pi/2 is integrable.
  Integrand integrand = [=](double theta) {
    const double s = std::sin(theta);
    const double weight = p == 1 ? 1.0 : std::pow(s, p - 1);
    return -surface * c * weight * (log_scale + (p + 1) * std::log(std::cos(theta)));
  };
  QuadratureOptions opts;
  opts.abs_tol = 0.5 * tol;
  const double pts[] = {0.0, 0.25 * kPi, 0.5 * kPi};
  const QuadratureResult q = integrate(integrand, std::span<const double>(pts), opts);
  return EntropyEstimate{q.value, EntropyMethod::quadrature, q.abs_error, params};
}

}  // namespace

std::string_view method_name(EntropyMethod method) {
  switch (method) {
    case EntropyMethod::quadrature: return "quadrature";
    case EntropyMethod::monte_carlo: return "monte_carlo";
    case EntropyMethod::closed_form_d3: return "closed_form_d3";
    case EntropyMethod::bound_lower: return "bound_lower";
    case EntropyMethod::bound_upper: return "bound_upper";
    case EntropyMethod::closed_form_cauchy: return "closed_form_cauchy";
  }
  return "unknown";
}

EntropyEstimate entropy_quadrature(const NdfhlParams& params, double tol) {
  params.validate();
  require_tol(tol);
  if (params.u == 0.0) return cauchy_quadrature(params, tol);

  const int p = params.p();
  const double lambda = params.lambda;
  const double u = params.u;
  const double surface = sphere_surface_area(p);

  auto radial_term = [&](double r) {
    const double lf = log_pdf_radial(params, r);
    const double f = std::exp(lf);
    if (f == 0.0) return 0.0;
    const double jac = p == 1 ? 1.0 : std::pow(r, p - 1);
    return -surface * jac * f * lf;
  };

  std::vector<double> pts = {0.0};
  // Gaussian core of width sqrt(lambda / u) when the drift dominates.
  const double core = std::sqrt(lambda / u);
  for (double m : {1.0, 3.0, 6.0}) {
    if (m * core < lambda) pts.push_back(m * core);
  }
  pts.push_back(lambda);
  const double r_body = std::max(lambda, 5.0 / u);
  for (double r = 2.0 * lambda; r < r_body; r *= 2.0) pts.push_back(r);
  if (r_body > pts.back()) pts.push_back(r_body);

  // Past r_body the integrand decays at least like e^{-u r}, so its remainder
  // beyond R is bounded by ~ |integrand(R)| * 2 / u.
  double r_cut = r_body;
  double tail_bound = std::abs(radial_term(r_cut)) * 2.0 / u;
  for (int i = 0; i < 200 && tail_bound > 0.1 * tol; ++i) {
    r_cut *= 2.0;
    tail_bound = std::abs(radial_term(r_cut)) * 2.0 / u;
  }
  if (tail_bound > 0.1 * tol) throw ConvergenceError("entropy_quadrature: tail envelope never met tol");
  const double r_star = 2.0 * r_cut;
  for (double r = 2.0 * pts.back(); r < r_star; r *= 2.0) pts.push_back(r);
  pts.push_back(r_star);

  QuadratureOptions opts;
  opts.abs_tol = 0.5 * tol;
  opts.max_intervals = 8000;
  const QuadratureResult q = integrate(radial_term, std::span<const double>(pts), opts);
  const double truncation = std::abs(radial_term(r_star)) * 2.0 / u;
  return EntropyEstimate{q.value, EntropyMethod::quadrature, q.abs_error + truncation, params};
}

EntropyEstimate entropy_mc(const NdfhlParams& params, std::size_t n_samples, std::uint64_t seed) {
  require_positive_drift(params, "entropy_mc");
  if (n_samples < 10000) throw DomainError("entropy_mc: n_samples must be >= 10^4");
  const SampleBatch batch = sample(params, n_samples, seed);
  const kernels::MeanVariance mv = kernels::row_statistics(batch.points, params.p(), [&params](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return -log_pdf_radial(params, std::sqrt(s));
  });
  return EntropyEstimate{mv.mean, EntropyMethod::monte_carlo, std::sqrt(mv.variance / static_cast<double>(mv.count)),
                         params};
}

EntropyEstimate entropy_closed_form_d3(double lambda, double u) {
  const NdfhlParams params{3, lambda, u};
  require_positive_drift(params, "entropy_closed_form_d3");
  const double s = lambda * u;
  // -s e^s (e Ei(-1-s) - 3 Ei(-s)) with Ei(-x) = -E1(x), written through
  // e^x E1(x) so nothing overflows for large s.
  const double ei_term = s * (exp_integral_e1_scaled(1.0 + s) - 3.0 * exp_integral_e1_scaled(s));
  const double h = std::log(2.0 * kPi) + 3.0 + 2.0 * std::log(lambda) - std::log1p(s) + ei_term;
  return EntropyEstimate{h, EntropyMethod::closed_form_d3, 0.0, params};
}

EntropyEstimate entropy_lower(const NdfhlParams& params, double tol) {
  require_positive_drift(params, "entropy_lower");
  const double half_p = 0.5 * params.p();
  const double h = half_p * std::log(2.0 * kPi * kE) + half_p * ig_mean_log(params.mixing(), tol);
  return EntropyEstimate{h, EntropyMethod::bound_lower, 0.0, params};
}

EntropyEstimate entropy_upper(const NdfhlParams& params) {
  require_positive_drift(params, "entropy_upper");
  const double h = 0.5 * params.p() * std::log(2.0 * kPi * kE * params.lambda / params.u);
  return EntropyEstimate{h, EntropyMethod::bound_upper, 0.0, params};
}

double jensen_gap(const NdfhlParams& params, double tol) {
  require_positive_drift(params, "jensen_gap");
  const double gap = 0.5 * params.p() * (std::log(params.lambda / params.u) - ig_mean_log(params.mixing(), tol));
  return std::max(gap, 0.0);
}

double mutual_info_TN(const NdfhlParams& params, double tol) {
  require_positive_drift(params, "mutual_info_TN");
  const double h = entropy_quadrature(params, tol).value;
  return std::max(h - entropy_lower(params).value, 0.0);
}

EntropyEstimate noise_entropy(const NdfhlParams& params, double tol) {
  params.validate();
  if (params.u == 0.0) {
    return EntropyEstimate{cauchy_entropy(params.p(), params.lambda), EntropyMethod::closed_form_cauchy, 0.0, params};
  }
  if (params.d == 3) return entropy_closed_form_d3(params.lambda, params.u);
  return entropy_quadrature(params, tol);
}

}  // namespace hitloc
