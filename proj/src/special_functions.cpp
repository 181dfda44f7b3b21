#include "hitloc/special_functions.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "hitloc/errors.hpp"

namespace hitloc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEuler = std::numbers::egamma;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + ": non-finite argument");
  }
}

// Taylor coefficients of 1/Gamma(z) = sum_k c_k z^k (A&S 6.1.34), c_1 = 1.
constexpr std::array<double, 26> kRecipGamma = {
    1.0,
    0.5772156649015329,
    -0.6558780715202538,
    -0.0420026350340952,
    0.1665386113822915,
    -0.0421977345555443,
    -0.0096219715278770,
    0.0072189432466630,
    -0.0011651675918591,
    -0.0002152416741149,
    0.0001280502823882,
    -0.0000201348547807,
    -0.0000012504934821,
    0.0000011330272320,
    -0.0000002056338417,
    0.0000000061160950,
    0.0000000050020075,
    -0.0000000011812746,
    0.0000000001043427,
    0.0000000000077823,
    -0.0000000000036968,
    0.0000000000005100,
    -0.0000000000000206,
    -0.0000000000000054,
    0.0000000000000014,
    0.0000000000000001,
};

// Temme's auxiliary functions for |mu| <= 1/2:
//   gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu)
//   gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2
// With 1/Gamma(1+mu) = sum_k c_k mu^{k-1}, odd and even parts separate cleanly.
struct TemmeGammas {
  double gam1;
  double gam2;
  double gampl;  // 1/Gamma(1+mu)
  double gammi;  // 1/Gamma(1-mu)
};

TemmeGammas temme_gammas(double mu) {
  double even = 0.0;  // sum over even k of c_k mu^{k-2}
  double odd = 0.0;   // sum over odd k of c_k mu^{k-1}
  const double mu2 = mu * mu;
  double pw = 1.0;
  for (std::size_t i = 0; i < kRecipGamma.size(); i += 2) {
    odd += kRecipGamma[i] * pw;
    if (i + 1 < kRecipGamma.size()) even += kRecipGamma[i + 1] * pw;
    pw *= mu2;
  }
  TemmeGammas g{};
  g.gam1 = -even;
  g.gam2 = odd;
  g.gampl = odd + mu * even;
  g.gammi = odd - mu * even;
  return g;
}

bool is_half_integer(double order) {
  const double twice = 2.0 * order;
  return twice == std::floor(twice) && std::fmod(twice, 2.0) == 1.0;
}

// sqrt(pi/2x) * sum_{k=0}^{n} (n+k)! / (k! (n-k)!) (2x)^{-k}, order = n + 1/2.
double half_integer_k_scaled(double order, double x) {
  const int n = static_cast<int>(order - 0.5);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= n; ++k) {
    // ratio a_k / a_{k-1} = (n+k)(n-k+1) / (k * 2x)
    term *= static_cast<double>((n + k) * (n - k + 1)) / (2.0 * k * x);
    sum += term;
  }
  return std::sqrt(kPi / (2.0 * x)) * sum;
}

// e^x K_order(x) for general order via Temme (x <= 2) or Steed's CF2 (x > 2)
// at the fractional order mu in [-1/2, 1/2], then upward recurrence.
double temme_steed_k_scaled(double order, double x, const AccuracyPolicy& policy) {
  const int nl = static_cast<int>(order + 0.5);
  const double mu = order - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;
  const double eps = std::min(policy.rel_tol, 1e-15);
  double kmu = 0.0;
  double k1 = 0.0;

  if (x <= 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = std::abs(pimu) < 1e-16 ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < 1e-16 ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    int i = 1;
    for (; i <= policy.max_terms; ++i) {
      ff = (i * ff + p + q) / (i * static_cast<double>(i) - mu2);
      c *= d / i;
      p /= (i - mu);
      q /= (i + mu);
      const double del = c * ff;
      sum += del;
      sum1 += c * (p - i * ff);
      if (std::abs(del) < std::abs(sum) * eps) break;
    }
    if (i > policy.max_terms) throw ConvergenceError("bessel_k: Temme series did not converge");
    const double scale = std::exp(x);
    kmu = sum * scale;
    k1 = sum1 * xi2 * scale;
  } else {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= policy.max_terms; ++i) {
      a -= 2 * (i - 1);
      c = -a * c / i;
      const double qnew = (q1 - b * q2) / a;
      q1 = q2;
      q2 = qnew;
      q += c * qnew;
      b += 2.0;
      d = 1.0 / (b + a * d);
      delh = (b * d - 1.0) * delh;
      h += delh;
      const double dels = q * delh;
      s += dels;
      if (std::abs(dels / s) < eps) break;
    }
    if (i > policy.max_terms) throw ConvergenceError("bessel_k: Steed continued fraction did not converge");
    h = a1 * h;
    kmu = std::sqrt(kPi / (2.0 * x)) / s;
    k1 = kmu * (mu + x + 0.5 - h) * xi;
  }

  for (int i = 1; i <= nl; ++i) {
    const double next = (mu + i) * xi2 * k1 + kmu;
    kmu = k1;
    k1 = next;
  }
  return kmu;
}

void check_bessel_args(double order, double x) {
  require_finite(order, "bessel_k");
  require_finite(x, "bessel_k");
  if (x <= 0.0) throw DomainError("bessel_k: x must be > 0");
  if (order < 0.0) throw DomainError("bessel_k: order must be >= 0");
}

}  // namespace

void AccuracyPolicy::validate() const {
  if (!(rel_tol > 0.0 && rel_tol < 1e-6)) throw DomainError("AccuracyPolicy: rel_tol must lie in (0, 1e-6)");
  if (max_terms < 50) throw DomainError("AccuracyPolicy: max_terms must be >= 50");
}

double bessel_k_scaled(double order, double x, const AccuracyPolicy& policy) {
  policy.validate();
  check_bessel_args(order, x);
  if (is_half_integer(order)) return half_integer_k_scaled(order, x);
  return temme_steed_k_scaled(order, x, policy);
}

double bessel_k(double order, double x, const AccuracyPolicy& policy) {
  return bessel_k_scaled(order, x, policy) * std::exp(-x);
}

double log_bessel_k(double order, double x, const AccuracyPolicy& policy) {
  return std::log(bessel_k_scaled(order, x, policy)) - x;
}

double digamma(double x, const AccuracyPolicy& policy) {
  policy.validate();
  require_finite(x, "digamma");
  if (x <= 0.0 && x == std::floor(x)) throw DomainError("digamma: pole at non-positive integer");
  if (x < 0.0) {
    // psi(x) = psi(1 - x) - pi cot(pi x)
    return digamma(1.0 - x, policy) - kPi / std::tan(kPi * x);
  }
  double acc = 0.0;
  while (x < 10.0) {
    acc -= 1.0 / x;
    x += 1.0;
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  // Bernoulli tail: 1/12, -1/120, 1/252, -1/240, 1/132, -691/32760
  const double tail =
      inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * 691.0 / 32760)))));
  return acc + std::log(x) - 0.5 * inv - tail;
}

double log_gamma(double x) {
  require_finite(x, "log_gamma");
  if (x <= 0.0) throw DomainError("log_gamma: x must be > 0");
  double shift = 0.0;
  if (x < 12.0) {
    double prod = 1.0;
    while (x < 12.0) {
      prod *= x;
      x += 1.0;
    }
    shift = std::log(prod);
  }
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12 - inv2 * (1.0 / 360 - inv2 * (1.0 / 1260 - inv2 * (1.0 / 1680 - inv2 * (1.0 / 1188)))));
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * kPi) + series - shift;
}

double exp_integral_e1_scaled(double x, const AccuracyPolicy& policy) {
  policy.validate();
  require_finite(x, "exp_integral_e1");
  if (x <= 0.0) throw DomainError("exp_integral_e1: x must be > 0");
  if (x <= 1.0) {
    // E1(x) = -gamma - ln x - sum_{k>=1} (-x)^k / (k k!)
    double sum = 0.0;
    double term = 1.0;
    int k = 1;
    for (; k <= policy.max_terms; ++k) {
      term *= -x / k;
      const double del = term / k;
      sum += del;
      if (std::abs(del) < policy.rel_tol * 1e-3 * std::abs(sum) + 1e-300) break;
    }
    if (k > policy.max_terms) throw ConvergenceError("exp_integral_e1: series did not converge");
    return std::exp(x) * (-kEuler - std::log(x) - sum);
  }
  // Modified Lentz on the continued fraction for e^x E1(x).
  constexpr double tiny = 1e-300;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  int i = 1;
  for (; i <= policy.max_terms; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) break;
  }
  if (i > policy.max_terms) throw ConvergenceError("exp_integral_e1: continued fraction did not converge");
  return h;
}

double exp_integral_e1(double x, const AccuracyPolicy& policy) {
  return exp_integral_e1_scaled(x, policy) * std::exp(-x);
}

double exp_integral_ei(double x, const AccuracyPolicy& policy) {
  policy.validate();
  require_finite(x, "exp_integral_ei");
  if (x == 0.0) throw DomainError("exp_integral_ei: logarithmic singularity at 0");
  if (x < 0.0) return -exp_integral_e1(-x, policy);
  if (x <= 40.0) {
    // Ei(x) = gamma + ln x + sum_{k>=1} x^k / (k k!)
    double sum = 0.0;
    double term = 1.0;
    int k = 1;
    for (; k <= policy.max_terms; ++k) {
      term *= x / k;
      const double del = term / k;
      sum += del;
      if (del < 1e-17 * sum) break;
    }
    if (k > policy.max_terms) throw ConvergenceError("exp_integral_ei: series did not converge");
    return kEuler + std::log(x) + sum;
  }
  // Asymptotic e^x/x * sum k!/x^k, stopped at the smallest term.
  double sum = 1.0;
  double term = 1.0;
  for (int k = 1; k <= policy.max_terms; ++k) {
    const double next = term * k / x;
    if (next > term) break;
    term = next;
    sum += term;
    if (term < 1e-17 * sum) break;
  }
  return std::exp(x) / x * sum;
}

double sphere_surface_area(int p) {
  if (p < 1) throw DomainError("sphere_surface_area: p must be >= 1");
  const double half = 0.5 * p;
  return 2.0 * std::exp(half * std::log(kPi) - log_gamma(half));
}

}  // namespace hitloc
