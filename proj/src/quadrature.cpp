#include "hitloc/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "hitloc/errors.hpp"

namespace hitloc {

namespace {

constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Panel {
  double a;
  double b;
  double value;
  double error;
  double resabs;
  bool operator<(const Panel& other) const { return error < other.error; }
};

// QUADPACK qk15 rule with its error heuristic.
Panel gauss_kronrod15(const Integrand& f, double a, double b) {
  const double centr = 0.5 * (a + b);
  const double hlgth = 0.5 * (b - a);
  const double fc = f(centr);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::abs(resk);
  std::array<double, 7> fv1{};
  std::array<double, 7> fv2{};
  for (int j = 0; j < 7; ++j) {
    const double absc = hlgth * kXgk[j];
    const double f1 = f(centr - absc);
    const double f2 = f(centr + absc);
    fv1[j] = f1;
    fv2[j] = f2;
    resk += kWgk[j] * (f1 + f2);
    resabs += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::abs(fc - reskh);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

  const double scale = std::abs(hlgth);
  Panel p{a, b, resk * hlgth, std::abs((resk - resg) * hlgth), resabs * scale};
  resasc *= scale;
  if (resasc != 0.0 && p.error != 0.0) p.error = resasc * std::min(1.0, std::pow(200.0 * p.error / resasc, 1.5));
  if (p.resabs > std::numeric_limits<double>::min() / (50.0 * kEps)) p.error = std::max(50.0 * kEps * p.resabs, p.error);
  if (!std::isfinite(p.value) || !std::isfinite(p.error)) throw ConvergenceError("integrate: non-finite integrand value");
  return p;
}

}  // namespace

QuadratureResult integrate(const Integrand& f, std::span<const double> breakpoints, const QuadratureOptions& opts) {
  if (breakpoints.size() < 2) throw DomainError("integrate: need at least two breakpoints");
  if (!std::is_sorted(breakpoints.begin(), breakpoints.end())) throw DomainError("integrate: breakpoints must be sorted");
  for (double x : breakpoints) {
    if (!std::isfinite(x)) throw DomainError("integrate: breakpoints must be finite");
  }

  std::priority_queue<Panel> queue;
  QuadratureResult out;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (breakpoints[i + 1] == breakpoints[i]) continue;
    queue.push(gauss_kronrod15(f, breakpoints[i], breakpoints[i + 1]));
    out.evaluations += 15;
  }
  if (queue.empty()) return out;

  auto totals = [&queue]() {
    // priority_queue hides its container; copy is cheap relative to f evals
    auto copy = queue;
    double value = 0.0, error = 0.0, resabs = 0.0;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      resabs += copy.top().resabs;
      copy.pop();
    }
    return std::array<double, 3>{value, error, resabs};
  };

  double value = 0.0, error = 0.0, resabs = 0.0;
  {
    auto t = totals();
    value = t[0];
    error = t[1];
    resabs = t[2];
  }

  auto target = [&]() { return std::max({opts.abs_tol, opts.rel_tol * std::abs(value), 50.0 * kEps * resabs}); };

  int since_resum = 0;
  while (error > target()) {
    if (static_cast<int>(queue.size()) >= opts.max_intervals) {
      throw ConvergenceError("integrate: interval budget exhausted (error " + std::to_string(error) + ")");
    }
    Panel worst = queue.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) || (worst.b - worst.a) < 1e3 * kEps * std::max(std::abs(worst.a), std::abs(worst.b))) {
      // Cannot refine further; accept only if this panel is at its roundoff floor.
      if (worst.error <= 100.0 * kEps * worst.resabs) break;
      throw ConvergenceError("integrate: panel too narrow to refine");
    }
    queue.pop();
    Panel left = gauss_kronrod15(f, worst.a, mid);
    Panel right = gauss_kronrod15(f, mid, worst.b);
    out.evaluations += 30;
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    resabs += left.resabs + right.resabs - worst.resabs;
    queue.push(left);
    queue.push(right);
    if (++since_resum == 64) {
      auto t = totals();
      value = t[0];
      error = t[1];
      resabs = t[2];
      since_resum = 0;
    }
  }

  auto t = totals();
  out.value = t[0];
  out.abs_error = t[1];
  out.intervals = static_cast<int>(queue.size());
  return out;
}

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureOptions& opts) {
  if (a > b) {
    QuadratureResult r = integrate(f, b, a, opts);
    r.value = -r.value;
    return r;
  }
  const std::array<double, 2> pts = {a, b};
  return integrate(f, std::span<const double>(pts), opts);
}

QuadratureResult integrate_upper_tail(const Integrand& f, double a, double scale, const QuadratureOptions& opts) {
  if (!(scale > 0.0)) throw DomainError("integrate_upper_tail: scale must be > 0");
  Integrand g = [&f, a, scale](double s) {
    const double one_minus = 1.0 - s;
    return f(a + scale * s / one_minus) * scale / (one_minus * one_minus);
  };
  return integrate(g, 0.0, 1.0, opts);
}

QuadratureResult integrate_lower_tail(const Integrand& f, double b, double scale, const QuadratureOptions& opts) {
  if (!(scale > 0.0)) throw DomainError("integrate_lower_tail: scale must be > 0");
  Integrand g = [&f, b, scale](double s) {
    const double one_minus = 1.0 - s;
    return f(b - scale * s / one_minus) * scale / (one_minus * one_minus);
  };
  return integrate(g, 0.0, 1.0, opts);
}

}  // namespace hitloc
