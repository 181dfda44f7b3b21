#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "hitloc/errors.hpp"
#include "hitloc/quadrature.hpp"

using namespace hitloc;

TEST_CASE("low-degree polynomials are exact on one panel") {
  const QuadratureResult r = integrate([](double x) { return 3.0 * x * x - 2.0 * x + 1.0; }, -1.0, 2.0);
  CHECK(r.value == doctest::Approx(9.0 - 3.0 + 3.0).epsilon(1e-15));
  CHECK(r.intervals == 1);
  CHECK(r.evaluations == 15);
}

TEST_CASE("smooth integrands meet the absolute tolerance") {
  QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  const QuadratureResult r = integrate([](double x) { return std::cos(50.0 * x); }, 0.0, 1.0, opts);
  CHECK(std::abs(r.value - std::sin(50.0) / 50.0) < 1e-12);
  CHECK(r.abs_error <= 1e-12);
  CHECK(r.intervals > 1);
}

TEST_CASE("integrable endpoint singularity") {
  QuadratureOptions opts;
  opts.abs_tol = 1e-9;
  const QuadratureResult r = integrate([](double x) { return std::log(x); }, 0.0, 1.0, opts);
  CHECK(std::abs(r.value + 1.0) < 1e-9);
}

TEST_CASE("reversed limits flip the sign") {
  const auto f = [](double x) { return std::exp(x); };
  CHECK(integrate(f, 1.0, 0.0).value == doctest::Approx(-(std::numbers::e - 1.0)).epsilon(1e-14));
}

TEST_CASE("breakpoints isolate a kink") {
  const std::vector<double> pts = {-1.0, 0.0, 2.0};
  const QuadratureResult r = integrate([](double x) { return std::abs(x); }, std::span<const double>(pts));
  CHECK(r.value == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(r.intervals == 2);
}

TEST_CASE("semi-infinite tails") {
  QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  const double upper = integrate_upper_tail([](double x) { return std::exp(-x * x); }, 0.0, 1.0, opts).value;
  CHECK(std::abs(upper - 0.5 * std::sqrt(std::numbers::pi)) < 1e-12);
  const double lower = integrate_lower_tail([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, 1.0, opts).value;
  CHECK(std::abs(lower - 0.5 * std::numbers::pi) < 1e-11);
}

TEST_CASE("budget exhaustion and bad input raise") {
  QuadratureOptions tight;
  tight.abs_tol = 1e-14;
  tight.max_intervals = 5;
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / x); }, 1e-3, 1.0, tight), ConvergenceError);
  CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), ConvergenceError);
  const std::vector<double> unsorted = {0.0, 2.0, 1.0};
  CHECK_THROWS_AS(integrate([](double x) { return x; }, std::span<const double>(unsorted)), DomainError);
  const std::vector<double> single = {0.0};
  CHECK_THROWS_AS(integrate([](double x) { return x; }, std::span<const double>(single)), DomainError);
  CHECK_THROWS_AS(integrate_upper_tail([](double x) { return x; }, 0.0, 0.0), DomainError);
}
