#pragma once

namespace hitloc {

/// Tolerance and term budget shared by the series and continued fractions
/// in this header.
struct AccuracyPolicy {
  double rel_tol = 1e-12;
  int max_terms = 500;

  /// Throws DomainError unless 0 < rel_tol < 1e-6 and max_terms >= 50.
  void validate() const;
};

/// Modified Bessel function of the second kind K_order(x), order >= 0, x > 0.
/// Half-integer orders use the terminating closed form.
double bessel_k(double order, double x, const AccuracyPolicy& policy = {});

/// e^x K_order(x). Finite for all x > 0 where K itself underflows.
double bessel_k_scaled(double order, double x, const AccuracyPolicy& policy = {});

/// log K_order(x), evaluated through the scaled form.
double log_bessel_k(double order, double x, const AccuracyPolicy& policy = {});

/// Digamma psi(x). Throws DomainError at x in {0, -1, -2, ...}.
double digamma(double x, const AccuracyPolicy& policy = {});

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Exponential integral Ei(x), principal value; Ei(x) = -E1(-x) for x < 0.
/// Throws DomainError at x = 0.
double exp_integral_ei(double x, const AccuracyPolicy& policy = {});

/// E1(x) = int_x^inf e^{-t}/t dt, x > 0.
double exp_integral_e1(double x, const AccuracyPolicy& policy = {});

/// e^x E1(x), x > 0. Stays O(1/x) for large x.
double exp_integral_e1_scaled(double x, const AccuracyPolicy& policy = {});

/// Surface measure of the unit sphere in R^p: 2 pi^{p/2} / Gamma(p/2).
double sphere_surface_area(int p);

}  // namespace hitloc
