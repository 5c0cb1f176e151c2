#pragma once

// Real-argument special functions used by the closed-form evaluators.
//
// Everything here is pure; domain violations throw std::domain_error and
// unrepresentable results throw std::range_error.

namespace risnoma::specfun {

/// Gamma function for x > 0.
double gamma_fn(double x);

/// log Gamma(x) for x > 0.
double log_gamma(double x);

/// Lower incomplete gamma: integral of e^-t t^(a-1) over [0, x].
double lower_incomplete_gamma(double a, double x);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
/// Preferred inside the closed forms since it stays finite for large a.
double regularized_lower_gamma(double a, double x);

/// Modified Bessel function of the second kind K_nu(x), x > 0.
/// Throws std::range_error when the result leaves the normal double range,
/// which happens for x below roughly 1e-300^(1/|nu|) (overflow) or
/// x above ~700 (underflow).
double bessel_k(double nu, double x);

/// Modified Bessel function of the first kind, orders 0 and 1 only.
double bessel_i(int n, double x);

/// L_{1/2}(-kappa) = e^{-kappa/2} [(1+kappa) I0(kappa/2) + kappa I1(kappa/2)].
double laguerre_half_neg(double kappa);

struct Hyp2F1Unit {
  double value = 0.0;
  // Set when c - a - b <= 0: the series diverges at 1 and `value` is the
  // truncated series evaluated at 1 - eps instead.
  bool divergent = false;
};

/// Gauss hypergeometric 2F1(a, b; c; 1).
Hyp2F1Unit gauss_2f1_unit(double a, double b, double c, double eps = 1e-6);

}  // namespace risnoma::specfun
