#include "risnoma/specfun.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace risnoma::specfun {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

// e^{-x} I_nu(x) for large x (Hankel expansion, 6 terms).
double scaled_bessel_i_asymptotic(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= 6; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= -(mu - odd * odd) / (k * 8.0 * x);
    sum += term;
  }
  return sum / std::sqrt(2.0 * std::numbers::pi * x);
}

}  // namespace

double gamma_fn(double x) {
  require(x > 0.0, "gamma_fn: argument must be positive");
  return std::tgamma(x);
}

double log_gamma(double x) {
  require(x > 0.0, "log_gamma: argument must be positive");
  return std::lgamma(x);
}

double lower_incomplete_gamma(double a, double x) {
  require(a > 0.0, "lower_incomplete_gamma: a must be positive");
  require(x >= 0.0, "lower_incomplete_gamma: x must be nonnegative");
  if (x == 0.0) return 0.0;
  return boost::math::tgamma_lower(a, x);
}

double regularized_lower_gamma(double a, double x) {
  require(a > 0.0, "regularized_lower_gamma: a must be positive");
  require(x >= 0.0, "regularized_lower_gamma: x must be nonnegative");
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  return boost::math::gamma_p(a, x);
}

double bessel_k(double nu, double x) {
  require(x > 0.0, "bessel_k: x must be positive");
  const double v = std::cyl_bessel_k(std::fabs(nu), x);
  if (!std::isfinite(v) || !std::isnormal(v)) {
    throw std::range_error("bessel_k: result outside double range at x=" + std::to_string(x));
  }
  return v;
}

double bessel_i(int n, double x) {
  require(n == 0 || n == 1, "bessel_i: only orders 0 and 1 are supported");
  require(x >= 0.0, "bessel_i: x must be nonnegative");
  return std::cyl_bessel_i(static_cast<double>(n), x);
}

double laguerre_half_neg(double kappa) {
  require(kappa >= 0.0, "laguerre_half_neg: kappa must be nonnegative");
  const double h = 0.5 * kappa;
  double i0s;
  double i1s;
  if (h > 500.0) {
    i0s = scaled_bessel_i_asymptotic(0, h);
    i1s = scaled_bessel_i_asymptotic(1, h);
  } else {
    const double damp = std::exp(-h);
    i0s = damp * std::cyl_bessel_i(0.0, h);
    i1s = damp * std::cyl_bessel_i(1.0, h);
  }
  return (1.0 + kappa) * i0s + kappa * i1s;
}

Hyp2F1Unit gauss_2f1_unit(double a, double b, double c, double eps) {
  require(c > 0.0, "gauss_2f1_unit: c must be positive");
  require(eps > 0.0 && eps <= 1e-3, "gauss_2f1_unit: eps must lie in (0, 1e-3]");

  if (a == 0.0 || b == 0.0) return {1.0, false};

  const double s = c - a - b;
  if (s > 0.0) {
    // Gauss summation; 1/Gamma vanishes at the poles of c-a and c-b.
    auto is_pole = [](double x) { return x <= 0.0 && x == std::floor(x); };
    if (is_pole(c - a) || is_pole(c - b)) return {0.0, false};
    int s1 = 1;
    int s2 = 1;
    int s3 = 1;
    int s4 = 1;
    const double lg = boost::math::lgamma(c, &s1) + boost::math::lgamma(s, &s2) -
                      boost::math::lgamma(c - a, &s3) - boost::math::lgamma(c - b, &s4);
    return {s1 * s2 * s3 * s4 * std::exp(lg), false};
  }

  // Regularized evaluation: direct series at z = 1 - eps. Terms decay like
  // z^k k^(-s-1), so ~40/eps terms bound the tail below 1e-17.
  const double z = 1.0 - eps;
  const auto max_terms = static_cast<long long>(std::min(40.0 / eps, 5e8));
  double term = 1.0;
  double sum = 1.0;
  double comp = 0.0;
  for (long long k = 0; k < max_terms; ++k) {
    const double kk = static_cast<double>(k);
    term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * z;
    if (term == 0.0) break;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (std::fabs(term) < 1e-17 * std::fabs(sum) && kk > 1.0 / eps) break;
  }
  return {sum, true};
}

}  // namespace risnoma::specfun
