#include "risnoma/channel.hpp"

#include "risnoma/specfun.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace risnoma {

namespace {

constexpr double kTiny = 1e-300;

double clamp_tiny(double x) { return x < kTiny ? 0.0 : x; }

}  // namespace

void check_fading(const FadingParams& fp) {
  if (!(fp.kappa >= 0.0)) throw std::invalid_argument("fading: kappa must be >= 0");
  if (!(fp.m_na >= 0.5)) throw std::invalid_argument("fading: m_na must be >= 0.5");
  if (!(fp.omega_na > 0.0)) throw std::invalid_argument("fading: omega_na must be > 0");
}

double draw_nakagami(const FadingParams& fp, PhiloxStream& rng) {
  std::gamma_distribution<double> g(fp.m_na, fp.omega_na / fp.m_na);
  return clamp_tiny(std::sqrt(g(rng)));
}

double draw_rician(double kappa, PhiloxStream& rng) {
  std::normal_distribution<double> n01;
  const double los = std::sqrt(kappa / (kappa + 1.0));
  const double s = std::sqrt(0.5 / (kappa + 1.0));
  const double re = los + s * n01(rng);
  const double im = s * n01(rng);
  return clamp_tiny(std::hypot(re, im));
}

double cascade_mean(const FadingParams& fp) {
  const double k = fp.kappa;
  const double m = fp.m_na;
  // Gamma(m + 1/2) / Gamma(m) / sqrt(m) in log space; it tends to 1 as m grows.
  const double ratio = std::exp(std::lgamma(m + 0.5) - std::lgamma(m) - 0.5 * std::log(m));
  return std::sqrt(std::numbers::pi / (4.0 * (k + 1.0))) * ratio * specfun::laguerre_half_neg(k);
}

double cascade_variance(const FadingParams& fp) {
  const double e = cascade_mean(fp);
  const double d = 1.0 - e * e;
  if (!(d > 0.0)) {
    throw std::domain_error("cascade_variance: non-positive variance, fading parameters too close to deterministic");
  }
  return d;
}

CascadeApprox fit_cascade(const FadingParams& fp, int n_elems) {
  if (n_elems < 1) throw std::invalid_argument("fit_cascade: n_elems must be >= 1");
  check_fading(fp);
  CascadeApprox ca;
  ca.e = cascade_mean(fp);
  ca.d = cascade_variance(fp);
  ca.n_elems = n_elems;
  ca.a = n_elems * ca.e * ca.e / ca.d - 1.0;
  ca.b = ca.d / ca.e;
  return ca;
}

double approx_zeta_pdf(double x, const CascadeApprox& ca) {
  if (!(x > 0.0)) return 0.0;
  const double s = std::sqrt(x);
  const double lp = 0.5 * (ca.a - 1.0) * std::log(x) - std::log(2.0) - (ca.a + 1.0) * std::log(ca.b) -
                    std::lgamma(ca.a + 1.0) - s / ca.b;
  return std::exp(lp);
}

double approx_zeta_cdf(double x, const CascadeApprox& ca) {
  if (!(x > 0.0)) return 0.0;
  return specfun::regularized_lower_gamma(ca.a + 1.0, std::sqrt(x) / ca.b);
}

TrialDraw draw_trial(const DrawShape& shape, PhiloxStream& rng) {
  const int N = shape.N;
  const int M = shape.M;
  FadingParams unit = shape.fading;
  unit.omega_na = 1.0;

  double h1[1024];
  double g1[1024];
  if (N > 1024 || M > 1024) throw std::invalid_argument("draw_trial: at most 1024 elements per RIS");

  for (int i = 0; i < N; ++i) h1[i] = draw_nakagami(unit, rng);
  double sum_h = 0.0;
  for (int i = 0; i < N; ++i) sum_h += h1[i] * draw_rician(shape.fading.kappa, rng);
  for (int i = 0; i < M; ++i) g1[i] = draw_rician(shape.fading.kappa, rng);

  TrialDraw t;
  double sum_n = 0.0;
  double norm_n = 0.0;
  for (int i = 0; i < M; ++i) {
    const double u = draw_nakagami(unit, rng);
    sum_n += g1[i] * u;
    norm_n += u * u;
  }
  double sum_m = 0.0;
  double norm_m = 0.0;
  for (int i = 0; i < M; ++i) {
    const double u = draw_nakagami(unit, rng);
    sum_m += g1[i] * u;
    norm_m += u * u;
  }
  std::exponential_distribution<double> expo(1.0);
  t.zeta_h = sum_h * sum_h;
  t.zeta_g_n = sum_n * sum_n;
  t.zeta_g_m = sum_m * sum_m;
  t.g_norm_sq_n = shape.fading.omega_na * norm_n;
  t.g_norm_sq_m = shape.fading.omega_na * norm_m;
  t.h_ri_sq = shape.omega_ri * expo(rng);
  return t;
}

SeriesValue exact_cascade_pdf(double y, const FadingParams& fp, int terms) {
  if (!(y > 0.0)) throw std::domain_error("exact_cascade_pdf: y must be positive");
  if (terms < 1) throw std::domain_error("exact_cascade_pdf: terms must be >= 1");
  const double k = fp.kappa;
  const double mn = fp.m_na;
  const double c = (k + 1.0) * mn;
  const double arg = 2.0 * y * std::sqrt(c);
  const double log_y = std::log(y);
  const double log_c = std::log(c);

  SeriesValue out;
  double last = 0.0;
  const int cap = (k == 0.0) ? 1 : terms;
  for (int m = 0; m < cap; ++m) {
    const double kv = std::cyl_bessel_k(std::fabs(m - mn + 1.0), arg);
    if (!std::isfinite(kv) || kv == 0.0) break;
    double lt = std::log(4.0) + (m + mn) * log_y + 0.5 * (1.0 + m + mn) * log_c - k -
                2.0 * std::lgamma(m + 1.0) - std::lgamma(mn) + std::log(kv);
    if (m > 0) lt += m * std::log(k);
    last = std::exp(lt);
    out.value += last;
    out.terms_used = m + 1;
    if (m > 0 && last < 1e-12 * out.value) break;
  }
  out.truncated = (k > 0.0) && last > 1e-10 * out.value;
  return out;
}

}  // namespace risnoma
