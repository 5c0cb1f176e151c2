#pragma once

#include "risnoma/rng.hpp"

namespace risnoma {

struct FadingParams {
  double kappa = 0.316227766016838;  // linear Rician factor
  double m_na = 1.0;                 // Nakagami shape
  double omega_na = 1.0;             // Nakagami spread

  bool operator==(const FadingParams&) const = default;
};

/// Throws std::invalid_argument unless kappa >= 0, m_na >= 0.5, omega_na > 0.
void check_fading(const FadingParams& fp);

// Moment-matched Gamma model of the square root of a coherent cascade sum.
// sqrt(zeta) is treated as Gamma(a + 1, b).
struct CascadeApprox {
  double e = 0.0;  // mean of one |h1 h2| term
  double d = 0.0;  // variance of one |h1 h2| term
  int n_elems = 0;
  double a = 0.0;  // n e^2 / d - 1
  double b = 0.0;  // d / e
};

// One Monte Carlo realization, in unit-normalized (path-loss free) form.
struct TrialDraw {
  double zeta_h = 0.0;
  double zeta_g_n = 0.0;
  double zeta_g_m = 0.0;
  double h_ri_sq = 0.0;
  double g_norm_sq_n = 0.0;
  double g_norm_sq_m = 0.0;
};

// What draw_trial needs from a scenario; everything here is independent of
// transmit power, allocation and SIC mode, so all of those can share draws.
struct DrawShape {
  int N = 3;
  int M = 3;
  FadingParams fading;
  double omega_ri = 1e-8;

  bool operator==(const DrawShape&) const = default;
};

/// Nakagami magnitude: sqrt of a Gamma(m, omega/m) variate.
double draw_nakagami(const FadingParams& fp, PhiloxStream& rng);

/// |sqrt(k/(k+1)) + sqrt(1/(k+1)) CN(0,1)|, unit mean-square.
double draw_rician(double kappa, PhiloxStream& rng);

/// Mean of a single unit-power Rician x Nakagami cascade magnitude.
double cascade_mean(const FadingParams& fp);

/// Variance of the same; throws std::domain_error if it comes out <= 0.
double cascade_variance(const FadingParams& fp);

CascadeApprox fit_cascade(const FadingParams& fp, int n_elems);

/// Density of zeta under the fitted model (x > 0).
double approx_zeta_pdf(double x, const CascadeApprox& ca);

/// CDF of zeta under the fitted model.
double approx_zeta_cdf(double x, const CascadeApprox& ca);

/// Element magnitudes are drawn in this order: h1[N] (Nakagami), h2[N]
/// (Rician), g1[M] (Rician), g_n[M] (Nakagami), g_m[M] (Nakagami), then the
/// residual-interference power. The shared g1 couples the two user cascades.
TrialDraw draw_trial(const DrawShape& shape, PhiloxStream& rng);

struct SeriesValue {
  double value = 0.0;
  int terms_used = 0;
  bool truncated = false;  // last retained term above 1e-10 of the sum
};

/// Truncated Bessel-K series for the density of one |h1 h2| magnitude with
/// unit-power envelopes. Intended for validation only.
SeriesValue exact_cascade_pdf(double y, const FadingParams& fp, int terms);

}  // namespace risnoma
