#pragma once

#include "risnoma/channel.hpp"

#include <string>
#include <vector>

namespace risnoma {

enum class SicMode { Perfect, Imperfect };
enum class NoiseNormModel { PaperApprox, Exact };
// PrisAris: passive BS-side RIS plus active user-side RIS (beta > 1, thermal
// noise sigma_a2). DoublePris: both surfaces passive, so beta = 1 and no
// amplifier noise.
enum class RisMode { PrisAris, DoublePris };
enum class User { N, M };

// All quantities in linear units: powers in mW, gains dimensionless.
// Defaults are the reference simulation settings, except eta (see README).
struct SystemConfig {
  int M = 3;
  int N = 3;
  double beta = 2.5;
  double a_n = 0.2;
  double a_m = 0.8;
  double P_s = 1.0;
  double sigma2 = 1e-7;
  double sigma_a2 = 1e-8;
  double omega_ri = 1e-8;
  FadingParams fading;
  double d_h1 = 10.0;
  double d_h2 = 10.0;
  double d_g1 = 20.0;
  double d_gn = 20.0;
  double d_gm = 80.0;
  double alpha = 2.0;
  double eta = 10.0;
  double R_n = 2.0;
  double R_m = 2.0;
  SicMode sic = SicMode::Perfect;
  NoiseNormModel noise_norm = NoiseNormModel::PaperApprox;
  RisMode ris_mode = RisMode::PrisAris;

  // Relay gain between the two surfaces; not configurable.
  static constexpr double G = 1.0;

  DrawShape draw_shape() const { return {N, M, fading, omega_ri}; }
};

struct LinkBudget {
  double lambda_bar_n = 0.0;
  double lambda_bar_m = 0.0;
  double gamma_th_n = 0.0;
  double gamma_th_m = 0.0;
  double gamma_th_n_oma = 0.0;
  double gamma_th_m_oma = 0.0;
};

double dbm_to_mw(double dbm);
double db_to_linear(double db);
double mw_to_dbm(double mw);

/// Throws std::invalid_argument on a broken invariant. Returns warnings for
/// legal but degenerate settings (e.g. a_m <= gamma_th_m a_n, where D_n and
/// D_m are always in outage).
std::vector<std::string> validate_config(const SystemConfig& cfg);

/// The same scenario with the user-side RIS made passive.
SystemConfig as_double_pris(SystemConfig cfg);

LinkBudget link_budget(const SystemConfig& cfg);

/// beta * sigma_a2 * norm + sigma2, with norm = M * omega_na (averaged
/// approximation) or eta d_g^-alpha * g_norm_sq (exact).
double noise_power(const SystemConfig& cfg, User user, const TrialDraw& draw);

/// Same noise term with the averaged norm, no draw needed.
double noise_power_approx(const SystemConfig& cfg);

/// zeta_h * zeta_g / lambda_bar for the given user.
double composite_gain(const TrialDraw& draw, const LinkBudget& lb, User user);

double sinr_dn_dm(const TrialDraw& draw, const SystemConfig& cfg, const LinkBudget& lb);
double sinr_dn(const TrialDraw& draw, const SystemConfig& cfg, const LinkBudget& lb);
double sinr_dm(const TrialDraw& draw, const SystemConfig& cfg, const LinkBudget& lb);
double snr_oma(const TrialDraw& draw, const SystemConfig& cfg, const LinkBudget& lb, User user);

const char* to_string(SicMode s);
const char* to_string(NoiseNormModel s);
const char* to_string(RisMode s);
const char* to_string(User u);

}  // namespace risnoma
