#include "risnoma/system.hpp"

#include <cmath>
#include <stdexcept>

namespace risnoma {

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }
double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

std::vector<std::string> validate_config(const SystemConfig& cfg) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("system: " + msg); };
  if (cfg.M < 1 || cfg.N < 1) fail("M and N must be >= 1");
  if (!(cfg.a_n > 0.0 && cfg.a_n < cfg.a_m && cfg.a_m < 1.0)) {
    fail("power allocation must satisfy 0 < a_n < a_m < 1");
  }
  if (std::fabs(cfg.a_n + cfg.a_m - 1.0) > 1e-9) fail("a_n + a_m must equal 1");
  if (cfg.ris_mode == RisMode::PrisAris && !(cfg.beta > 1.0)) fail("beta must exceed 1 for an active RIS");
  if (cfg.ris_mode == RisMode::DoublePris && cfg.beta != 1.0) fail("beta must be 1 for a passive RIS");
  if (!(cfg.P_s > 0.0)) fail("P_s must be positive");
  if (!(cfg.sigma2 > 0.0)) fail("sigma2 must be positive");
  if (!(cfg.sigma_a2 >= 0.0)) fail("sigma_a2 must be nonnegative");
  if (!(cfg.omega_ri >= 0.0)) fail("omega_ri must be nonnegative");
  for (double d : {cfg.d_h1, cfg.d_h2, cfg.d_g1, cfg.d_gn, cfg.d_gm}) {
    if (!(d > 0.0)) fail("distances must be positive");
  }
  if (!(cfg.alpha > 0.0)) fail("alpha must be positive");
  if (!(cfg.eta > 0.0)) fail("eta must be positive");
  if (!(cfg.R_n >= 0.0 && cfg.R_m >= 0.0)) fail("target rates must be nonnegative");
  check_fading(cfg.fading);

  std::vector<std::string> warnings;
  const double gth_m = std::exp2(cfg.R_m) - 1.0;
  if (cfg.a_m <= gth_m * cfg.a_n) {
    warnings.emplace_back("a_m <= gamma_th_m * a_n: both NOMA users are always in outage");
  }
  return warnings;
}

SystemConfig as_double_pris(SystemConfig cfg) {
  cfg.ris_mode = RisMode::DoublePris;
  cfg.beta = 1.0;
  cfg.sigma_a2 = 0.0;
  return cfg;
}

LinkBudget link_budget(const SystemConfig& cfg) {
  const double common = std::pow(cfg.eta, -4.0) * std::pow(cfg.d_h1, cfg.alpha) *
                        std::pow(cfg.d_h2, cfg.alpha) * std::pow(cfg.d_g1, cfg.alpha);
  LinkBudget lb;
  lb.lambda_bar_n = common * std::pow(cfg.d_gn, cfg.alpha);
  lb.lambda_bar_m = common * std::pow(cfg.d_gm, cfg.alpha);
  lb.gamma_th_n = std::exp2(cfg.R_n) - 1.0;
  lb.gamma_th_m = std::exp2(cfg.R_m) - 1.0;
  lb.gamma_th_n_oma = std::exp2(2.0 * cfg.R_n) - 1.0;
  lb.gamma_th_m_oma = std::exp2(2.0 * cfg.R_m) - 1.0;
  return lb;
}

double noise_power_approx(const SystemConfig& cfg) {
  return cfg.beta * cfg.sigma_a2 * cfg.M * cfg.fading.omega_na + cfg.sigma2;
}

double noise_power(const SystemConfig& cfg, User user, const TrialDraw& draw) {
  if (cfg.noise_norm == NoiseNormModel::PaperApprox) return noise_power_approx(cfg);
  const double d = user == User::N ? cfg.d_gn : cfg.d_gm;
  const double g2 = user == User::N ? draw.g_norm_sq_n : draw.g_norm_sq_m;
  return cfg.beta * cfg.sigma_a2 * cfg.eta * std::pow(d, -cfg.alpha) * g2 + cfg.sigma2;
}

double composite_gain(const TrialDraw& draw, const LinkBudget& lb, User user) {
  return user == User::N ? draw.zeta_h * draw.zeta_g_n / lb.lambda_bar_n
                         : draw.zeta_h * draw.zeta_g_m / lb.lambda_bar_m;
}

double sinr_dn_dm(const TrialDraw& draw, const SystemConfig& cfg, const LinkBudget& lb) {
  const double s = cfg.beta * cfg.P_s * composite_gain(draw, lb, User::N);
  return s * cfg.a_m / (s * cfg.a_n + noise_power(cfg, User::N, draw));
}

double sinr_dn(const TrialDraw& draw, const SystemConfig& cfg, const LinkBudget& lb) {
  const double s = cfg.beta * cfg.P_s * composite_gain(draw, lb, User::N);
  const double ri = cfg.sic == SicMode::Imperfect ? cfg.P_s * draw.h_ri_sq : 0.0;
  return s * cfg.a_n / (ri + noise_power(cfg, User::N, draw));
}

double sinr_dm(const TrialDraw& draw, const SystemConfig& cfg, const LinkBudget& lb) {
  const double s = cfg.beta * cfg.P_s * composite_gain(draw, lb, User::M);
  return s * cfg.a_m / (s * cfg.a_n + noise_power(cfg, User::M, draw));
}

double snr_oma(const TrialDraw& draw, const SystemConfig& cfg, const LinkBudget& lb, User user) {
  const double a = user == User::N ? cfg.a_n : cfg.a_m;
  return cfg.beta * cfg.P_s * a * composite_gain(draw, lb, user) / noise_power(cfg, user, draw);
}

const char* to_string(SicMode s) { return s == SicMode::Perfect ? "pSIC" : "ipSIC"; }
const char* to_string(NoiseNormModel s) {
  return s == NoiseNormModel::PaperApprox ? "paper_approx" : "exact";
}
const char* to_string(RisMode s) { return s == RisMode::PrisAris ? "PRIS_ARIS" : "DOUBLE_PRIS"; }
const char* to_string(User u) { return u == User::N ? "n" : "m"; }

}  // namespace risnoma
