#pragma once

#include "risnoma/mcsim.hpp"
#include "risnoma/system.hpp"

#include <utility>
#include <vector>

namespace risnoma {

struct QuadConfig {
  int U = 500;
  int I = 500;
  int P = 500;
  int K = 100;
  double mu_b = 0.0;  // <= 0 selects it automatically
  double eps_2f1 = 1e-6;
};

void check_quad(const QuadConfig& qc);

// A high-SNR approximation together with the caveats that apply to it.
struct AsymptoticValue {
  double value = 0.0;
  double mu_b = 0.0;
  bool divergent_2f1 = false;  // Delta(0) used the regularized 2F1
  bool n_ne_m = false;         // formula applied outside its N = M premise
  bool mu_b_unconverged = false;
};

// Outage probabilities. D_n's event covers both failing to decode x_m and
// failing to decode x_n; with a_m <= gamma_th_m a_n the result is 1.
double outage_dn_ipsic(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc);
double outage_dn_psic(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc);
double outage_dn(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc);
double outage_dm(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc);
double outage_oma(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc, User user);

/// Power-independent error floor of D_n under imperfect SIC.
double asym_outage_dn_ipsic(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc);
AsymptoticValue asym_outage_dn_psic(const SystemConfig& cfg, const LinkBudget& lb,
                                    const QuadConfig& qc);
AsymptoticValue asym_outage_dm(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc);

struct DeltaZero {
  double value = 0.0;
  bool divergent = false;
};
DeltaZero delta_zero(const FadingParams& fp, double eps_2f1);

/// Least-squares slope of -log10(outage) against log10(P_s). Points are
/// (P_s in mW, outage); every outage must be positive.
double diversity_order(const std::vector<std::pair<double, double>>& curve);

/// Least-squares slope of rate against log2(P_s).
double rate_slope(const std::vector<std::pair<double, double>>& curve);

// Ergodic rates in BPCU. D_n's rate is unconditional (x_m assumed decoded).
double ergodic_dn_ipsic(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc);
double ergodic_dn_psic(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc);
double ergodic_dn(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc);
double ergodic_dm(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc);
double ergodic_oma(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc, User user);

double asym_ergodic_dn_ipsic(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc);

/// Jensen upper bound on D_n's perfect-SIC rate.
double ergodic_upper_dn_psic(const SystemConfig& cfg, const LinkBudget& lb);

/// High-SNR D_m rate exactly as printed: the bracket subtracts the plain
/// quadrature sum with no incomplete-gamma factor.
double asym_ergodic_dm(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc);

/// The P_s -> infinity limit of ergodic_dm, i.e. its Chebyshev weight sum,
/// which approximates log2(1 + a_m / a_n).
double ergodic_dm_ceiling(const SystemConfig& cfg, const QuadConfig& qc);

/// (E[zeta_h] E[zeta_g]) under the fitted moments.
double jensen_theta(const SystemConfig& cfg);

/// Throughput from the closed forms; D_n follows cfg.sic.
double throughput(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc,
                  ThroughputMode mode);
double throughput_oma(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc,
                      ThroughputMode mode);

enum class BudgetScheme { PrisAris, DoublePris };

// Fixed hardware power draws, mW.
struct PowerConsts {
  double P_aris = 10.0;
  double P_sw = 3.1622776601683795;
  double P_dc = 3.1622776601683795;
};

/// BS transmit power left after the fixed overheads of the given scheme:
/// active total = P_s + P_aris + (M + N) P_sw + M P_dc, passive total =
/// P_s + (M + N) P_sw. Throws std::domain_error if nothing is left.
double power_budget_split(double total_mw, BudgetScheme scheme, const PowerConsts& consts, int M,
                          int N);

}  // namespace risnoma
