#include "risnoma/analytic.hpp"

#include "risnoma/quadrature.hpp"
#include "risnoma/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace risnoma {

namespace {

constexpr double kPruneRel = 1e-30;

// Compensated (Neumaier) running sum.
class Sum {
 public:
  void add(double x) {
    const double t = s_ + x;
    if (std::fabs(s_) >= std::fabs(x)) {
      c_ += (s_ - t) + x;
    } else {
      c_ += (x - t) + s_;
    }
    s_ = t;
  }
  double value() const { return s_ + c_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Laguerre nodes with weights H x^a / Gamma(a + 1), largest weight first,
// dropping weights below kPruneRel of the largest.
struct Weighted {
  std::vector<double> x;
  std::vector<double> w;
};

Weighted gamma_weighted(int order, double a) {
  const auto& rule = specfun::cached_gauss_laguerre(order);
  const double lg = std::lgamma(a + 1.0);
  std::vector<double> lw(rule.nodes.size());
  for (std::size_t i = 0; i < lw.size(); ++i) {
    lw[i] = rule.log_weights[i] + a * std::log(rule.nodes[i]) - lg;
  }
  const double lmax = *std::max_element(lw.begin(), lw.end());
  const double cut = lmax + std::log(kPruneRel);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < lw.size(); ++i) {
    if (lw[i] >= cut) idx.push_back(i);
  }
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t p, std::size_t q) { return lw[p] > lw[q]; });
  Weighted out;
  out.x.reserve(idx.size());
  out.w.reserve(idx.size());
  for (std::size_t i : idx) {
    out.x.push_back(rule.nodes[i]);
    out.w.push_back(std::exp(lw[i]));
  }
  return out;
}

struct Model {
  CascadeApprox X;  // BS-side surface, N elements
  CascadeApprox Y;  // user-side surface, M elements
  double b2 = 0.0;  // b_X b_Y
};

Model make_model(const SystemConfig& cfg) {
  Model m;
  m.X = fit_cascade(cfg.fading, cfg.N);
  m.Y = fit_cascade(cfg.fading, cfg.M);
  m.b2 = m.X.b * m.Y.b;
  return m;
}

// P(zeta_h zeta_g < t) under the fitted Gamma model.
double product_cdf(double t, const Model& m, const Weighted& wx) {
  if (!(t > 0.0)) return 0.0;
  const double s = std::sqrt(t) / m.b2;
  Sum acc;
  for (std::size_t u = 0; u < wx.x.size(); ++u) {
    acc.add(wx.w[u] * specfun::regularized_lower_gamma(m.Y.a + 1.0, s / wx.x[u]));
  }
  return acc.value();
}

// E[ln(1 + c zeta_h zeta_g)] / ln 2 under the fitted Gamma model.
double log_moment(double c, const Model& m, const Weighted& wx, const Weighted& wy) {
  const double k = c * m.b2 * m.b2;
  Sum acc;
  for (std::size_t u = 0; u < wx.x.size(); ++u) {
    const double xu2 = wx.x[u] * wx.x[u];
    Sum inner;
    for (std::size_t p = 0; p < wy.x.size(); ++p) {
      inner.add(wy.w[p] * std::log1p(k * xu2 * wy.x[p] * wy.x[p]));
    }
    acc.add(wx.w[u] * inner.value());
  }
  return acc.value() / std::numbers::ln2;
}

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

bool sic_infeasible(const SystemConfig& cfg, const LinkBudget& lb) {
  return cfg.a_m <= lb.gamma_th_m * cfg.a_n;
}

double outage_dn_impl(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc,
                      bool imperfect) {
  check_quad(qc);
  if (sic_infeasible(cfg, lb)) return 1.0;
  const Model m = make_model(cfg);
  const Weighted wx = gamma_weighted(qc.U, m.X.a);
  const double noise = noise_power_approx(cfg);
  const double bp = cfg.beta * cfg.P_s;
  // Decoding x_m first needs zeta_h zeta_g above this level.
  const double t_dec = lb.lambda_bar_n * lb.gamma_th_m * noise / (bp * (cfg.a_m - lb.gamma_th_m * cfg.a_n));
  auto t_own = [&](double interference) {
    return lb.lambda_bar_n * lb.gamma_th_n * (interference + noise) / (bp * cfg.a_n);
  };
  if (!imperfect || cfg.omega_ri == 0.0) {
    return clamp01(product_cdf(std::max(t_dec, t_own(0.0)), m, wx));
  }
  const Weighted wi = gamma_weighted(qc.I, 0.0);
  Sum acc;
  for (std::size_t i = 0; i < wi.x.size(); ++i) {
    const double t = std::max(t_dec, t_own(cfg.P_s * cfg.omega_ri * wi.x[i]));
    acc.add(wi.w[i] * product_cdf(t, m, wx));
  }
  return clamp01(acc.value());
}

double ergodic_dn_impl(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc,
                       bool imperfect) {
  check_quad(qc);
  const Model m = make_model(cfg);
  const Weighted wx = gamma_weighted(qc.U, m.X.a);
  const Weighted wy = gamma_weighted(qc.P, m.Y.a);
  const double noise = noise_power_approx(cfg);
  const double num = cfg.beta * cfg.P_s * cfg.a_n / lb.lambda_bar_n;
  if (!imperfect || cfg.omega_ri == 0.0) {
    return std::max(0.0, log_moment(num / noise, m, wx, wy));
  }
  const Weighted wi = gamma_weighted(qc.I, 0.0);
  Sum acc;
  for (std::size_t i = 0; i < wi.x.size(); ++i) {
    const double c = num / (cfg.P_s * cfg.omega_ri * wi.x[i] + noise);
    acc.add(wi.w[i] * log_moment(c, m, wx, wy));
  }
  return std::max(0.0, acc.value());
}

// Shared body of the two high-SNR outage corollaries. `lg` is the
// lambda_bar * gamma_th product and `eff` the effective allocation.
AsymptoticValue asym_outage_common(const SystemConfig& cfg, const QuadConfig& qc, double lg,
                                   double eff) {
  check_quad(qc);
  AsymptoticValue out;
  const int M = cfg.M;
  const int N = cfg.N;
  out.n_ne_m = (M != N);

  const DeltaZero dz = delta_zero(cfg.fading, qc.eps_2f1);
  out.divergent_2f1 = dz.divergent;
  if (!(dz.value > 0.0)) return out;

  const double mna = cfg.fading.m_na;
  const double noise = noise_power_approx(cfg);
  const double log_bracket = std::log(4.0 * std::sqrt(std::numbers::pi)) + std::lgamma(2.0 * mna) +
                             std::log(dz.value) - cfg.fading.kappa - std::lgamma(mna);
  const double log_fixed = std::log(std::numbers::pi) + M * std::log(lg) + M * std::log(noise) -
                           std::log(2.0 * qc.K) - std::lgamma(2.0 * M + 1.0) -
                           std::lgamma(2.0 * N) - M * std::log(cfg.beta * cfg.P_s * eff) +
                           (M + N) * log_bracket;

  const auto& cheb = specfun::cached_gauss_chebyshev(qc.K);
  const int expo = 2 * N - 2 * M - 1;
  auto evaluate = [&](double mu_b) {
    Sum s;
    for (double xk : cheb.nodes) {
      s.add(std::pow(0.5 * (xk + 1.0) * mu_b, expo) * std::sqrt(1.0 - xk * xk));
    }
    return std::exp(log_fixed + std::log(mu_b) + std::log(s.value()));
  };

  if (qc.mu_b > 0.0) {
    out.mu_b = qc.mu_b;
    out.value = evaluate(qc.mu_b);
    return out;
  }
  const Model m = make_model(cfg);
  double mu = 10.0 * (N * m.X.e) * (M * m.Y.e);
  double v = evaluate(mu);
  bool converged = false;
  for (int it = 0; it < 60; ++it) {
    const double v2 = evaluate(2.0 * mu);
    const double rel = std::fabs(v2 / v - 1.0);
    mu *= 2.0;
    v = v2;
    if (rel < 0.005) {
      converged = true;
      break;
    }
  }
  out.mu_b = mu;
  out.value = v;
  out.mu_b_unconverged = !converged;
  return out;
}

double ls_slope(const std::vector<std::pair<double, double>>& pts) {
  if (pts.size() < 2) throw std::invalid_argument("slope fit needs at least two points");
  const double n = static_cast<double>(pts.size());
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& [x, y] : pts) {
    sxy += (x - mx) * (y - my);
    sxx += (x - mx) * (x - mx);
  }
  if (!(sxx > 0.0)) throw std::invalid_argument("slope fit needs distinct abscissae");
  return sxy / sxx;
}

double chebyshev_rate_sum(const SystemConfig& cfg, const QuadConfig& qc, const Weighted* wx,
                          const Model* m, double t_scale) {
  const auto& cheb = specfun::cached_gauss_chebyshev(qc.K);
  Sum acc;
  for (double xk : cheb.nodes) {
    const double delta = std::numbers::pi * cfg.a_m * std::sqrt(1.0 - xk * xk) /
                         (qc.K * std::numbers::ln2 * (2.0 * cfg.a_n + cfg.a_m * (xk + 1.0)));
    double ccdf = 1.0;
    if (wx != nullptr) {
      const double t = t_scale * (xk + 1.0) / (cfg.a_n * (1.0 - xk));
      ccdf = 1.0 - std::min(1.0, product_cdf(t, *m, *wx));
    }
    acc.add(delta * ccdf);
  }
  return acc.value();
}

}  // namespace

void check_quad(const QuadConfig& qc) {
  if (qc.U < 1 || qc.I < 1 || qc.P < 1 || qc.K < 1) {
    throw std::invalid_argument("quadrature orders must be >= 1");
  }
  if (qc.U > 1000 || qc.I > 1000 || qc.P > 1000) {
    throw std::invalid_argument("Gauss-Laguerre orders must be <= 1000");
  }
  if (!(qc.eps_2f1 > 0.0 && qc.eps_2f1 <= 1e-3)) {
    throw std::invalid_argument("eps_2f1 must lie in (0, 1e-3]");
  }
}

double outage_dn_ipsic(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc) {
  return outage_dn_impl(cfg, lb, qc, true);
}

double outage_dn_psic(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc) {
  return outage_dn_impl(cfg, lb, qc, false);
}

double outage_dn(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc) {
  return outage_dn_impl(cfg, lb, qc, cfg.sic == SicMode::Imperfect);
}

double outage_dm(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc) {
  check_quad(qc);
  if (sic_infeasible(cfg, lb)) return 1.0;
  const Model m = make_model(cfg);
  const Weighted wx = gamma_weighted(qc.U, m.X.a);
  const double t = lb.lambda_bar_m * lb.gamma_th_m * noise_power_approx(cfg) /
                   (cfg.beta * cfg.P_s * (cfg.a_m - lb.gamma_th_m * cfg.a_n));
  return clamp01(product_cdf(t, m, wx));
}

double outage_oma(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc, User user) {
  check_quad(qc);
  const Model m = make_model(cfg);
  const Weighted wx = gamma_weighted(qc.U, m.X.a);
  const bool n = user == User::N;
  const double lambda = n ? lb.lambda_bar_n : lb.lambda_bar_m;
  const double gth = n ? lb.gamma_th_n_oma : lb.gamma_th_m_oma;
  const double a = n ? cfg.a_n : cfg.a_m;
  const double t = lambda * gth * noise_power_approx(cfg) / (cfg.beta * cfg.P_s * a);
  return clamp01(product_cdf(t, m, wx));
}

double asym_outage_dn_ipsic(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc) {
  check_quad(qc);
  if (sic_infeasible(cfg, lb)) return 1.0;
  const Model m = make_model(cfg);
  const Weighted wx = gamma_weighted(qc.U, m.X.a);
  const Weighted wi = gamma_weighted(qc.I, 0.0);
  Sum acc;
  for (std::size_t i = 0; i < wi.x.size(); ++i) {
    const double t = lb.lambda_bar_n * lb.gamma_th_n * cfg.omega_ri * wi.x[i] / (cfg.beta * cfg.a_n);
    acc.add(wi.w[i] * product_cdf(t, m, wx));
  }
  return clamp01(acc.value());
}

AsymptoticValue asym_outage_dn_psic(const SystemConfig& cfg, const LinkBudget& lb,
                                    const QuadConfig& qc) {
  return asym_outage_common(cfg, qc, lb.lambda_bar_n * lb.gamma_th_n, cfg.a_n);
}

AsymptoticValue asym_outage_dm(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc) {
  if (sic_infeasible(cfg, lb)) {
    AsymptoticValue out;
    out.value = 1.0;
    return out;
  }
  return asym_outage_common(cfg, qc, lb.lambda_bar_m * lb.gamma_th_m,
                            cfg.a_m - lb.gamma_th_m * cfg.a_n);
}

DeltaZero delta_zero(const FadingParams& fp, double eps_2f1) {
  const double m = fp.m_na;
  const double c = (fp.kappa + 1.0) * m;
  const auto f = specfun::gauss_2f1_unit(2.0, 1.5 - m, m + 1.5, eps_2f1);
  const double log_pref = (1.0 - m) * std::log(4.0 * std::sqrt(c)) + 0.5 * (1.0 + m) * std::log(c) -
                          std::lgamma(m + 1.5);
  return {std::exp(log_pref) * f.value, f.divergent};
}

double diversity_order(const std::vector<std::pair<double, double>>& curve) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(curve.size());
  for (const auto& [p, out] : curve) {
    if (!(p > 0.0) || !(out > 0.0)) {
      throw std::domain_error("diversity_order: powers and outages must be positive");
    }
    pts.emplace_back(std::log10(p), -std::log10(out));
  }
  return ls_slope(pts);
}

double rate_slope(const std::vector<std::pair<double, double>>& curve) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(curve.size());
  for (const auto& [p, r] : curve) {
    if (!(p > 0.0)) throw std::domain_error("rate_slope: powers must be positive");
    pts.emplace_back(std::log2(p), r);
  }
  return ls_slope(pts);
}

double ergodic_dn_ipsic(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc) {
  return ergodic_dn_impl(cfg, lb, qc, true);
}

double ergodic_dn_psic(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc) {
  return ergodic_dn_impl(cfg, lb, qc, false);
}

double ergodic_dn(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc) {
  return ergodic_dn_impl(cfg, lb, qc, cfg.sic == SicMode::Imperfect);
}

double ergodic_dm(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc) {
  check_quad(qc);
  const Model m = make_model(cfg);
  const Weighted wx = gamma_weighted(qc.U, m.X.a);
  const double t_scale = lb.lambda_bar_m * noise_power_approx(cfg) / (cfg.beta * cfg.P_s);
  return std::max(0.0, chebyshev_rate_sum(cfg, qc, &wx, &m, t_scale));
}

double ergodic_dm_ceiling(const SystemConfig& cfg, const QuadConfig& qc) {
  check_quad(qc);
  return chebyshev_rate_sum(cfg, qc, nullptr, nullptr, 0.0);
}

double ergodic_oma(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc, User user) {
  check_quad(qc);
  const Model m = make_model(cfg);
  const Weighted wx = gamma_weighted(qc.U, m.X.a);
  const Weighted wy = gamma_weighted(qc.P, m.Y.a);
  const bool n = user == User::N;
  const double lambda = n ? lb.lambda_bar_n : lb.lambda_bar_m;
  const double a = n ? cfg.a_n : cfg.a_m;
  const double c = cfg.beta * cfg.P_s * a / (lambda * noise_power_approx(cfg));
  return std::max(0.0, 0.5 * log_moment(c, m, wx, wy));
}

double asym_ergodic_dn_ipsic(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc) {
  check_quad(qc);
  if (cfg.omega_ri == 0.0) return std::numeric_limits<double>::infinity();
  const Model m = make_model(cfg);
  const Weighted wx = gamma_weighted(qc.U, m.X.a);
  const Weighted wy = gamma_weighted(qc.P, m.Y.a);
  const Weighted wi = gamma_weighted(qc.I, 0.0);
  Sum acc;
  for (std::size_t i = 0; i < wi.x.size(); ++i) {
    const double c = cfg.beta * cfg.a_n / (lb.lambda_bar_n * cfg.omega_ri * wi.x[i]);
    acc.add(wi.w[i] * log_moment(c, m, wx, wy));
  }
  return std::max(0.0, acc.value());
}

double jensen_theta(const SystemConfig& cfg) {
  const Model m = make_model(cfg);
  const double N = cfg.N;
  const double M = cfg.M;
  return (N * m.X.e * N * m.X.e + N * m.X.d) * (M * m.Y.e * M * m.Y.e + M * m.Y.d);
}

double ergodic_upper_dn_psic(const SystemConfig& cfg, const LinkBudget& lb) {
  const double snr = jensen_theta(cfg) * cfg.beta * cfg.P_s * cfg.a_n /
                     (lb.lambda_bar_n * noise_power_approx(cfg));
  return std::log2(1.0 + snr);
}

double asym_ergodic_dm(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc) {
  (void)lb;
  check_quad(qc);
  const Model m = make_model(cfg);
  const Weighted wx = gamma_weighted(qc.U, m.X.a);
  const double sum_w = std::accumulate(wx.w.begin(), wx.w.end(), 0.0);
  const double bracket = 1.0 - sum_w / std::tgamma(m.Y.a + 1.0);
  return chebyshev_rate_sum(cfg, qc, nullptr, nullptr, 0.0) * bracket;
}

double throughput(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc,
                  ThroughputMode mode) {
  if (mode == ThroughputMode::DelayLimited) {
    return (1.0 - outage_dn(cfg, lb, qc)) * cfg.R_n + (1.0 - outage_dm(cfg, lb, qc)) * cfg.R_m;
  }
  return ergodic_dn(cfg, lb, qc) + ergodic_dm(cfg, lb, qc);
}

double throughput_oma(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc,
                      ThroughputMode mode) {
  if (mode == ThroughputMode::DelayLimited) {
    return (1.0 - outage_oma(cfg, lb, qc, User::N)) * cfg.R_n +
           (1.0 - outage_oma(cfg, lb, qc, User::M)) * cfg.R_m;
  }
  return ergodic_oma(cfg, lb, qc, User::N) + ergodic_oma(cfg, lb, qc, User::M);
}

double power_budget_split(double total_mw, BudgetScheme scheme, const PowerConsts& consts, int M,
                          int N) {
  if (M < 1 || N < 1) throw std::invalid_argument("power_budget_split: M and N must be >= 1");
  double overhead = (M + N) * consts.P_sw;
  if (scheme == BudgetScheme::PrisAris) overhead += consts.P_aris + M * consts.P_dc;
  const double ps = total_mw - overhead;
  if (!(ps > 0.0)) {
    throw std::domain_error("power_budget_split: total " + std::to_string(total_mw) +
                            " mW does not cover the fixed overhead of " + std::to_string(overhead) +
                            " mW");
  }
  return ps;
}

}  // namespace risnoma
