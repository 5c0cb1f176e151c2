#include "risnoma/bench/sweep.hpp"

#include "risnoma/analytic.hpp"
#include "risnoma/mcsim.hpp"
#include "risnoma/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>

namespace risnoma::bench {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool same(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// The transmit power at a sweep point, or nullopt if the budget leaves none.
std::optional<double> transmit_power(const SweepSpec& spec, const SystemConfig& cfg, Variant v,
                                     double point_dbm) {
  const double p = dbm_to_mw(point_dbm);
  if (spec.axis == Axis::TransmitPowerDbm) return p;
  const BudgetScheme scheme = v == Variant::DoublePRIS ? BudgetScheme::DoublePris : BudgetScheme::PrisAris;
  try {
    return power_budget_split(p, scheme, spec.budget, cfg.M, cfg.N);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

std::vector<const char*> users_for(Metric m) {
  if (m == Metric::ThroughputDL || m == Metric::ThroughputDT) return {"sum"};
  return {"n", "m"};
}

const MetricEstimate& pick_mc(const McScenarioResult& r, Metric metric, Variant v, bool is_n) {
  const bool oma = v == Variant::OMA;
  switch (metric) {
    case Metric::Outage:
      if (oma) return is_n ? r.outage_oma_n : r.outage_oma_m;
      return is_n ? r.outage_n : r.outage_m;
    case Metric::ErgodicRate:
      if (oma) return is_n ? r.rate_oma_n : r.rate_oma_m;
      return is_n ? r.rate_n : r.rate_m;
    case Metric::ThroughputDL: return oma ? r.throughput_dl_oma : r.throughput_dl;
    case Metric::ThroughputDT: return oma ? r.throughput_dt_oma : r.throughput_dt;
  }
  return r.outage_n;
}

struct ClosedForm {
  double value = kNaN;
  std::string meta;
};

std::string orders_meta(const QuadConfig& qc) {
  return "U=" + std::to_string(qc.U) + ";I=" + std::to_string(qc.I) + ";P=" + std::to_string(qc.P) +
         ";K=" + std::to_string(qc.K);
}

std::string asym_meta(const AsymptoticValue& a) {
  std::string s = "mu_b=" + fmt(a.mu_b);
  if (a.divergent_2f1) s += ";divergent_2f1";
  if (a.n_ne_m) s += ";n_ne_m";
  if (a.mu_b_unconverged) s += ";mu_b_unconverged";
  return s;
}

// Closed-form or high-SNR value for one row. Returns nullopt when the engine
// has no expression for the combination.
std::optional<ClosedForm> closed_form(const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc,
                                      Metric metric, Variant v, bool is_n, Engine engine) {
  const bool oma = v == Variant::OMA;
  const User user = is_n ? User::N : User::M;
  if (engine == Engine::Analytic) {
    ClosedForm out{kNaN, orders_meta(qc)};
    switch (metric) {
      case Metric::Outage:
        out.value = oma ? outage_oma(cfg, lb, qc, user) : is_n ? outage_dn(cfg, lb, qc) : outage_dm(cfg, lb, qc);
        break;
      case Metric::ErgodicRate:
        out.value = oma ? ergodic_oma(cfg, lb, qc, user) : is_n ? ergodic_dn(cfg, lb, qc) : ergodic_dm(cfg, lb, qc);
        break;
      case Metric::ThroughputDL:
        out.value = oma ? throughput_oma(cfg, lb, qc, ThroughputMode::DelayLimited)
                        : throughput(cfg, lb, qc, ThroughputMode::DelayLimited);
        break;
      case Metric::ThroughputDT:
        out.value = oma ? throughput_oma(cfg, lb, qc, ThroughputMode::DelayTolerant)
                        : throughput(cfg, lb, qc, ThroughputMode::DelayTolerant);
        break;
    }
    return out;
  }
  if (oma || metric == Metric::ThroughputDL || metric == Metric::ThroughputDT) return std::nullopt;
  const bool ipsic = cfg.sic == SicMode::Imperfect;
  if (metric == Metric::Outage) {
    if (is_n && ipsic) return ClosedForm{asym_outage_dn_ipsic(cfg, lb, qc), orders_meta(qc) + ";floor"};
    const AsymptoticValue a = is_n ? asym_outage_dn_psic(cfg, lb, qc) : asym_outage_dm(cfg, lb, qc);
    return ClosedForm{a.value, asym_meta(a)};
  }
  if (is_n && ipsic) {
    return ClosedForm{asym_ergodic_dn_ipsic(cfg, lb, qc), orders_meta(qc)};
  }
  if (is_n) return ClosedForm{ergodic_upper_dn_psic(cfg, lb), "upper_bound"};
  return ClosedForm{asym_ergodic_dm(cfg, lb, qc), orders_meta(qc)};
}

struct Slot {
  Metric metric;
  Variant variant;
  bool is_n;
  Engine engine;
  std::size_t scenario;  // index into the member's scenario list
  std::size_t row;
};

}  // namespace

std::vector<FamilyMember> expand_family(const SweepSpec& spec) {
  if (spec.family.param == FamilyParam::None) return {{spec.base, ""}};
  std::vector<FamilyMember> out;
  for (double v : spec.family.values) {
    FamilyMember m{spec.base, ""};
    const int n = static_cast<int>(v);
    switch (spec.family.param) {
      case FamilyParam::Elements:
        m.base.M = m.base.N = n;
        m.tag = "@N=M=" + std::to_string(n);
        break;
      case FamilyParam::M:
        m.base.M = n;
        m.tag = "@M=" + std::to_string(n);
        break;
      case FamilyParam::N:
        m.base.N = n;
        m.tag = "@N=" + std::to_string(n);
        break;
      case FamilyParam::MNa:
        m.base.fading.m_na = v;
        m.tag = "@m_na=" + fmt(v);
        break;
      case FamilyParam::OmegaRiDbm:
        m.base.omega_ri = dbm_to_mw(v);
        m.tag = "@omega_ri_dbm=" + fmt(v);
        break;
      case FamilyParam::None:
        break;
    }
    validate_config(m.base);
    out.push_back(std::move(m));
  }
  return out;
}

SystemConfig variant_config(const SystemConfig& base, Variant v) {
  SystemConfig c = base;
  switch (v) {
    case Variant::NOMA_pSIC: c.sic = SicMode::Perfect; break;
    case Variant::NOMA_ipSIC: c.sic = SicMode::Imperfect; break;
    case Variant::OMA: break;
    case Variant::DoublePRIS: c = as_double_pris(c); break;
  }
  return c;
}

bool SweepRow::operator==(const SweepRow& o) const {
  return axis == o.axis && same(axis_value, o.axis_value) && variant == o.variant && user == o.user &&
         metric == o.metric && engine == o.engine && same(value, o.value) && same(std_error, o.std_error) &&
         meta == o.meta;
}

bool has_errors(const std::vector<SweepRow>& rows) {
  for (const SweepRow& r : rows) {
    if (r.meta.rfind("error=", 0) == 0) return true;
  }
  return false;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SweepHooks& hooks) {
  validate_spec(spec);
  const int workers = resolve_workers(spec.workers);
  const bool want_mc = std::find(spec.engines.begin(), spec.engines.end(), Engine::MonteCarlo) != spec.engines.end();

  std::vector<SweepRow> rows;
  for (const FamilyMember& member : expand_family(spec)) {
    // Scenario per (point, variant); nullopt where the budget is exhausted.
    std::vector<std::optional<SystemConfig>> scenarios;
    for (double point : spec.points) {
      for (Variant v : spec.variants) {
        SystemConfig cfg = variant_config(member.base, v);
        const auto ps = transmit_power(spec, cfg, v, point);
        if (ps) cfg.P_s = *ps;
        scenarios.push_back(ps ? std::optional<SystemConfig>(cfg) : std::nullopt);
      }
    }

    std::vector<McScenarioResult> mc;
    std::vector<std::size_t> mc_index(scenarios.size(), 0);
    std::string mc_error;
    if (want_mc) {
      std::vector<SystemConfig> feasible;
      for (std::size_t i = 0; i < scenarios.size(); ++i) {
        if (!scenarios[i]) continue;
        mc_index[i] = feasible.size();
        feasible.push_back(*scenarios[i]);
      }
      McOptions opts;
      opts.workers = workers;
      opts.dn_rate_conditional = spec.dn_rate_conditional;
      try {
        mc = mc_evaluate(feasible, spec.trials, spec.seed, opts);
      } catch (const std::exception& e) {
        mc_error = e.what();
      }
    }

    std::vector<Slot> pending;
    std::size_t scen = 0;
    for (double point : spec.points) {
      for (Variant v : spec.variants) {
        const std::string variant = to_string(v) + member.tag;
        for (const char* user : {"n", "m", "sum"}) {
          for (Metric metric : spec.metrics) {
            const auto users = users_for(metric);
            if (std::find_if(users.begin(), users.end(), [&](const char* u) { return std::string(u) == user; }) ==
                users.end()) {
              continue;
            }
            const bool is_n = std::string(user) != "m";
            for (Engine engine : spec.engines) {
              SweepRow row{to_string(spec.axis), point, variant, user, to_string(metric), to_string(engine),
                           kNaN, kNaN, ""};
              if (!scenarios[scen]) {
                row.meta = "infeasible_budget";
              } else if (engine == Engine::MonteCarlo) {
                if (!mc_error.empty()) {
                  row.meta = "error=" + mc_error;
                } else {
                  const MetricEstimate& est = pick_mc(mc[mc_index[scen]], metric, v, is_n);
                  row.value = est.value;
                  row.std_error = est.std_error;
                  row.meta = "trials=" + std::to_string(est.trials);
                }
              } else {
                pending.push_back({metric, v, is_n, engine, scen, rows.size()});
              }
              rows.push_back(std::move(row));
            }
          }
        }
        ++scen;
      }
    }

    parallel_for(pending.size(), workers, [&](std::size_t i) {
      const Slot& s = pending[i];
      SweepRow& row = rows[s.row];
      const SystemConfig& cfg = *scenarios[s.scenario];
      try {
        LinkBudget lb = link_budget(cfg);
        lb.lambda_bar_n *= hooks.analytic_lambda_scale;
        lb.lambda_bar_m *= hooks.analytic_lambda_scale;
        const auto cf = closed_form(cfg, lb, spec.qc, s.metric, s.variant, s.is_n, s.engine);
        if (!cf) {
          row.meta = "unavailable";
        } else {
          row.value = cf->value;
          row.meta = cf->meta;
        }
      } catch (const std::exception& e) {
        row.meta = std::string("error=") + e.what();
      }
    });
  }
  return rows;
}

}  // namespace risnoma::bench
