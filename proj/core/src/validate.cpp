#include "risnoma/bench/validate.hpp"

#include "risnoma/analytic.hpp"
#include "risnoma/bench/csv.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>
#include <tuple>

namespace risnoma::bench {

namespace {

std::uint64_t trials_from_meta(const std::string& meta) {
  const auto pos = meta.find("trials=");
  if (pos == std::string::npos) return 0;
  return std::stoull(meta.substr(pos + 7));
}

PointCheck compare(const SweepRow& mc, const SweepRow& an, const ValidationSettings& vs) {
  PointCheck c{mc.variant, mc.user, mc.metric, mc.axis_value, mc.value, mc.std_error, an.value, 0.0, 0.0, false, ""};
  if (std::isnan(mc.value) || std::isnan(an.value)) {
    c.note = std::isnan(mc.value) ? mc.meta : an.meta;
    return c;
  }
  const double gap = std::abs(mc.value - an.value);
  c.rel_error = an.value != 0.0 ? gap / std::abs(an.value) : (gap == 0.0 ? 0.0 : INFINITY);
  double sigma = mc.std_error;
  if (mc.metric == "Outage") {
    // Judged against the spread a correct simulation would have.
    const double p = std::clamp(an.value, 0.0, 1.0);
    const auto n = trials_from_meta(mc.meta);
    sigma = n > 0 ? std::sqrt(p * (1.0 - p) / static_cast<double>(n)) : 0.0;
    c.tolerance = std::max(vs.outage_rel_tol * std::abs(an.value), vs.outage_sigmas * sigma);
  } else {
    c.tolerance = std::max(vs.rate_rel_tol * std::abs(an.value), vs.rate_sigmas * sigma);
  }
  c.pass = gap <= c.tolerance;
  return c;
}

struct SlopeTarget {
  double expected;
  bool at_most;
  double tol;
};

SlopeTarget target(Metric metric, Variant v, const SystemConfig& cfg, bool is_n, const ValidationSettings& vs) {
  const bool ipsic_n = is_n && v != Variant::OMA && cfg.sic == SicMode::Imperfect;
  if (metric == Metric::Outage) {
    if (ipsic_n) return {0.0, true, vs.floor_slope_max};
    return {static_cast<double>(cfg.M), false, vs.diversity_tol};
  }
  if (v == Variant::OMA) return {0.5, false, vs.rate_slope_tol};
  if (!is_n || ipsic_n) return {0.0, false, vs.rate_slope_tol};
  return {1.0, false, vs.rate_slope_tol};
}

double closed_value(Metric metric, Variant v, const SystemConfig& cfg, const LinkBudget& lb, const QuadConfig& qc,
                    bool is_n) {
  const User u = is_n ? User::N : User::M;
  if (metric == Metric::Outage) {
    if (v == Variant::OMA) return outage_oma(cfg, lb, qc, u);
    return is_n ? outage_dn(cfg, lb, qc) : outage_dm(cfg, lb, qc);
  }
  if (v == Variant::OMA) return ergodic_oma(cfg, lb, qc, u);
  return is_n ? ergodic_dn(cfg, lb, qc) : ergodic_dm(cfg, lb, qc);
}

std::vector<SlopeCheck> slope_checks(const SweepSpec& spec, const SweepHooks& hooks) {
  const ValidationSettings& vs = spec.validation;
  std::vector<double> grid;
  for (double p = vs.slope_lo_dbm; p <= vs.slope_hi_dbm + 1e-9; p += vs.slope_step_db) grid.push_back(p);

  std::vector<SlopeCheck> out;
  for (const FamilyMember& member : expand_family(spec)) {
    for (Variant v : spec.variants) {
      const SystemConfig base = variant_config(member.base, v);
      for (const char* user : {"n", "m"}) {
        const bool is_n = std::string(user) == "n";
        for (Metric metric : spec.metrics) {
          if (metric != Metric::Outage && metric != Metric::ErgodicRate) continue;
          const SlopeTarget t = target(metric, v, base, is_n, vs);
          SlopeCheck c{std::string(to_string(v)) + member.tag,
                       user,
                       to_string(metric),
                       metric == Metric::Outage ? "diversity_order" : "rate_slope",
                       t.expected,
                       0.0,
                       t.tol,
                       t.at_most,
                       false,
                       ""};
          try {
            std::vector<std::pair<double, double>> curve;
            for (double p : grid) {
              SystemConfig cfg = base;
              cfg.P_s = dbm_to_mw(p);
              LinkBudget lb = link_budget(cfg);
              lb.lambda_bar_n *= hooks.analytic_lambda_scale;
              lb.lambda_bar_m *= hooks.analytic_lambda_scale;
              curve.emplace_back(cfg.P_s, closed_value(metric, v, cfg, lb, spec.qc, is_n));
            }
            c.fitted = metric == Metric::Outage ? diversity_order(curve) : rate_slope(curve);
            c.pass = t.at_most ? c.fitted <= t.expected + t.tol : std::abs(c.fitted - t.expected) <= t.tol;
          } catch (const std::exception& e) {
            c.fitted = NAN;
            c.note = e.what();
          }
          out.push_back(std::move(c));
        }
      }
    }
  }
  return out;
}

}  // namespace

std::size_t ValidationReport::points_failed() const {
  return static_cast<std::size_t>(std::count_if(points.begin(), points.end(), [](const PointCheck& c) { return !c.pass; }));
}

std::size_t ValidationReport::slopes_failed() const {
  return static_cast<std::size_t>(std::count_if(slopes.begin(), slopes.end(), [](const SlopeCheck& c) { return !c.pass; }));
}

ValidationReport validate(const SweepSpec& spec, const SweepHooks& hooks) {
  SweepSpec run = spec;
  run.engines = {Engine::MonteCarlo, Engine::Analytic};
  ValidationReport report;
  report.rows = run_sweep(run, hooks);
  for (const SweepRow& r : report.rows) {
    if (r.meta.rfind("error=", 0) == 0) ++report.engine_errors;
  }

  using Key = std::tuple<std::string, std::string, std::string, double>;
  std::map<Key, const SweepRow*> analytic;
  for (const SweepRow& r : report.rows) {
    if (r.engine == to_string(Engine::Analytic)) analytic[{r.variant, r.user, r.metric, r.axis_value}] = &r;
  }
  for (const SweepRow& r : report.rows) {
    if (r.engine != to_string(Engine::MonteCarlo) || r.meta == "infeasible_budget") continue;
    const auto it = analytic.find({r.variant, r.user, r.metric, r.axis_value});
    if (it == analytic.end()) continue;
    report.points.push_back(compare(r, *it->second, spec.validation));
  }
  report.slopes = slope_checks(spec, hooks);
  return report;
}

std::string format_report(const ValidationReport& rep) {
  std::ostringstream os;
  os << "# point checks: simulation vs closed form\n";
  for (const PointCheck& c : rep.points) {
    os << (c.pass ? "ok   " : "FAIL ") << c.metric << ' ' << c.variant << " user=" << c.user
       << " x=" << format_double(c.axis_value) << " mc=" << format_double(c.mc) << " analytic=" << format_double(c.analytic)
       << " rel=" << format_double(c.rel_error) << " tol=" << format_double(c.tolerance);
    if (!c.note.empty()) os << " (" << c.note << ')';
    os << '\n';
  }
  os << "# slope checks\n";
  for (const SlopeCheck& c : rep.slopes) {
    os << (c.pass ? "ok   " : "FAIL ") << c.kind << ' ' << c.variant << " user=" << c.user
       << " fitted=" << format_double(c.fitted) << " expected" << (c.at_most ? "<=" : "=")
       << format_double(c.expected) << (c.at_most ? "+" : "+-") << format_double(c.tolerance);
    if (!c.note.empty()) os << " (" << c.note << ')';
    os << '\n';
  }
  const double frac = rep.points.empty() ? 0.0 : static_cast<double>(rep.points_failed()) / static_cast<double>(rep.points.size());
  os << "points: " << rep.points.size() - rep.points_failed() << '/' << rep.points.size() << " pass";
  if (frac >= 0.5) os << " (systematic disagreement)";
  os << "\nslopes: " << rep.slopes.size() - rep.slopes_failed() << '/' << rep.slopes.size() << " pass\n";
  os << "engine errors: " << rep.engine_errors << '\n';
  os << "verdict: " << (rep.pass() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace risnoma::bench
