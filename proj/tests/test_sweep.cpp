#include "risnoma/bench/csv.hpp"
#include "risnoma/bench/sweep.hpp"
#include "risnoma/bench/validate.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <set>

using namespace risnoma;
using namespace risnoma::bench;

namespace {

SweepSpec small_fig2() {
  SweepSpec s = load_config("", "fig2");
  s.trials = 4000;
  s.points = {-10.0, 0.0, 10.0};
  return s;
}

}  // namespace

TEST(Sweep, RowCardinalityAndOrder) {
  const SweepSpec s = small_fig2();
  const auto rows = run_sweep(s);
  // points x variants x users (n, m) x engines
  EXPECT_EQ(rows.size(), s.points.size() * s.variants.size() * 2 * s.engines.size());
  EXPECT_EQ(rows[0].variant, "NOMA_pSIC");
  EXPECT_EQ(rows[0].user, "n");
  EXPECT_EQ(rows[0].engine, "MonteCarlo");
  EXPECT_EQ(rows[0].meta, "trials=4000");
  EXPECT_EQ(rows[1].engine, "Analytic");
  EXPECT_TRUE(std::isnan(rows[1].std_error));
  EXPECT_FALSE(has_errors(rows));
  for (const auto& r : rows) {
    if (r.variant == "OMA" && r.engine == "Asymptotic") {
      EXPECT_EQ(r.meta, "unavailable");
    } else {
      EXPECT_TRUE(std::isfinite(r.value)) << r.variant << ' ' << r.user << ' ' << r.engine;
    }
    if (r.variant == "NOMA_ipSIC" && r.user == "n" && r.engine == "Asymptotic") {
      EXPECT_NE(r.meta.find(";floor"), std::string::npos);
    }
  }
}

TEST(Sweep, ThroughputHasOnlySumRows) {
  SweepSpec s = small_fig2();
  s.metrics = {Metric::ThroughputDL};
  s.engines = {Engine::Analytic};
  const auto rows = run_sweep(s);
  EXPECT_EQ(rows.size(), s.points.size() * s.variants.size());
  for (const auto& r : rows) EXPECT_EQ(r.user, "sum");
}

TEST(Sweep, FamilyTags) {
  SweepSpec s = load_config("", "fig4");
  s.points = {0.0};
  s.engines = {Engine::Analytic};
  std::set<std::string> variants;
  for (const auto& r : run_sweep(s)) variants.insert(r.variant);
  EXPECT_TRUE(variants.count("NOMA_pSIC@N=M=3"));
  EXPECT_TRUE(variants.count("NOMA_ipSIC@N=M=7"));

  const auto members = expand_family(s);
  ASSERT_EQ(members.size(), 3u);
  EXPECT_EQ(members[1].base.M, 5);
  EXPECT_EQ(members[1].base.N, 5);

  s.family = {FamilyParam::OmegaRiDbm, {-90.0}};
  EXPECT_EQ(expand_family(s)[0].tag, "@omega_ri_dbm=-90");
  EXPECT_NEAR(expand_family(s)[0].base.omega_ri, 1e-9, 1e-22);
  s.family = {};
  EXPECT_EQ(expand_family(s)[0].tag, "");
}

TEST(Sweep, VariantConfigs) {
  const SystemConfig base;
  EXPECT_EQ(variant_config(base, Variant::NOMA_ipSIC).sic, SicMode::Imperfect);
  EXPECT_EQ(variant_config(base, Variant::NOMA_pSIC).sic, SicMode::Perfect);
  const SystemConfig d = variant_config(base, Variant::DoublePRIS);
  EXPECT_EQ(d.ris_mode, RisMode::DoublePris);
  EXPECT_EQ(d.beta, 1.0);
}

TEST(Sweep, CsvIndependentOfWorkersAndReruns) {
  SweepSpec s = small_fig2();
  s.workers = 1;
  const std::string one = to_csv(run_sweep(s));
  s.workers = 4;
  const std::string four = to_csv(run_sweep(s));
  s.workers = 16;
  const std::string sixteen = to_csv(run_sweep(s));
  EXPECT_EQ(one, four);
  EXPECT_EQ(one, sixteen);
  EXPECT_EQ(sixteen, to_csv(run_sweep(s)));
}

TEST(Sweep, TotalPowerWithoutOverheadsEqualsTransmitPower) {
  SweepSpec s = small_fig2();
  s.engines = {Engine::MonteCarlo, Engine::Analytic};
  const auto tx = run_sweep(s);
  s.axis = Axis::TotalPowerDbm;
  s.budget = PowerConsts{0.0, 0.0, 0.0};
  const auto total = run_sweep(s);
  ASSERT_EQ(tx.size(), total.size());
  for (std::size_t i = 0; i < tx.size(); ++i) {
    EXPECT_EQ(total[i].axis, "TotalPowerDbm");
    EXPECT_NEAR(total[i].value, tx[i].value, 1e-12 * std::fabs(tx[i].value)) << i;
  }
}

TEST(Sweep, InfeasibleBudgetIsReportedPerRow) {
  SweepSpec s = small_fig2();
  s.axis = Axis::TotalPowerDbm;
  s.points = {10.0, 30.0};
  s.engines = {Engine::Analytic};
  const auto rows = run_sweep(s);
  // 10 dBm cannot cover the default overheads of the active surface.
  EXPECT_EQ(rows.front().meta, "infeasible_budget");
  EXPECT_TRUE(std::isnan(rows.front().value));
  EXPECT_TRUE(std::isfinite(rows.back().value));
  EXPECT_FALSE(has_errors(rows));
}

TEST(Sweep, EngineErrorsStayInTheirRows) {
  SweepSpec s = small_fig2();
  s.points = {20.0};
  s.variants = {Variant::NOMA_pSIC};
  s.engines = {Engine::MonteCarlo, Engine::Analytic};
  s.base.N = 2000;
  const auto rows = run_sweep(s);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_TRUE(has_errors(rows));
  EXPECT_EQ(rows[0].meta.rfind("error=", 0), 0u);
  EXPECT_TRUE(std::isnan(rows[0].value));
  EXPECT_TRUE(std::isfinite(rows[1].value)) << rows[1].meta;
}

TEST(Validate, Fig2SimulationAgreesWithClosedForms) {
  SweepSpec s = load_config("", "fig2");
  s.trials = 100000;
  const ValidationReport r = validate(s);
  EXPECT_EQ(r.engine_errors, 0u);
  EXPECT_EQ(r.points_failed(), 0u) << format_report(r);
  EXPECT_EQ(r.points.size(), s.points.size() * s.variants.size() * 2);
  // The slope section asks for diversity M wherever there is no floor.
  for (const auto& c : r.slopes) {
    if (c.variant == "NOMA_ipSIC" && c.user == "n") {
      EXPECT_TRUE(c.at_most);
      EXPECT_EQ(c.expected + c.tolerance, s.validation.floor_slope_max);
    } else {
      EXPECT_EQ(c.expected, s.base.M);
    }
  }
  EXPECT_NE(format_report(r).find("points: "), std::string::npos);
}

TEST(Validate, DetectsSystematicDisagreement) {
  SweepSpec s = small_fig2();
  s.trials = 20000;
  SweepHooks wrong;
  wrong.analytic_lambda_scale = 10.0;
  const ValidationReport r = validate(s, wrong);
  EXPECT_GT(r.points_failed(), r.points.size() / 2);
  EXPECT_FALSE(r.pass());
  EXPECT_NE(format_report(r).find("systematic disagreement"), std::string::npos);
}
