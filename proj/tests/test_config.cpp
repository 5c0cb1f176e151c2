#include "risnoma/bench/config.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

using namespace risnoma;
using namespace risnoma::bench;

namespace {

// Expects parse_config to fail and returns the message.
std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  ADD_FAILURE() << "accepted: " << text;
  return {};
}

}  // namespace

TEST(Config, EmptyDocumentGivesDefaults) {
  const SweepSpec s = parse_config("{}");
  EXPECT_EQ(s.base.M, 3);
  EXPECT_EQ(s.base.eta, 10.0);
  EXPECT_EQ(s.axis, Axis::TransmitPowerDbm);
  ASSERT_EQ(s.points.size(), 9u);
  EXPECT_EQ(s.points.front(), -10.0);
  EXPECT_EQ(s.points.back(), 30.0);
  EXPECT_EQ(s.metrics, std::vector<Metric>{Metric::Outage});
  EXPECT_EQ(s.variants.size(), 3u);
  EXPECT_EQ(s.trials, 1000000u);
  EXPECT_EQ(s.qc.U, 500);
  EXPECT_EQ(s.qc.K, 100);
  EXPECT_EQ(s.family.param, FamilyParam::None);
}

TEST(Config, ReadsEveryUnitFlavour) {
  const SweepSpec s = parse_config(R"({
    "system": {"M": 5, "N": 4, "kappa_db": 0, "sigma2_dbm": -60, "eta_db": -10, "sic": "ipSIC", "noise_norm": "exact"},
    "power_budget": {"p_aris_dbm": 20, "p_sw_mw": 1.5},
    "sweep": {"range_dbm": [0, 20, 2.5], "metrics": ["ErgodicRate", "ThroughputDT"], "engines": ["Analytic"],
              "trials": 1000, "dn_rate": "conditional", "family": {"param": "m_na", "values": [1, 2]}},
    "quadrature": {"K": 40, "mu_b": 30},
    "validation": {"slope_window_dbm": [50, 70], "outage_rel_tol": 0.1}
  })");
  EXPECT_EQ(s.base.M, 5);
  EXPECT_EQ(s.base.N, 4);
  EXPECT_DOUBLE_EQ(s.base.fading.kappa, 1.0);
  EXPECT_NEAR(s.base.sigma2, 1e-6, 1e-20);
  EXPECT_NEAR(s.base.eta, 0.1, 1e-15);
  EXPECT_EQ(s.base.sic, SicMode::Imperfect);
  EXPECT_EQ(s.base.noise_norm, NoiseNormModel::Exact);
  EXPECT_DOUBLE_EQ(s.budget.P_aris, 100.0);
  EXPECT_DOUBLE_EQ(s.budget.P_sw, 1.5);
  ASSERT_EQ(s.points.size(), 9u);
  EXPECT_DOUBLE_EQ(s.points[3], 7.5);
  EXPECT_EQ(s.metrics.size(), 2u);
  EXPECT_EQ(s.engines, std::vector<Engine>{Engine::Analytic});
  EXPECT_TRUE(s.dn_rate_conditional);
  EXPECT_EQ(s.family.param, FamilyParam::MNa);
  EXPECT_EQ(s.qc.K, 40);
  EXPECT_EQ(s.qc.mu_b, 30.0);
  EXPECT_EQ(s.validation.slope_lo_dbm, 50.0);
  EXPECT_EQ(s.validation.outage_rel_tol, 0.1);
}

TEST(Config, UnknownFieldNamesItsPath) {
  EXPECT_NE(error_of(R"({"system": {"foo": 1}})").find("system.foo: unknown field"), std::string::npos);
  EXPECT_NE(error_of(R"({"sweep": {"family": {"param": "M", "values": [3], "x": 0}}})").find("sweep.family.x"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"bogus": true})").find("bogus: unknown field"), std::string::npos);
}

TEST(Config, TypeAndValueErrors) {
  EXPECT_NE(error_of(R"({"system": {"M": 2.5}})").find("system.M"), std::string::npos);
  EXPECT_NE(error_of(R"({"system": {"beta": "big"}})").find("system.beta"), std::string::npos);
  EXPECT_NE(error_of(R"({"sweep": {"variants": ["NOMA"]}})").find("allowed"), std::string::npos);
  EXPECT_NE(error_of(R"({"sweep": {"variants": ["OMA", "OMA"]}})").find("duplicate"), std::string::npos);
  EXPECT_NE(error_of(R"({"sweep": {"trials": -3}})").find("sweep.trials"), std::string::npos);
  EXPECT_NE(error_of(R"({"sweep": {"points_dbm": [0, 0]}})").find("strictly increasing"), std::string::npos);
  EXPECT_NE(error_of(R"({"sweep": {"points_dbm": [0], "range_dbm": [0, 1, 1]}})").find("not both"), std::string::npos);
  EXPECT_NE(error_of(R"({"sweep": {"range_dbm": [5, 0, 1]}})").find("range_dbm"), std::string::npos);
  EXPECT_NE(error_of(R"({"power_budget": {"p_sw_dbm": 0, "p_sw_mw": 1}})").find("not both"), std::string::npos);
  EXPECT_NE(error_of(R"({"sweep": {"family": {"param": "elements", "values": [2.5]}}})").find("positive integers"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"quadrature": {"U": 0}})").find("quadrature"), std::string::npos);
  EXPECT_NE(error_of("{not json").find("<text>"), std::string::npos);
}

TEST(Config, InvalidAllocationRejected) {
  EXPECT_NE(error_of(R"({"system": {"a_n": 0.6, "a_m": 0.4}})").find("system"), std::string::npos);
}

TEST(Config, RoundTripsThroughCanonicalJson) {
  const SweepSpec a = parse_config(R"({"name": "rt", "system": {"M": 4, "kappa_db": 3, "sic": "ipSIC"},
    "sweep": {"axis": "TotalPowerDbm", "points_dbm": [20, 30], "variants": ["DoublePRIS"],
              "family": {"param": "omega_ri_dbm", "values": [-90, -80]}}})");
  const SweepSpec b = parse_config(spec_to_json(a));
  EXPECT_EQ(b.name, "rt");
  EXPECT_EQ(b.base.M, 4);
  EXPECT_NEAR(b.base.fading.kappa, a.base.fading.kappa, 1e-12);
  EXPECT_NEAR(b.base.sigma2 / a.base.sigma2, 1.0, 1e-12);
  EXPECT_NEAR(b.base.eta, a.base.eta, 1e-12);
  EXPECT_EQ(b.base.sic, SicMode::Imperfect);
  EXPECT_EQ(b.axis, Axis::TotalPowerDbm);
  EXPECT_EQ(b.points, a.points);
  EXPECT_EQ(b.variants, a.variants);
  EXPECT_EQ(b.family.values, a.family.values);
  EXPECT_EQ(b.budget.P_sw, a.budget.P_sw);
  EXPECT_EQ(spec_to_json(b), spec_to_json(parse_config(spec_to_json(b))));
}

TEST(Config, PresetsParseAndMerge) {
  const auto presets = list_presets();
  ASSERT_GE(presets.size(), 10u);
  for (const auto& p : presets) {
    EXPECT_NO_THROW(load_config("", p.name)) << p.name;
    EXPECT_FALSE(p.description.empty()) << p.name;
  }
  EXPECT_THROW(preset_json("fig99"), std::invalid_argument);

  const auto path = std::filesystem::temp_directory_path() / "risnoma_cfg_merge.json";
  {
    std::ofstream out(path);
    out << R"({"sweep": {"trials": 123}, "system": {"M": 4}})";
  }
  const SweepSpec fig2 = load_config("", "fig2");
  const SweepSpec merged = load_config(path.string(), "fig2");
  EXPECT_EQ(merged.trials, 123u);
  EXPECT_EQ(merged.base.M, 4);
  EXPECT_EQ(merged.points, fig2.points);
  EXPECT_EQ(merged.engines, fig2.engines);
  std::filesystem::remove(path);
  EXPECT_THROW(load_config("/nonexistent/config.json"), std::runtime_error);
}

TEST(Config, Names) {
  EXPECT_STREQ(to_string(Metric::ThroughputDL), "ThroughputDL");
  EXPECT_STREQ(to_string(Variant::NOMA_ipSIC), "NOMA_ipSIC");
  EXPECT_STREQ(to_string(Engine::MonteCarlo), "MonteCarlo");
  EXPECT_STREQ(to_string(Axis::TotalPowerDbm), "TotalPowerDbm");
  EXPECT_STREQ(to_string(FamilyParam::Elements), "elements");
}
