#pragma once

#include "risnoma/analytic.hpp"
#include "risnoma/system.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace risnoma::bench {

enum class Axis { TransmitPowerDbm, TotalPowerDbm };
enum class Metric { Outage, ErgodicRate, ThroughputDL, ThroughputDT };
enum class Variant { NOMA_pSIC, NOMA_ipSIC, OMA, DoublePRIS };
enum class Engine { MonteCarlo, Analytic, Asymptotic };

// A parameter stepped across nested sweeps (one curve family per value).
enum class FamilyParam { None, Elements, M, N, MNa, OmegaRiDbm };

struct Family {
  FamilyParam param = FamilyParam::None;
  std::vector<double> values;
};

struct ValidationSettings {
  double slope_lo_dbm = 40.0;
  double slope_hi_dbm = 60.0;
  double slope_step_db = 5.0;
  double outage_rel_tol = 0.05;
  double outage_sigmas = 3.0;
  double rate_rel_tol = 0.03;
  double rate_sigmas = 3.0;
  double diversity_tol = 0.3;
  double floor_slope_max = 0.1;
  double rate_slope_tol = 0.1;
};

struct SweepSpec {
  std::string name;
  SystemConfig base;
  PowerConsts budget;
  Axis axis = Axis::TransmitPowerDbm;
  std::vector<double> points;  // dBm
  std::vector<Metric> metrics;
  std::vector<Variant> variants;
  std::vector<Engine> engines;
  std::uint64_t trials = 1000000;
  std::uint64_t seed = 1;
  int workers = 0;
  bool dn_rate_conditional = false;
  QuadConfig qc;
  Family family;
  ValidationSettings validation;
};

/// Parses a JSON config document. Omitted fields keep their defaults.
/// Throws std::invalid_argument naming the offending field path.
SweepSpec parse_config(const std::string& json_text);

/// Reads `path` (if non-empty) and layers it over the named preset (if any)
/// as a JSON merge patch.
SweepSpec load_config(const std::string& path, const std::optional<std::string>& preset = {});

/// Checks the sweep-level invariants and the base system config.
void validate_spec(const SweepSpec& spec);

/// The fully resolved spec as a JSON document that parse_config accepts.
std::string spec_to_json(const SweepSpec& spec);

struct PresetInfo {
  std::string name;
  std::string description;
};
std::vector<PresetInfo> list_presets();

/// JSON text of a preset; throws std::invalid_argument for unknown names.
std::string preset_json(const std::string& name);

const char* to_string(Axis a);
const char* to_string(Metric m);
const char* to_string(Variant v);
const char* to_string(Engine e);
const char* to_string(FamilyParam f);

}  // namespace risnoma::bench
