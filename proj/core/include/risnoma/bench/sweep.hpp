#pragma once

#include "risnoma/bench/config.hpp"

#include <string>
#include <vector>

namespace risnoma::bench {

// One output line. Categorical fields hold their CSV spelling so rows read
// back from a file compare equal to freshly computed ones.
struct SweepRow {
  std::string axis;
  double axis_value = 0.0;
  std::string variant;  // family members carry a tag, e.g. "NOMA_pSIC@N=M=5"
  std::string user;     // "n", "m" or "sum"
  std::string metric;
  std::string engine;
  double value = 0.0;
  double std_error = 0.0;
  std::string meta;  // "trials=...", quadrature orders, flags, or "error=..."

  /// Field-wise equality that treats two NaNs as equal.
  bool operator==(const SweepRow& other) const;
};

struct SweepHooks {
  // Multiplies both composite path-loss factors seen by the closed forms.
  // Only useful as a negative control for validation.
  double analytic_lambda_scale = 1.0;
};

struct FamilyMember {
  SystemConfig base;
  std::string tag;  // appended to variant names; empty without a family
};

/// The base configs of the nested sweeps, one per family value (or just the
/// spec's base when there is no family).
std::vector<FamilyMember> expand_family(const SweepSpec& spec);

/// The scenario a variant runs on: SIC mode for the NOMA variants, both
/// surfaces passive for DoublePRIS.
SystemConfig variant_config(const SystemConfig& base, Variant v);

/// Evaluates every requested (point, variant, user, metric, engine) row.
/// Engine failures become rows with a NaN value and "error=..." meta instead
/// of aborting. Combinations an engine does not cover are reported with meta
/// "unavailable".
std::vector<SweepRow> run_sweep(const SweepSpec& spec, const SweepHooks& hooks = {});

/// True if any row carries an engine error.
bool has_errors(const std::vector<SweepRow>& rows);

}  // namespace risnoma::bench
