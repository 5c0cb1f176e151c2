#pragma once

#include "risnoma/bench/sweep.hpp"

#include <string>
#include <vector>

namespace risnoma::bench {

// Simulation against closed form at one sweep point.
struct PointCheck {
  std::string variant;
  std::string user;
  std::string metric;
  double axis_value = 0.0;
  double mc = 0.0;
  double mc_std_error = 0.0;
  double analytic = 0.0;
  double tolerance = 0.0;  // allowed |mc - analytic|
  double rel_error = 0.0;
  bool pass = false;
  std::string note;
};

// High-power slope of a closed-form curve over the validation window.
struct SlopeCheck {
  std::string variant;
  std::string user;
  std::string metric;
  std::string kind;  // "diversity_order" or "rate_slope"
  double expected = 0.0;
  double fitted = 0.0;
  double tolerance = 0.0;
  bool at_most = false;  // pass iff fitted <= expected + tolerance
  bool pass = false;
  std::string note;
};

struct ValidationReport {
  std::vector<PointCheck> points;
  std::vector<SlopeCheck> slopes;
  std::vector<SweepRow> rows;
  std::size_t engine_errors = 0;

  std::size_t points_failed() const;
  std::size_t slopes_failed() const;
  bool pass() const { return engine_errors == 0 && points_failed() == 0 && slopes_failed() == 0; }
};

/// Runs the spec with both the simulation and the closed-form engines and
/// compares them point by point. Outage passes when the gap is within
/// max(rel_tol * analytic, sigmas * binomial sigma at the analytic value);
/// rates and throughputs within max(rel_tol * analytic, sigmas * MC std
/// error). Slopes are fitted on transmit power over the validation window:
/// outage diversity M (pSIC, D_m, OMA) or at most floor_slope_max (ipSIC),
/// rate slope 1 (pSIC D_n), 0 (ipSIC D_n, D_m) and 1/2 (OMA).
ValidationReport validate(const SweepSpec& spec, const SweepHooks& hooks = {});

/// Plain-text summary, one line per check followed by a verdict line.
std::string format_report(const ValidationReport& report);

}  // namespace risnoma::bench
