#pragma once

#include "risnoma/system.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace risnoma {

enum class Scheme { NOMA, OMA };
enum class ThroughputMode { DelayLimited, DelayTolerant };
enum class MetricKind { Outage, ErgodicRate, Throughput };
enum class Method { MonteCarlo, Analytic, Asymptotic };

struct MetricEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  double ci95_low = 0.0;
  double ci95_high = 0.0;
  MetricKind kind = MetricKind::Outage;
  Method method = Method::MonteCarlo;
};

struct McOptions {
  int workers = 0;  // 0: RISNOMA_WORKERS or hardware concurrency
  std::size_t chunk = 4096;
  // Average D_n's rate only over trials where x_m is decodable, instead of
  // over all trials.
  bool dn_rate_conditional = false;
};

// Everything one pass produces for one scenario. D_n's NOMA figures use the
// scenario's own SIC mode.
struct McScenarioResult {
  MetricEstimate outage_n;
  MetricEstimate outage_m;
  MetricEstimate outage_oma_n;
  MetricEstimate outage_oma_m;
  MetricEstimate rate_n;
  MetricEstimate rate_m;
  MetricEstimate rate_oma_n;
  MetricEstimate rate_oma_m;
  MetricEstimate throughput_dl;
  MetricEstimate throughput_dt;
  MetricEstimate throughput_dl_oma;
  MetricEstimate throughput_dt_oma;
};

/// Evaluates every scenario against the same sequence of channel draws
/// (common random numbers). All scenarios must share one DrawShape. Trial t
/// always uses stream (seed, t), and per-chunk statistics are merged in
/// chunk order, so the result does not depend on the worker count.
std::vector<McScenarioResult> mc_evaluate(const std::vector<SystemConfig>& scenarios,
                                          std::uint64_t trials, std::uint64_t seed,
                                          const McOptions& opts = {});

MetricEstimate mc_outage(const SystemConfig& cfg, User user, Scheme scheme, std::uint64_t trials,
                         std::uint64_t seed, const McOptions& opts = {});

MetricEstimate mc_ergodic_rate(const SystemConfig& cfg, User user, Scheme scheme,
                               std::uint64_t trials, std::uint64_t seed,
                               const McOptions& opts = {});

MetricEstimate mc_throughput(const SystemConfig& cfg, ThroughputMode mode, std::uint64_t trials,
                             std::uint64_t seed, const McOptions& opts = {});

/// Binomial estimate with a Wilson 95% interval.
MetricEstimate binomial_estimate(std::uint64_t hits, std::uint64_t trials);

}  // namespace risnoma
