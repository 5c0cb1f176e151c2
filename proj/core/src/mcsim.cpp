#include "risnoma/mcsim.hpp"

#include "risnoma/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace risnoma {

namespace {

struct Welford {
  double n = 0.0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    n += 1.0;
    const double delta = x - mean;
    mean += delta / n;
    m2 += delta * (x - mean);
  }

  void merge(const Welford& o) {
    if (o.n == 0.0) return;
    if (n == 0.0) {
      *this = o;
      return;
    }
    const double total = n + o.n;
    const double delta = o.mean - mean;
    mean += delta * (o.n / total);
    m2 += o.m2 + delta * delta * (n * o.n / total);
    n = total;
  }

  double std_error() const { return n > 1.0 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0; }
};

enum Count { kOutN, kOutM, kOutOmaN, kOutOmaM, kNumCounts };
enum Avg { kRateN, kRateM, kRateOmaN, kRateOmaM, kDl, kDt, kDlOma, kDtOma, kNumAvgs };

struct Partial {
  std::array<std::uint64_t, kNumCounts> counts{};
  std::array<Welford, kNumAvgs> avgs{};

  void merge(const Partial& o) {
    for (int i = 0; i < kNumCounts; ++i) counts[i] += o.counts[i];
    for (int i = 0; i < kNumAvgs; ++i) avgs[i].merge(o.avgs[i]);
  }
};

struct Prepared {
  SystemConfig cfg;
  LinkBudget lb;
};

void accumulate(const Prepared& p, const TrialDraw& draw, bool dn_conditional, Partial& out) {
  const SystemConfig& cfg = p.cfg;
  const LinkBudget& lb = p.lb;

  const double g_dndm = sinr_dn_dm(draw, cfg, lb);
  const double g_dn = sinr_dn(draw, cfg, lb);
  const double g_dm = sinr_dm(draw, cfg, lb);
  const double g_on = snr_oma(draw, cfg, lb, User::N);
  const double g_om = snr_oma(draw, cfg, lb, User::M);

  const bool decodable = g_dndm >= lb.gamma_th_m;
  const bool out_n = !decodable || g_dn < lb.gamma_th_n;
  const bool out_m = g_dm < lb.gamma_th_m;
  const bool out_on = g_on < lb.gamma_th_n_oma;
  const bool out_om = g_om < lb.gamma_th_m_oma;

  out.counts[kOutN] += out_n;
  out.counts[kOutM] += out_m;
  out.counts[kOutOmaN] += out_on;
  out.counts[kOutOmaM] += out_om;

  const double r_n = std::log2(1.0 + g_dn);
  const double r_m = std::log2(1.0 + g_dm);
  const double r_on = 0.5 * std::log2(1.0 + g_on);
  const double r_om = 0.5 * std::log2(1.0 + g_om);
  if (!dn_conditional || decodable) out.avgs[kRateN].add(r_n);
  out.avgs[kRateM].add(r_m);
  out.avgs[kRateOmaN].add(r_on);
  out.avgs[kRateOmaM].add(r_om);

  out.avgs[kDl].add((out_n ? 0.0 : cfg.R_n) + (out_m ? 0.0 : cfg.R_m));
  out.avgs[kDt].add(r_n + r_m);
  out.avgs[kDlOma].add((out_on ? 0.0 : cfg.R_n) + (out_om ? 0.0 : cfg.R_m));
  out.avgs[kDtOma].add(r_on + r_om);
}

MetricEstimate mean_estimate(const Welford& w, MetricKind kind) {
  MetricEstimate e;
  e.kind = kind;
  e.method = Method::MonteCarlo;
  e.trials = static_cast<std::uint64_t>(w.n);
  e.value = w.mean;
  e.std_error = w.std_error();
  e.ci95_low = std::max(0.0, e.value - 1.96 * e.std_error);
  e.ci95_high = e.value + 1.96 * e.std_error;
  return e;
}

MetricEstimate sum_estimate(const MetricEstimate& a, const MetricEstimate& b) {
  MetricEstimate e = a;
  e.kind = MetricKind::Throughput;
  e.value = a.value + b.value;
  e.std_error = std::hypot(a.std_error, b.std_error);
  e.trials = std::max(a.trials, b.trials);
  e.ci95_low = std::max(0.0, e.value - 1.96 * e.std_error);
  e.ci95_high = e.value + 1.96 * e.std_error;
  return e;
}

}  // namespace

MetricEstimate binomial_estimate(std::uint64_t hits, std::uint64_t trials) {
  MetricEstimate e;
  e.kind = MetricKind::Outage;
  e.method = Method::MonteCarlo;
  e.trials = trials;
  if (trials == 0) return e;
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  e.value = p;
  e.std_error = std::sqrt(p * (1.0 - p) / n);
  constexpr double z = 1.959963984540054;
  const double z2 = z * z;
  const double centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
  // The bounds are exact at the edges; the formula leaves rounding residue there.
  e.ci95_low = hits == 0 ? 0.0 : std::clamp(centre - half, 0.0, 1.0);
  e.ci95_high = hits == trials ? 1.0 : std::clamp(centre + half, 0.0, 1.0);
  return e;
}

std::vector<McScenarioResult> mc_evaluate(const std::vector<SystemConfig>& scenarios,
                                          std::uint64_t trials, std::uint64_t seed,
                                          const McOptions& opts) {
  if (trials < 1) throw std::invalid_argument("mc_evaluate: trials must be >= 1");
  if (opts.chunk < 1) throw std::invalid_argument("mc_evaluate: chunk must be >= 1");
  if (scenarios.empty()) return {};

  const DrawShape shape = scenarios.front().draw_shape();
  std::vector<Prepared> prepared;
  prepared.reserve(scenarios.size());
  for (const auto& s : scenarios) {
    if (!(s.draw_shape() == shape)) {
      throw std::invalid_argument("mc_evaluate: scenarios must share element counts, fading and omega_ri");
    }
    validate_config(s);
    prepared.push_back({s, link_budget(s)});
  }

  const std::size_t n_scen = prepared.size();
  const std::uint64_t chunk = opts.chunk;
  const std::uint64_t n_chunks = (trials + chunk - 1) / chunk;
  std::vector<Partial> partials(n_chunks * n_scen);

  parallel_for(n_chunks, resolve_workers(opts.workers), [&](std::size_t c) {
    const std::uint64_t begin = c * chunk;
    const std::uint64_t end = std::min<std::uint64_t>(trials, begin + chunk);
    Partial* slot = &partials[c * n_scen];
    for (std::uint64_t t = begin; t < end; ++t) {
      PhiloxStream rng(seed, t);
      const TrialDraw draw = draw_trial(shape, rng);
      for (std::size_t s = 0; s < n_scen; ++s) {
        accumulate(prepared[s], draw, opts.dn_rate_conditional, slot[s]);
      }
    }
  });

  std::vector<McScenarioResult> results(n_scen);
  for (std::size_t s = 0; s < n_scen; ++s) {
    Partial total;
    for (std::uint64_t c = 0; c < n_chunks; ++c) total.merge(partials[c * n_scen + s]);

    McScenarioResult& r = results[s];
    r.outage_n = binomial_estimate(total.counts[kOutN], trials);
    r.outage_m = binomial_estimate(total.counts[kOutM], trials);
    r.outage_oma_n = binomial_estimate(total.counts[kOutOmaN], trials);
    r.outage_oma_m = binomial_estimate(total.counts[kOutOmaM], trials);
    r.rate_n = mean_estimate(total.avgs[kRateN], MetricKind::ErgodicRate);
    r.rate_m = mean_estimate(total.avgs[kRateM], MetricKind::ErgodicRate);
    r.rate_oma_n = mean_estimate(total.avgs[kRateOmaN], MetricKind::ErgodicRate);
    r.rate_oma_m = mean_estimate(total.avgs[kRateOmaM], MetricKind::ErgodicRate);
    r.throughput_dl = mean_estimate(total.avgs[kDl], MetricKind::Throughput);
    r.throughput_dt = opts.dn_rate_conditional ? sum_estimate(r.rate_n, r.rate_m)
                                               : mean_estimate(total.avgs[kDt], MetricKind::Throughput);
    r.throughput_dl_oma = mean_estimate(total.avgs[kDlOma], MetricKind::Throughput);
    r.throughput_dt_oma = mean_estimate(total.avgs[kDtOma], MetricKind::Throughput);
  }
  return results;
}

MetricEstimate mc_outage(const SystemConfig& cfg, User user, Scheme scheme, std::uint64_t trials,
                         std::uint64_t seed, const McOptions& opts) {
  const auto r = mc_evaluate({cfg}, trials, seed, opts).front();
  if (scheme == Scheme::NOMA) return user == User::N ? r.outage_n : r.outage_m;
  return user == User::N ? r.outage_oma_n : r.outage_oma_m;
}

MetricEstimate mc_ergodic_rate(const SystemConfig& cfg, User user, Scheme scheme,
                               std::uint64_t trials, std::uint64_t seed, const McOptions& opts) {
  const auto r = mc_evaluate({cfg}, trials, seed, opts).front();
  if (scheme == Scheme::NOMA) return user == User::N ? r.rate_n : r.rate_m;
  return user == User::N ? r.rate_oma_n : r.rate_oma_m;
}

MetricEstimate mc_throughput(const SystemConfig& cfg, ThroughputMode mode, std::uint64_t trials,
                             std::uint64_t seed, const McOptions& opts) {
  const auto r = mc_evaluate({cfg}, trials, seed, opts).front();
  return mode == ThroughputMode::DelayLimited ? r.throughput_dl : r.throughput_dt;
}

}  // namespace risnoma
