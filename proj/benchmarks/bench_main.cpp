#include "risnoma/analytic.hpp"
#include "risnoma/channel.hpp"
#include "risnoma/mcsim.hpp"
#include "risnoma/quadrature.hpp"
#include "risnoma/rng.hpp"
#include "risnoma/specfun.hpp"

#include <benchmark/benchmark.h>

using namespace risnoma;

namespace {

SystemConfig at_dbm(double dbm, SicMode sic = SicMode::Perfect) {
  SystemConfig c;
  c.P_s = dbm_to_mw(dbm);
  c.sic = sic;
  return c;
}

void BM_GaussLaguerreRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::gauss_laguerre_rule(n));
}
BENCHMARK(BM_GaussLaguerreRule)->Arg(100)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_IncompleteGamma(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::regularized_lower_gamma(4.94, x));
    x = x < 50.0 ? x * 1.01 : 0.1;
  }
}
BENCHMARK(BM_IncompleteGamma);

void BM_DrawTrial(benchmark::State& state) {
  DrawShape shape;
  shape.N = shape.M = static_cast<int>(state.range(0));
  PhiloxStream rng(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(draw_trial(shape, rng));
}
BENCHMARK(BM_DrawTrial)->Arg(3)->Arg(7)->Arg(32);

void BM_MonteCarloTrials(benchmark::State& state) {
  const std::vector<SystemConfig> s{at_dbm(10.0), at_dbm(10.0, SicMode::Imperfect)};
  McOptions opts;
  opts.workers = 1;
  const auto trials = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc_evaluate(s, trials, 1, opts));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * state.range(0));
}
BENCHMARK(BM_MonteCarloTrials)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_OutagePsic(benchmark::State& state) {
  const SystemConfig c = at_dbm(10.0);
  const LinkBudget lb = link_budget(c);
  const QuadConfig qc;
  for (auto _ : state) benchmark::DoNotOptimize(outage_dn_psic(c, lb, qc));
}
BENCHMARK(BM_OutagePsic)->Unit(benchmark::kMicrosecond);

void BM_OutageIpsic(benchmark::State& state) {
  const SystemConfig c = at_dbm(10.0, SicMode::Imperfect);
  const LinkBudget lb = link_budget(c);
  const QuadConfig qc;
  for (auto _ : state) benchmark::DoNotOptimize(outage_dn_ipsic(c, lb, qc));
}
BENCHMARK(BM_OutageIpsic)->Unit(benchmark::kMillisecond);

void BM_ErgodicDm(benchmark::State& state) {
  const SystemConfig c = at_dbm(10.0);
  const LinkBudget lb = link_budget(c);
  const QuadConfig qc;
  for (auto _ : state) benchmark::DoNotOptimize(ergodic_dm(c, lb, qc));
}
BENCHMARK(BM_ErgodicDm)->Unit(benchmark::kMillisecond);

void BM_ErgodicDnPsic(benchmark::State& state) {
  const SystemConfig c = at_dbm(10.0);
  const LinkBudget lb = link_budget(c);
  const QuadConfig qc;
  for (auto _ : state) benchmark::DoNotOptimize(ergodic_dn_psic(c, lb, qc));
}
BENCHMARK(BM_ErgodicDnPsic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
