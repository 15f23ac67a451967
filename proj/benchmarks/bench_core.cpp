// Hot-path benchmarks: holonomy construction per surface type, short-word
// enumeration, field evaluation on and off the certificate path, the Gram
// solve, and a full thin-start retraction.

#include <benchmark/benchmark.h>

#include "teichflow/gradient_field.hpp"
#include "teichflow/holonomy.hpp"
#include "teichflow/retraction_flow.hpp"
#include "teichflow/systole.hpp"

using namespace teich;

namespace {

const Chart& chart_of(int genus, int punctures) {
  static Chart c11 = make_chart({1, 1});
  static Chart c04 = make_chart({0, 4});
  static Chart c12 = make_chart({1, 2});
  static Chart c20 = make_chart({2, 0});
  if (genus == 1 && punctures == 1) return c11;
  if (genus == 0) return c04;
  if (genus == 1) return c12;
  return c20;
}

FNPoint point_for(const Chart& chart) {
  FNPoint x;
  for (int i = 0; i < chart.dim; ++i) {
    x.l.push_back(0.5 + 0.2 * i);
    x.theta.push_back(0.1 * (i + 1));
  }
  return x;
}

void BM_BuildHolonomy(benchmark::State& state) {
  const Chart& chart = chart_of(int(state.range(0)), int(state.range(1)));
  FNPoint x = point_for(chart);
  for (auto _ : state) {
    Holonomy h = build_holonomy(chart, x);
    benchmark::DoNotOptimize(h.gen[0].a.hi);
  }
}
BENCHMARK(BM_BuildHolonomy)->Args({1, 1})->Args({0, 4})->Args({1, 2})->Args({2, 0});

void BM_EnumerateShortGeodesics(benchmark::State& state) {
  const Chart& chart = chart_of(1, 1);
  Holonomy h = build_holonomy(chart, {{1.2}, {0.4}});
  const int max_len = int(state.range(0));
  for (auto _ : state) {
    ShortSet ss = enumerate_short_geodesics(h, 3.5, max_len, false);
    benchmark::DoNotOptimize(ss.entries.size());
  }
}
BENCHMARK(BM_EnumerateShortGeodesics)->Arg(8)->Arg(10)->Arg(12);

void BM_SystoleCertificate(benchmark::State& state) {
  const Chart& chart = chart_of(2, 0);
  FNPoint x{{0.03, 0.12, 0.04}, {0.01, -0.05, 0.02}};
  for (auto _ : state) {
    SystoleResult s = systole(chart, x, 8);
    benchmark::DoNotOptimize(s.lambda);
  }
}
BENCHMARK(BM_SystoleCertificate);

void BM_SystoleEnumerated(benchmark::State& state) {
  const Chart& chart = chart_of(1, 1);
  FNPoint x{{2.5}, {1.25}};
  for (auto _ : state) {
    SystoleResult s = systole(chart, x, 12);
    benchmark::DoNotOptimize(s.lambda);
  }
}
BENCHMARK(BM_SystoleEnumerated);

void BM_VectorFieldThin(benchmark::State& state) {
  const Chart& chart = chart_of(2, 0);
  FNPoint x{{0.03, 0.12, 0.04}, {0.01, -0.05, 0.02}};
  for (auto _ : state) {
    FieldEval fe = vector_field(chart, x, 0.05, BlendMode::BLENDED, MetricModel{}, 8);
    benchmark::DoNotOptimize(fe.V.dl[0]);
  }
}
BENCHMARK(BM_VectorFieldThin);

void BM_SolveKappa3(benchmark::State& state) {
  std::vector<double> G{0.02, 0.0, 0.0, 0.0, 0.05, 0.0, 0.0, 0.0, 0.08};
  std::vector<double> r{1.0, 0.7, 0.4};
  for (auto _ : state) {
    KappaSolve ks = solve_kappa(G, r);
    benchmark::DoNotOptimize(ks.kappa[0]);
  }
}
BENCHMARK(BM_SolveKappa3);

void BM_Retract(benchmark::State& state) {
  const Chart& chart = chart_of(int(state.range(0)), int(state.range(1)));
  FNPoint x;
  for (int i = 0; i < chart.dim; ++i) {
    x.l.push_back(i == 0 ? 0.02 : 0.1);
    x.theta.push_back(0.01);
  }
  FlowConfig cfg;
  cfg.eps = 0.05;
  for (auto _ : state) {
    Trajectory traj = retract(chart, x, cfg);
    benchmark::DoNotOptimize(traj.endpoint().l[0]);
  }
}
BENCHMARK(BM_Retract)->Args({1, 1})->Args({2, 0});

}  // namespace

BENCHMARK_MAIN();
