#include <array>
#include <memory>
#include <vector>

#include <benchmark/benchmark.h>

#include "approach/adversary.hpp"
#include "approach/hull.hpp"
#include "approach/qp.hpp"
#include "approach/rng.hpp"
#include "approach/scenarios.hpp"
#include "approach/strategy.hpp"

using namespace approach;

namespace {

// Euclidean projection of a random point onto the simplex in R^n.
void BM_QpSimplexProjection(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Xoshiro256 rng(7);
  std::vector<double> point(n);
  for (auto& p : point) p = 2 * rng.uniform() - 1;
  for (auto _ : state) {
    QpModel qp;
    const int first = qp.add_variables(n);
    AffineExpr sum;
    for (int i = 0; i < n; ++i) {
      sum.add(first + i, 1.0);
      AffineExpr diff;
      diff.add(first + i, 1.0).constant = -point[i];
      qp.add_squared_cost(diff);
    }
    qp.add_equality(sum, 1.0);
    benchmark::DoNotOptimize(qp.solve());
  }
}
BENCHMARK(BM_QpSimplexProjection)->Arg(2)->Arg(8)->Arg(32);

// Full runs of the block strategy on the second example against random moves.
void BM_BlockStrategyRun(benchmark::State& state) {
  const Scenario s = scenarios::example2();
  const ConvexBody body = s.body();
  for (auto _ : state) {
    BlockStrategy strategy(s.dim(), s.actions(), s.best_response());
    RandomAdversary adversary(body.vertices(), {}, 3);
    RunOptions o;
    o.horizon = state.range(0);
    benchmark::DoNotOptimize(run(s, strategy, adversary, o));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BlockStrategyRun)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_UpperEnvelope2dBuild(benchmark::State& state) {
  const int per_axis = static_cast<int>(state.range(0));
  Xoshiro256 rng(11);
  std::vector<std::array<double, 2>> sites;
  std::vector<double> values;
  for (int i = 0; i < per_axis; ++i) {
    for (int j = 0; j < per_axis; ++j) {
      const double x = -1 + 2.0 * i / (per_axis - 1), y = -1 + 2.0 * j / (per_axis - 1);
      sites.push_back({x, y});
      values.push_back(-x * x - y * y + 0.1 * rng.uniform());
    }
  }
  for (auto _ : state) {
    UpperEnvelope2d env(sites, values);
    benchmark::DoNotOptimize(env(0.3, -0.2));
  }
}
BENCHMARK(BM_UpperEnvelope2dBuild)->Arg(21)->Arg(41)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
