#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "anclab/baseline.hpp"
#include "anclab/decoder.hpp"
#include "anclab/marker.hpp"

using namespace anclab;

static void BM_BuildParams(benchmark::State& state) {
  const std::int64_t n = std::int64_t{1} << state.range(0);
  for (auto _ : state) {
    ParamTable p = build_params(n, 8);
    benchmark::DoNotOptimize(p.gamma.back());
  }
}
BENCHMARK(BM_BuildParams)->DenseRange(10, 40, 10);

static void BM_LabelForest(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  Forest f = gen_forest(n, 8, ForestShape::random(), 42);
  ParamTable p = build_params(n, 8);
  for (auto _ : state) {
    Labeling lab = label_forest(p, f);
    benchmark::DoNotOptimize(lab.labels.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_LabelForest)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

static void BM_BaselineLabel(benchmark::State& state) {
  const std::int64_t n = state.range(0);
  Forest f = gen_forest(n, 8, ForestShape::random(), 42);
  for (auto _ : state) {
    auto labels = baseline_label(f);
    benchmark::DoNotOptimize(labels.data());
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_BaselineLabel)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

namespace {

struct QueryFixture {
  Forest f;
  ParamTable p;
  Labeling lab;
  std::vector<BaselineLabel> base;
  std::vector<std::pair<NodeId, NodeId>> pairs;

  explicit QueryFixture(std::int64_t n)
      : f(gen_forest(n, 8, ForestShape::random(), 42)),
        p(build_params(n, 8)),
        lab(label_forest(p, f)),
        base(baseline_label(f)) {
    std::mt19937_64 rng(7);
    pairs.resize(1 << 12);
    for (auto& [u, v] : pairs) {
      u = 1 + static_cast<NodeId>(rng() % n);
      v = 1 + static_cast<NodeId>(rng() % n);
    }
  }
};

}  // namespace

static void BM_SchemeQuery(benchmark::State& state) {
  static QueryFixture fx(1 << 16);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = fx.pairs[i++ & (fx.pairs.size() - 1)];
    benchmark::DoNotOptimize(is_ancestor(fx.p, fx.lab.label(u), fx.lab.label(v)));
  }
}
BENCHMARK(BM_SchemeQuery);

static void BM_BaselineQuery(benchmark::State& state) {
  static QueryFixture fx(1 << 16);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = fx.pairs[i++ & (fx.pairs.size() - 1)];
    benchmark::DoNotOptimize(baseline_is_ancestor(fx.base[u], fx.base[v]));
  }
}
BENCHMARK(BM_BaselineQuery);

static void BM_AdjacencyQuery(benchmark::State& state) {
  static QueryFixture fx(1 << 16);
  std::vector<BigInt> adj(fx.f.size() + 1);
  for (NodeId v = 1; v <= fx.f.size(); ++v) {
    adj[v] = make_adj_label(fx.p, fx.lab.label(v), fx.lab.depth(v));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [u, v] = fx.pairs[i++ & (fx.pairs.size() - 1)];
    benchmark::DoNotOptimize(is_adjacent(fx.p, adj[u], adj[v]));
  }
}
BENCHMARK(BM_AdjacencyQuery);

BENCHMARK_MAIN();
