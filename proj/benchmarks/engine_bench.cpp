#include <benchmark/benchmark.h>

#include <filesystem>

#include "semgraph/algorithms.hpp"
#include "semgraph/engine.hpp"
#include "semgraph/graph_gen.hpp"
#include "semgraph/preprocess.hpp"

namespace {

namespace fs = std::filesystem;

const fs::path& bench_graph() {
  static const fs::path dir = [] {
    const auto root = fs::temp_directory_path() / "semgraph_engine_bench";
    fs::create_directories(root);
    const auto src = semgraph::generate({semgraph::GraphKind::kPowerLaw, 1 << 16, 1 << 20, 3}, root / "g.txt");
    semgraph::PreprocessOptions opt;
    opt.policy.target_edges_per_shard = 1 << 16;
    opt.symmetrize = true;
    semgraph::preprocess(src, root / "g", opt);
    return root / "g";
  }();
  return dir;
}

// One PageRank iteration per benchmark iteration; arg0 = workers,
// arg1 = cache mode (0 = no cache).
void BM_PageRankIteration(benchmark::State& state) {
  semgraph::ShardStore store(bench_graph());
  semgraph::EngineConfig config;
  config.worker_count = static_cast<unsigned>(state.range(0));
  config.max_iterations = 1;
  config.selective_scheduling = false;
  if (state.range(1) > 0) {
    config.cache = {~std::uint64_t{0}, static_cast<semgraph::CacheMode>(state.range(1))};
  }
  const semgraph::AlgorithmSpec algo{semgraph::Algorithm::kPageRank, 0};
  const auto update = semgraph::make_update(algo);
  const auto init = semgraph::initial_values(algo, store.meta().vertex_count);
  for (auto _ : state) {
    auto result = semgraph::run(store, update, init, config);
    benchmark::DoNotOptimize(result.values.data());
  }
  state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * store.meta().edge_count));
}
BENCHMARK(BM_PageRankIteration)
    ->Args({1, 0})
    ->Args({2, 0})
    ->Args({4, 0})
    ->Unit(benchmark::kMillisecond);

void BM_WccToConvergence(benchmark::State& state) {
  semgraph::ShardStore store(bench_graph());
  semgraph::EngineConfig config;
  config.selective_scheduling = state.range(0) != 0;
  config.cache = {~std::uint64_t{0}, semgraph::CacheMode::kFast};
  const semgraph::AlgorithmSpec algo{semgraph::Algorithm::kWcc, 0};
  const auto update = semgraph::make_update(algo);
  const auto init = semgraph::initial_values(algo, store.meta().vertex_count);
  for (auto _ : state) {
    auto result = semgraph::run(store, update, init, config);
    state.counters["iterations"] = static_cast<double>(result.iterations.size());
  }
}
BENCHMARK(BM_WccToConvergence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
