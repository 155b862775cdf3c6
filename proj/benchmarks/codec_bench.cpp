#include <benchmark/benchmark.h>

#include "semgraph/codec.hpp"
#include "semgraph/graph_gen.hpp"
#include "semgraph/preprocess.hpp"
#include "semgraph/shard_store.hpp"

namespace {

using semgraph::CacheMode;

// Payload of a single-shard power-law graph: the bytes the edge cache holds.
const semgraph::io::Bytes& sample_payload() {
  static const semgraph::io::Bytes payload = [] {
    semgraph::GenSpec spec{semgraph::GraphKind::kPowerLaw, 1 << 14, 1 << 17, 7};
    const auto edges = semgraph::generate_edges(spec);
    const semgraph::VertexInterval iv{0, 1 << 14, edges.size()};
    return semgraph::encode_payload(semgraph::build_shard(0, iv, edges));
  }();
  return payload;
}

void BM_Compress(benchmark::State& state) {
  const auto mode = static_cast<CacheMode>(state.range(0));
  const auto& raw = sample_payload();
  std::size_t stored = 0;
  for (auto _ : state) {
    auto out = semgraph::compress(mode, raw);
    stored = out.size();
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * raw.size()));
  state.counters["ratio"] = static_cast<double>(raw.size()) / static_cast<double>(stored);
}
BENCHMARK(BM_Compress)->DenseRange(1, 4);

void BM_Decompress(benchmark::State& state) {
  const auto mode = static_cast<CacheMode>(state.range(0));
  const auto& raw = sample_payload();
  const auto stored = semgraph::compress(mode, raw);
  for (auto _ : state) {
    auto out = semgraph::decompress(mode, stored, raw.size());
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * raw.size()));
}
BENCHMARK(BM_Decompress)->DenseRange(1, 4);

}  // namespace
