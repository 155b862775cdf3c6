#include <benchmark/benchmark.h>

#include <cstdint>

#include "semgraph/bloom_filter.hpp"

namespace {

void BM_BloomProbe(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  semgraph::BloomFilter filter(n);
  for (std::uint64_t i = 0; i < n; ++i) filter.insert(2 * i);
  std::uint64_t key = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(filter.may_contain(key));
    key += 7;
  }
}
BENCHMARK(BM_BloomProbe)->Range(1 << 10, 1 << 20);

}  // namespace
