#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "semgraph/codec.hpp"
#include "semgraph/edge_cache.hpp"
#include "semgraph/error.hpp"
#include "semgraph/graph_gen.hpp"
#include "test_util.hpp"

namespace semgraph {
namespace {

using testing::TempDir;

constexpr CacheMode kModes[] = {CacheMode::kUncompressed, CacheMode::kFast, CacheMode::kDeflate1,
                                CacheMode::kDeflate3};

io::Bytes csr_payload(std::uint64_t seed) {
  const auto edges = generate_edges({GraphKind::kPowerLaw, 1 << 12, 1 << 15, seed});
  return encode_payload(build_shard(0, {0, 1 << 12, edges.size()}, edges));
}

TEST(Codec, RoundTripProperty) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    io::Bytes raw(rng() % 5000);
    // Mix of runs and noise.
    for (auto& b : raw) b = static_cast<std::uint8_t>(rng() % 4 == 0 ? rng() : 7);
    for (auto mode : kModes) {
      const auto stored = compress(mode, raw);
      ASSERT_EQ(decompress(mode, stored, raw.size()), raw);
    }
  }
}

TEST(Codec, CorruptionDetected) {
  const auto raw = csr_payload(1);
  for (auto mode : {CacheMode::kFast, CacheMode::kDeflate1}) {
    auto stored = compress(mode, raw);
    stored.resize(stored.size() / 2);
    EXPECT_THROW(decompress(mode, stored, raw.size()), Error);
  }
  EXPECT_THROW(decompress(CacheMode::kUncompressed, raw, raw.size() + 1), Error);
  EXPECT_THROW(cache_mode_from_int(5), Error);
}

// Higher modes trade decode time for ratio on sorted-integer CSR payloads.
TEST(Codec, StrongerModesStoreFewerBytes) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto raw = csr_payload(seed);
    const auto m1 = compress(CacheMode::kUncompressed, raw).size();
    const auto m2 = compress(CacheMode::kFast, raw).size();
    const auto m3 = compress(CacheMode::kDeflate1, raw).size();
    const auto m4 = compress(CacheMode::kDeflate3, raw).size();
    EXPECT_EQ(m1, raw.size());
    EXPECT_LT(m2, m1);
    EXPECT_LE(m4, m1);
    EXPECT_LE(m4, m3);
    EXPECT_LT(m3, m2);
  }
}

TEST(EdgeCache, AdmitFitsWithinRemainingBudget) {
  io::Bytes p80(80, 1), p120(120, 1);
  EdgeCache cache({100, CacheMode::kUncompressed}, 4);
  EXPECT_EQ(cache.admit(0, p120), AdmitResult::kRejectedFull);
  EXPECT_EQ(cache.admit(1, p80), AdmitResult::kAdmitted);
  EXPECT_EQ(cache.used_bytes(), 80u);
  EXPECT_EQ(cache.admit(1, p80), AdmitResult::kAlreadyPresent);
  EXPECT_EQ(cache.admit(2, io::Bytes(21, 0)), AdmitResult::kRejectedFull);
  EXPECT_EQ(cache.admit(2, io::Bytes(20, 0)), AdmitResult::kAdmitted);
  EXPECT_EQ(cache.used_bytes(), 100u);
  EXPECT_EQ(cache.admit(3, io::Bytes(1, 0)), AdmitResult::kRejectedFull);
}

TEST(EdgeCache, ZeroBudgetAdmitsNothing) {
  EdgeCache cache({0, CacheMode::kDeflate3}, 1);
  EXPECT_EQ(cache.admit(0, io::Bytes(16, 0)), AdmitResult::kRejectedFull);
  EXPECT_EQ(cache.entry_count(), 0u);
}

class EdgeCacheGraph : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto edges = generate_edges({GraphKind::kPowerLaw, 1 << 10, 1 << 13, 2});
    PreprocessOptions opt;
    opt.policy.target_edges_per_shard = 1000;
    graph_ = testing::build_graph(dir_.path(), edges, opt);
  }

  TempDir dir_;
  std::filesystem::path graph_;
};

TEST_F(EdgeCacheGraph, HitAndMissReturnIdenticalShards) {
  for (auto mode : kModes) {
    ShardStore store(graph_);
    EdgeCache cache({~std::uint64_t{0}, mode}, store.shard_count());
    for (std::uint64_t k = 0; k < store.shard_count(); ++k) {
      const auto miss = cache.get_or_load(k, store);
      const auto before = store.counters().snapshot();
      const auto hit = cache.get_or_load(k, store);
      const auto delta = store.counters().snapshot() - before;
      EXPECT_EQ(miss, hit);
      EXPECT_EQ(hit, store.load_shard(k));
      EXPECT_EQ(delta.shard_bytes_read, 0u);
      EXPECT_EQ(delta.cache_hits, 1u);
    }
    EXPECT_EQ(store.counters().snapshot().cache_misses, store.shard_count());
  }
}

TEST_F(EdgeCacheGraph, BudgetNeverExceeded) {
  ShardStore store(graph_);
  const auto budget = store.total_shard_file_bytes() / 3;
  EdgeCache cache({budget, CacheMode::kUncompressed}, store.shard_count());
  for (int round = 0; round < 3; ++round) {
    for (std::uint64_t k = 0; k < store.shard_count(); ++k) {
      cache.get_or_load(k, store);
      ASSERT_LE(cache.used_bytes(), budget);
    }
  }
  EXPECT_GT(cache.entry_count(), 0u);
  EXPECT_LT(cache.entry_count(), store.shard_count());
}

TEST_F(EdgeCacheGraph, CorruptedEntryIsDroppedAndReloaded) {
  ShardStore store(graph_);
  EdgeCache cache({~std::uint64_t{0}, CacheMode::kUncompressed}, store.shard_count());
  const auto expected = cache.get_or_load(0, store);
  cache.mutate_entry_for_testing(0, [](io::Bytes& b) { b[b.size() / 2] ^= 0xff; });
  const auto before = store.counters().snapshot();
  EXPECT_EQ(cache.get_or_load(0, store), expected);
  const auto delta = store.counters().snapshot() - before;
  EXPECT_EQ(delta.cache_misses, 1u);
  EXPECT_EQ(delta.shard_loads, 1u);
  // Re-admitted after the reload.
  EXPECT_TRUE(cache.contains(0));
  EXPECT_EQ(cache.get_or_load(0, store), expected);
}

TEST_F(EdgeCacheGraph, ConcurrentAccessKeepsBudget) {
  ShardStore store(graph_);
  const auto budget = store.total_shard_file_bytes() / 2;
  EdgeCache cache({budget, CacheMode::kFast}, store.shard_count());
  std::vector<std::jthread> threads;
  for (int t = 0; t < 6; ++t) {
    threads.emplace_back([&, t] {
      for (int round = 0; round < 4; ++round) {
        for (std::uint64_t i = 0; i < store.shard_count(); ++i) {
          const auto k = (i + t) % store.shard_count();
          const auto s = cache.get_or_load(k, store);
          EXPECT_EQ(s.shard_id, k);
        }
      }
    });
  }
  threads.clear();
  EXPECT_LE(cache.used_bytes(), budget);
  const auto c = store.counters().snapshot();
  EXPECT_EQ(c.cache_hits + c.cache_misses, 6u * 4 * store.shard_count());
}

}  // namespace
}  // namespace semgraph
