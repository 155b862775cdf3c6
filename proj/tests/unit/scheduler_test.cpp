#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "semgraph/bloom_filter.hpp"
#include "semgraph/scheduler.hpp"

namespace semgraph {
namespace {

Shard shard_with_sources(std::uint64_t id, std::vector<VertexId> col) {
  Shard s;
  s.shard_id = id;
  s.interval = {0, 1, col.size()};
  s.row = {0, col.size()};
  s.col = std::move(col);
  return s;
}

TEST(BloomFilter, Sizing) {
  BloomFilter f(1000);
  EXPECT_EQ(f.bit_count(), 10000u);
  EXPECT_EQ(f.hash_count(), 7u);  // round(10 * ln 2)
  BloomFilter wide(10, 40.0);
  EXPECT_EQ(wide.hash_count(), 16u);  // round(27.7) clamped
  BloomFilter narrow(10, 1.0);
  EXPECT_EQ(narrow.hash_count(), 1u);
}

TEST(BloomFilter, NoFalseNegatives) {
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> keys(5000);
  for (auto& k : keys) k = rng();
  BloomFilter f(keys.size());
  for (auto k : keys) f.insert(k);
  for (auto k : keys) ASSERT_TRUE(f.may_contain(k));
}

// At 10 bits/element, k = 7: (1 - e^{-0.7})^7 ~= 0.0082.
TEST(BloomFilter, FalsePositiveRateNearEstimate) {
  const std::uint64_t n = 20000;
  BloomFilter f(n);
  for (std::uint64_t i = 0; i < n; ++i) f.insert(i);
  const double estimate = std::pow(1.0 - std::exp(-0.7), 7);
  EXPECT_NEAR(f.expected_false_positive_rate(), estimate, 1e-12);
  std::uint64_t hits = 0;
  const std::uint64_t probes = 200000;
  for (std::uint64_t i = n; i < n + probes; ++i) hits += f.may_contain(i);
  const double fpr = static_cast<double>(hits) / probes;
  EXPECT_LE(fpr, 0.02);
  EXPECT_NEAR(fpr, estimate, 0.004);
}

TEST(ShardFilter, ContainsEverySource) {
  const auto f = build_filter(shard_with_sources(0, {0, 5, 1, 5}));
  EXPECT_EQ(f.filter.element_count(), 3u);
  for (auto v : {0, 1, 5}) EXPECT_TRUE(f.filter.may_contain(v));
}

TEST(ShardFilter, EmptyShard) {
  const auto f = build_filter(shard_with_sources(0, {}));
  EXPECT_EQ(f.filter.bit_count(), BloomFilter::kMinBits);
  for (std::uint64_t v = 0; v < 1000; ++v) EXPECT_FALSE(f.filter.may_contain(v));
}

TEST(Decide, RatioAboveThresholdLoads) {
  const std::vector<ShardBloomFilter> filters{build_filter(shard_with_sources(0, {7}))};
  const std::vector<VertexId> active{1, 2};
  const auto d = decide(0, filters, active, 0.5, {});
  EXPECT_EQ(d.action, ScheduleAction::kLoad);
  EXPECT_EQ(d.reason, ScheduleReason::kRatioAboveThreshold);
}

TEST(Decide, LowRatioNoHitSkips) {
  const std::vector<ShardBloomFilter> filters{build_filter(shard_with_sources(0, {7}))};
  const std::vector<VertexId> active{100000};
  const auto d = decide(0, filters, active, 0.0005, {});
  EXPECT_EQ(d.action, ScheduleAction::kSkip);
  EXPECT_EQ(d.reason, ScheduleReason::kFilterMiss);
}

TEST(Decide, LowRatioHitLoads) {
  const std::vector<ShardBloomFilter> filters{build_filter(shard_with_sources(0, {7, 9}))};
  const std::vector<VertexId> active{9};
  const auto d = decide(0, filters, active, 0.0005, {});
  EXPECT_EQ(d.action, ScheduleAction::kLoad);
  EXPECT_EQ(d.reason, ScheduleReason::kFilterHit);
}

TEST(Decide, SchedulingOffAlwaysLoads) {
  const std::vector<ShardBloomFilter> filters{build_filter(shard_with_sources(0, {}))};
  const auto d = decide(0, filters, {}, 0.0, {false, kDefaultActivationThreshold});
  EXPECT_EQ(d.action, ScheduleAction::kLoad);
  EXPECT_EQ(d.reason, ScheduleReason::kSchedulingOff);
}

TEST(Decide, ThresholdIsStrict) {
  const std::vector<ShardBloomFilter> filters{build_filter(shard_with_sources(0, {}))};
  EXPECT_EQ(decide(0, filters, {}, 0.001, {}).action, ScheduleAction::kSkip);
  EXPECT_EQ(decide(0, filters, {}, 0.0011, {}).action, ScheduleAction::kLoad);
}

// Soundness against brute-force membership: never skip a shard that has
// an edge from an active vertex.
TEST(Decide, NeverSkipsShardWithActiveSource) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t n = 50 + rng() % 500;
    std::vector<Shard> shards;
    std::vector<ShardBloomFilter> filters;
    for (std::uint64_t k = 0; k < 6; ++k) {
      std::vector<VertexId> col(rng() % 30);
      for (auto& c : col) c = rng() % n;
      shards.push_back(shard_with_sources(k, col));
      filters.push_back(build_filter(shards.back()));
    }
    std::vector<VertexId> active(rng() % 4);
    for (auto& a : active) a = rng() % n;
    for (std::uint64_t k = 0; k < 6; ++k) {
      bool has_active_source = false;
      for (auto u : shards[k].col) {
        has_active_source |= std::find(active.begin(), active.end(), u) != active.end();
      }
      const auto d = decide(k, filters, active, 0.0, {});
      if (has_active_source) ASSERT_EQ(d.action, ScheduleAction::kLoad);
      if (d.action == ScheduleAction::kSkip) ASSERT_EQ(d.reason, ScheduleReason::kFilterMiss);
    }
  }
}

}  // namespace
}  // namespace semgraph
