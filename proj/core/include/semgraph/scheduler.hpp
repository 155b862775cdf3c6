#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semgraph/bloom_filter.hpp"
#include "semgraph/graph.hpp"
#include "semgraph/shard_store.hpp"

namespace semgraph {

class EdgeCache;

// Ratio at or below which shards are probed against their filters.
inline constexpr double kDefaultActivationThreshold = 1.0 / 1000.0;

struct ShardBloomFilter {
  std::uint64_t shard_id = 0;
  BloomFilter filter;
};

enum class ScheduleAction { kLoad, kSkip };

enum class ScheduleReason {
  kSchedulingOff,
  kRatioAboveThreshold,
  kFilterHit,
  kFilterMiss,
};

struct ScheduleDecision {
  std::uint64_t shard_id = 0;
  ScheduleAction action = ScheduleAction::kLoad;
  ScheduleReason reason = ScheduleReason::kSchedulingOff;
};

struct SchedulerConfig {
  bool selective = true;
  double activation_threshold = kDefaultActivationThreshold;
};

// Filter over the distinct source vertices (col entries) of one shard.
ShardBloomFilter build_filter(const Shard& shard);

// Builds one filter per shard, reading shards through the cache when one is
// given so the load phase also warms it.
std::vector<ShardBloomFilter> build_filters(const ShardStore& store, EdgeCache* cache = nullptr);

// Load when scheduling is off, when the active ratio is above the
// threshold, or when any active vertex hits the shard's filter.
ScheduleDecision decide(std::uint64_t shard_id, std::span<const ShardBloomFilter> filters,
                        std::span<const VertexId> active_vertices, double active_ratio,
                        const SchedulerConfig& config);

const char* to_string(ScheduleReason reason);

}  // namespace semgraph
