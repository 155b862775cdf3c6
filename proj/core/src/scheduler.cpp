#include "semgraph/scheduler.hpp"

#include <algorithm>

#include "semgraph/edge_cache.hpp"
#include "semgraph/error.hpp"

namespace semgraph {

ShardBloomFilter build_filter(const Shard& shard) {
  std::vector<VertexId> sources(shard.col.begin(), shard.col.end());
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  ShardBloomFilter f{shard.shard_id, BloomFilter(sources.size())};
  for (auto u : sources) f.filter.insert(u);
  return f;
}

std::vector<ShardBloomFilter> build_filters(const ShardStore& store, EdgeCache* cache) {
  std::vector<ShardBloomFilter> filters;
  filters.reserve(store.shard_count());
  for (std::uint64_t k = 0; k < store.shard_count(); ++k) {
    filters.push_back(build_filter(cache ? cache->get_or_load(k, store) : store.load_shard(k)));
  }
  return filters;
}

ScheduleDecision decide(std::uint64_t shard_id, std::span<const ShardBloomFilter> filters,
                        std::span<const VertexId> active_vertices, double active_ratio,
                        const SchedulerConfig& config) {
  if (!config.selective) return {shard_id, ScheduleAction::kLoad, ScheduleReason::kSchedulingOff};
  if (active_ratio > config.activation_threshold) {
    return {shard_id, ScheduleAction::kLoad, ScheduleReason::kRatioAboveThreshold};
  }
  if (shard_id >= filters.size()) {
    throw Error(ErrorCode::kInvalidArgument, "no filter for shard " + std::to_string(shard_id));
  }
  const auto& filter = filters[shard_id].filter;
  for (auto v : active_vertices) {
    if (filter.may_contain(v)) return {shard_id, ScheduleAction::kLoad, ScheduleReason::kFilterHit};
  }
  return {shard_id, ScheduleAction::kSkip, ScheduleReason::kFilterMiss};
}

const char* to_string(ScheduleReason reason) {
  switch (reason) {
    case ScheduleReason::kSchedulingOff: return "scheduling-off";
    case ScheduleReason::kRatioAboveThreshold: return "ratio-above-threshold";
    case ScheduleReason::kFilterHit: return "filter-hit";
    case ScheduleReason::kFilterMiss: return "filter-miss";
  }
  return "unknown";
}

}  // namespace semgraph
