#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "semgraph/edge_cache.hpp"
#include "semgraph/graph.hpp"
#include "semgraph/scheduler.hpp"
#include "semgraph/shard_store.hpp"

namespace semgraph {

struct UpdateResult {
  double value = 0.0;
  bool changed = false;
};

// Pull-style vertex program: computes v's next value from its in-neighbors
// and the read-only source array. Must not touch engine state.
using UpdateFunction = std::function<UpdateResult(VertexId v, std::span<const VertexId> in_neighbors,
                                                  std::span<const double> src_values,
                                                  const DegreeInfo& degrees)>;

struct EngineConfig {
  unsigned worker_count = 1;
  std::uint64_t max_iterations = 200;
  bool selective_scheduling = true;
  double activation_threshold = kDefaultActivationThreshold;
  CacheConfig cache;
  // A vertex counts as changed only if |new - old| > float_tolerance;
  // 0 means exact inequality.
  double float_tolerance = 0.0;
  // Verifies every dst slot is written exactly once per iteration.
#ifdef NDEBUG
  bool check_single_writer = false;
#else
  bool check_single_writer = true;
#endif
};

struct IterationReport {
  std::uint64_t iteration = 0;
  // Fraction of vertices whose value changed in this iteration.
  double active_ratio = 0.0;
  std::uint64_t shards_loaded = 0;
  std::uint64_t shards_skipped = 0;
  double wall_seconds = 0.0;
  std::uint64_t bytes_read = 0;
  IoCounts io;  // counter deltas over this iteration
};

// Work done before iteration 0 (filter construction).
struct LoadReport {
  double wall_seconds = 0.0;
  bool filters_built = false;
  IoCounts io;
};

struct RunResult {
  std::vector<double> values;
  std::vector<IterationReport> iterations;
  LoadReport load;
  IoCounts totals;
  bool converged = false;  // stopped because no vertex changed
};

// Runs update over every vertex of one shard, writing dst_segment
// (indexed by v - lo). Returns the vertices whose value changed.
std::vector<VertexId> process_shard(const Shard& shard, std::span<const double> src_values,
                                    std::span<double> dst_segment, const UpdateFunction& update,
                                    const DegreeInfo& degrees, double float_tolerance = 0.0);

using IterationCallback = std::function<void(const IterationReport&)>;

// Vertex-centric sliding-window iteration over the store's shards until no
// vertex changes or max_iterations is reached. Iteration 0 treats every
// vertex as active. Not safe for concurrent calls on one store.
RunResult run(const ShardStore& store, const UpdateFunction& update, std::vector<double> init_values,
              const EngineConfig& config, const IterationCallback& on_iteration = {});

}  // namespace semgraph
