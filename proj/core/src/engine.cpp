#include "semgraph/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "semgraph/error.hpp"

namespace semgraph {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool value_changed(double old_value, double new_value, double tolerance) {
  if (new_value == old_value) return false;
  if (tolerance <= 0.0) return true;
  return std::fabs(new_value - old_value) > tolerance;  // NaN (inf - inf) compares false
}

// Runs fn(k) for k in [0, count) on `workers` threads pulling shard ids in
// ascending order. The first exception stops the queue and is rethrown.
template <typename Fn>
void parallel_for_shards(std::uint64_t count, unsigned workers, Fn&& fn) {
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (auto k = next.fetch_add(1); k < count; k = next.fetch_add(1)) {
      try {
        fn(k);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const auto extra = std::min<std::uint64_t>(workers, count);
    for (std::uint64_t i = 1; i < extra; ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::vector<VertexId> process_shard(const Shard& shard, std::span<const double> src_values,
                                    std::span<double> dst_segment, const UpdateFunction& update,
                                    const DegreeInfo& degrees, double float_tolerance) {
  const auto& iv = shard.interval;
  if (dst_segment.size() != iv.size()) {
    throw Error(ErrorCode::kInvalidArgument, "dst segment does not match shard interval");
  }
  std::vector<VertexId> active;
  for (VertexId v = iv.lo; v < iv.hi; ++v) {
    UpdateResult r;
    try {
      r = update(v, shard.in_neighbors(v), src_values, degrees);
    } catch (const Error& e) {
      throw Error(e.code(), "update failed for vertex " + std::to_string(v) + " in shard " +
                                std::to_string(shard.shard_id) + ": " + e.what());
    } catch (const std::exception& e) {
      throw Error(ErrorCode::kInternal, "update failed for vertex " + std::to_string(v) +
                                            " in shard " + std::to_string(shard.shard_id) + ": " +
                                            e.what());
    }
    dst_segment[v - iv.lo] = r.value;
    if (r.changed && value_changed(src_values[v], r.value, float_tolerance)) active.push_back(v);
  }
  return active;
}

RunResult run(const ShardStore& store, const UpdateFunction& update, std::vector<double> init_values,
              const EngineConfig& config, const IterationCallback& on_iteration) {
  const auto& meta = store.meta();
  const auto n = meta.vertex_count;
  const auto shard_count = meta.shard_count;
  if (init_values.size() != n) {
    throw Error(ErrorCode::kInvalidArgument, "init_values has " + std::to_string(init_values.size()) +
                                                 " entries, graph has " + std::to_string(n) + " vertices");
  }
  if (config.worker_count == 0) throw Error(ErrorCode::kInvalidArgument, "worker_count must be >= 1");
  if (!(config.activation_threshold >= 0.0 && config.activation_threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "activation_threshold must lie in [0, 1]");
  }

  auto& counters = store.counters();
  EdgeCache cache(config.cache, shard_count);
  const SchedulerConfig sched{config.selective_scheduling, config.activation_threshold};

  RunResult result;
  const auto run_start = counters.snapshot();

  std::vector<ShardBloomFilter> filters;
  if (config.selective_scheduling) {
    const auto t0 = Clock::now();
    const auto before = counters.snapshot();
    filters = build_filters(store, config.cache.budget_bytes > 0 ? &cache : nullptr);
    result.load = {seconds_since(t0), true, counters.snapshot() - before};
  }

  VertexState state(std::move(init_values));
  state.active.resize(n);
  std::iota(state.active.begin(), state.active.end(), VertexId{0});
  double ratio = 1.0;

  std::unique_ptr<std::atomic<std::uint8_t>[]> written;
  if (config.check_single_writer) written = std::make_unique<std::atomic<std::uint8_t>[]>(n);

  std::vector<std::vector<VertexId>> active_by_shard(shard_count);
  std::vector<std::uint8_t> loaded(shard_count);

  for (std::uint64_t iter = 0; iter < config.max_iterations && ratio > 0.0; ++iter) {
    const auto t0 = Clock::now();
    const auto before = counters.snapshot();
    if (written) {
      for (std::uint64_t v = 0; v < n; ++v) written[v].store(0, std::memory_order_relaxed);
    }
    const std::span<const double> src(state.src_values);

    parallel_for_shards(shard_count, config.worker_count, [&](std::uint64_t k) {
      const auto& iv = meta.intervals[k];
      std::span<double> dst = std::span<double>(state.dst_values).subspan(iv.lo, iv.size());
      const auto d = decide(k, filters, state.active, ratio, sched);
      if (d.action == ScheduleAction::kSkip) {
        std::copy(src.begin() + static_cast<std::ptrdiff_t>(iv.lo),
                  src.begin() + static_cast<std::ptrdiff_t>(iv.hi), dst.begin());
        active_by_shard[k].clear();
        loaded[k] = 0;
      } else {
        const auto shard = cache.get_or_load(k, store);
        active_by_shard[k] =
            process_shard(shard, src, dst, update, store.degrees(), config.float_tolerance);
        loaded[k] = 1;
      }
      if (written) {
        for (auto v = iv.lo; v < iv.hi; ++v) {
          if (written[v].exchange(1, std::memory_order_relaxed) != 0) {
            throw Error(ErrorCode::kInternal, "vertex " + std::to_string(v) + " written twice");
          }
        }
      }
    });

    if (written) {
      for (std::uint64_t v = 0; v < n; ++v) {
        if (written[v].load(std::memory_order_relaxed) != 1) {
          throw Error(ErrorCode::kInternal, "vertex " + std::to_string(v) + " not written");
        }
      }
    }

    state.active.clear();
    for (const auto& list : active_by_shard) state.active.insert(state.active.end(), list.begin(), list.end());
    std::swap(state.src_values, state.dst_values);
    ratio = state.active_ratio();

    IterationReport report;
    report.iteration = iter;
    report.active_ratio = ratio;
    report.shards_loaded = static_cast<std::uint64_t>(std::count(loaded.begin(), loaded.end(), 1));
    report.shards_skipped = shard_count - report.shards_loaded;
    report.io = counters.snapshot() - before;
    report.bytes_read = report.io.shard_bytes_read;
    report.wall_seconds = seconds_since(t0);
    result.iterations.push_back(report);
    if (on_iteration) on_iteration(report);
  }

  result.converged = ratio == 0.0;
  result.values = std::move(state.src_values);
  result.totals = counters.snapshot() - run_start;
  return result;
}

}  // namespace semgraph
