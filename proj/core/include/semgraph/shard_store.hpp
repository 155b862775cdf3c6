#pragma once

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "semgraph/binary_io.hpp"
#include "semgraph/graph.hpp"

namespace semgraph {

// One vertex interval's in-edges in CSR form. The in-neighbors of
// v in [lo, hi) are col[row[v - lo] .. row[v - lo + 1]).
struct Shard {
  std::uint64_t shard_id = 0;
  VertexInterval interval;
  std::vector<std::uint64_t> row;
  std::vector<VertexId> col;

  std::span<const VertexId> in_neighbors(VertexId v) const {
    const auto i = v - interval.lo;
    return std::span<const VertexId>(col).subspan(row[i], row[i + 1] - row[i]);
  }

  friend bool operator==(const Shard&, const Shard&) = default;
};

// Shard file layout (all little-endian):
//   0  magic "SEMGRAPH"
//   8  u32 format version
//  12  u32 shard id
//  16  u64 lo
//  24  u64 hi
//  32  u64 edge count
//  40  u64 row[hi - lo + 1]
//      u64 col[edge count]
inline constexpr std::string_view kShardMagic = "SEMGRAPH";
inline constexpr std::uint32_t kShardFormatVersion = 1;
inline constexpr std::uint64_t kShardHeaderBytes = 40;
inline constexpr std::uint64_t kPropertyHeaderBytes = 24;
inline constexpr std::uint64_t kPropertyIntervalBytes = 24;

inline constexpr std::string_view kPropertyFile = "property.bin";
inline constexpr std::string_view kVertexFile = "vertices.bin";
inline constexpr std::string_view kIdMapFile = "idmap.bin";

std::filesystem::path shard_file_path(const std::filesystem::path& dir, std::uint64_t shard_id);

// Bytes of the row+col arrays only (the part held by the edge cache).
inline std::uint64_t shard_payload_bytes(const VertexInterval& iv) {
  return 8 * (iv.size() + 1) + 8 * iv.edge_count;
}
inline std::uint64_t shard_file_bytes(const VertexInterval& iv) {
  return kShardHeaderBytes + shard_payload_bytes(iv);
}
// Per-shard bytes that are not edge records: header plus row array.
inline std::uint64_t shard_overhead_bytes(const VertexInterval& iv) {
  return kShardHeaderBytes + 8 * (iv.size() + 1);
}

// Plain snapshot of IoCounters.
struct IoCounts {
  std::uint64_t shard_bytes_read = 0;
  std::uint64_t shard_loads = 0;
  std::uint64_t vertex_bytes_written = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;

  friend IoCounts operator-(const IoCounts& a, const IoCounts& b) {
    return {a.shard_bytes_read - b.shard_bytes_read, a.shard_loads - b.shard_loads,
            a.vertex_bytes_written - b.vertex_bytes_written,
            a.cache_hits - b.cache_hits, a.cache_misses - b.cache_misses};
  }
  friend bool operator==(const IoCounts&, const IoCounts&) = default;
};

// Storage-layer I/O accounting; safe to bump from any worker.
class IoCounters {
 public:
  void add_shard_read(std::uint64_t bytes) {
    shard_bytes_read_.fetch_add(bytes, std::memory_order_relaxed);
    shard_loads_.fetch_add(1, std::memory_order_relaxed);
  }
  void add_vertex_write(std::uint64_t bytes) {
    vertex_bytes_written_.fetch_add(bytes, std::memory_order_relaxed);
  }
  void add_cache_hit() { cache_hits_.fetch_add(1, std::memory_order_relaxed); }
  void add_cache_miss() { cache_misses_.fetch_add(1, std::memory_order_relaxed); }

  IoCounts snapshot() const {
    return {shard_bytes_read_.load(), shard_loads_.load(), vertex_bytes_written_.load(),
            cache_hits_.load(), cache_misses_.load()};
  }

 private:
  std::atomic<std::uint64_t> shard_bytes_read_{0};
  std::atomic<std::uint64_t> shard_loads_{0};
  std::atomic<std::uint64_t> vertex_bytes_written_{0};
  std::atomic<std::uint64_t> cache_hits_{0};
  std::atomic<std::uint64_t> cache_misses_{0};
};

// Throws Error(kFormat) unless the CSR invariants hold. vertex_count bounds
// the col entries when known.
void check_shard(const Shard& shard, std::optional<std::uint64_t> vertex_count = std::nullopt);

io::Bytes encode_shard(const Shard& shard);
io::Bytes encode_payload(const Shard& shard);
Shard decode_shard(std::span<const std::uint8_t> file,
                   std::optional<std::uint64_t> vertex_count = std::nullopt);
Shard decode_payload(std::uint64_t shard_id, const VertexInterval& interval,
                     std::span<const std::uint8_t> payload,
                     std::optional<std::uint64_t> vertex_count = std::nullopt);

void write_shard(const Shard& shard, const std::filesystem::path& dir);
Shard read_shard(const std::filesystem::path& path, IoCounters& counters);

struct GraphFiles {
  GraphMeta meta;
  DegreeInfo degrees;
  std::vector<double> values;
};

// property.bin: u64 vertex_count, edge_count, shard_count, then
// (lo, hi, edge_count) per interval.
// vertices.bin: f64 values[V], u64 in_degree[V], u64 out_degree[V].
void write_metadata(const GraphMeta& meta, const DegreeInfo& degrees,
                    std::span<const double> values, const std::filesystem::path& dir);
GraphFiles read_metadata(const std::filesystem::path& dir);

// idmap.bin: u64 count, then count original ids indexed by dense id.
void write_idmap(std::span<const std::uint64_t> original_ids, const std::filesystem::path& dir);
std::vector<std::uint64_t> read_idmap(const std::filesystem::path& dir);

// A preprocessed graph directory: metadata held in memory, shards read on
// demand with every byte counted.
class ShardStore {
 public:
  explicit ShardStore(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  const GraphMeta& meta() const { return files_.meta; }
  const DegreeInfo& degrees() const { return files_.degrees; }
  const std::vector<double>& stored_values() const { return files_.values; }
  std::uint64_t shard_count() const { return files_.meta.shard_count; }

  Shard load_shard(std::uint64_t shard_id) const;
  // Raw row+col bytes of a shard with the header verified and stripped.
  io::Bytes load_payload(std::uint64_t shard_id) const;

  std::uint64_t total_shard_file_bytes() const;
  std::uint64_t total_overhead_bytes() const;

  IoCounters& counters() const { return counters_; }

 private:
  std::filesystem::path dir_;
  GraphFiles files_;
  mutable IoCounters counters_;
};

}  // namespace semgraph
