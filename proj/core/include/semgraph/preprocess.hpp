#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "semgraph/graph.hpp"
#include "semgraph/shard_store.hpp"

namespace semgraph {

enum class EdgeListFormat {
  kText,    // "src dst" per line, '#' starts a comment line
  kBinary,  // (src, dst) pairs of u64 little-endian
};

struct EdgeListSource {
  EdgeListFormat format = EdgeListFormat::kText;
  std::filesystem::path path;
};

struct ShardingPolicy {
  std::uint64_t target_edges_per_shard = std::uint64_t{1} << 20;
  std::optional<std::uint64_t> max_shard_count;
};

struct PreprocessOptions {
  ShardingPolicy policy;
  // Emit (v, u) next to every (u, v).
  bool symmetrize = false;
  // Renumber ids densely (order-preserving) and write idmap.bin.
  bool remap = false;
  // Forces |V| (without remap) so trailing isolated vertices are kept.
  std::optional<std::uint64_t> vertex_count;
  unsigned workers = 1;
};

// Without remap, ids are used as-is and must stay below this bound.
inline constexpr std::uint64_t kMaxDenseVertexId = std::uint64_t{1} << 32;

// Streams raw edges in file order. Throws Error(kNotFound) for a missing
// file and Error(kFormat) for malformed content (text errors carry the
// line number).
void for_each_edge(const EdgeListSource& source, const std::function<void(const Edge&)>& fn);

// Applies the symmetrize / remap options on top of the raw edge stream.
class EdgeMapper {
 public:
  EdgeMapper() = default;
  EdgeMapper(bool symmetrize, std::vector<std::uint64_t> original_ids);

  bool remapped() const { return !original_ids_.empty(); }
  const std::vector<std::uint64_t>& original_ids() const { return original_ids_; }
  VertexId map(std::uint64_t raw) const;

  template <typename Fn>
  void emit(const Edge& raw, Fn&& fn) const {
    const Edge e{map(raw.src), map(raw.dst)};
    fn(e);
    if (symmetrize_) fn(Edge{e.dst, e.src});
  }

 private:
  bool symmetrize_ = false;
  std::vector<std::uint64_t> original_ids_;  // sorted, distinct
};

struct DegreeScan {
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  DegreeInfo degrees;
  EdgeMapper mapper;
};

// Step 1: one pass over the input tallying degrees.
DegreeScan scan_degrees(const EdgeListSource& source, const PreprocessOptions& options = {});

// Step 2: greedy in-degree accumulation; an interval closes once it holds
// at least target_edges_per_shard edges.
std::vector<VertexInterval> compute_intervals(const DegreeInfo& degrees, const ShardingPolicy& policy);

struct EdgeBuckets {
  std::filesystem::path spill_dir;
  std::vector<std::filesystem::path> files;
  std::vector<std::uint64_t> sizes;
};

// Step 3: routes each edge to the spill file of its destination's interval.
EdgeBuckets partition_edges(const EdgeListSource& source, std::span<const VertexInterval> intervals,
                            const EdgeMapper& mapper, const std::filesystem::path& spill_dir);

// CSR conversion of one bucket; sources within a vertex's list are sorted.
Shard build_shard(std::uint64_t shard_id, const VertexInterval& interval, std::span<const Edge> bucket);

// Step 4: converts every bucket to a shard file and writes the metadata.
GraphMeta build_shards(const EdgeBuckets& buckets, std::span<const VertexInterval> intervals,
                       const DegreeInfo& degrees, const std::filesystem::path& out_dir,
                       unsigned workers = 1);

struct PreprocessSummary {
  GraphMeta meta;
  std::uint64_t total_bytes = 0;
  bool remapped = false;
};

// Runs all four steps into out_dir (created if needed).
PreprocessSummary preprocess(const EdgeListSource& source, const std::filesystem::path& out_dir,
                             const PreprocessOptions& options = {});

}  // namespace semgraph
