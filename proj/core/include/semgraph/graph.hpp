#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace semgraph {

// Dense, zero-based vertex index in [0, vertex_count).
using VertexId = std::uint64_t;

struct Edge {
  VertexId src = 0;
  VertexId dst = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Half-open range [lo, hi) of destination vertices owned by one shard.
struct VertexInterval {
  VertexId lo = 0;
  VertexId hi = 0;
  std::uint64_t edge_count = 0;

  std::uint64_t size() const { return hi - lo; }
  bool contains(VertexId v) const { return v >= lo && v < hi; }

  friend bool operator==(const VertexInterval&, const VertexInterval&) = default;
};

// Global graph properties; the contents of the property file.
struct GraphMeta {
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  std::uint64_t shard_count = 0;
  std::vector<VertexInterval> intervals;

  // Index of the interval containing v. Requires a validated meta and
  // v < vertex_count.
  std::size_t interval_of(VertexId v) const;

  friend bool operator==(const GraphMeta&, const GraphMeta&) = default;
};

struct DegreeInfo {
  std::vector<std::uint64_t> in_degree;
  std::vector<std::uint64_t> out_degree;

  friend bool operator==(const DegreeInfo&, const DegreeInfo&) = default;
};

// Double-buffered vertex values plus the active set of the last iteration.
struct VertexState {
  std::vector<double> src_values;
  std::vector<double> dst_values;
  std::vector<VertexId> active;

  explicit VertexState(std::vector<double> init)
      : src_values(std::move(init)), dst_values(src_values.size()) {}

  std::size_t vertex_count() const { return src_values.size(); }
  double active_ratio() const {
    return src_values.empty()
               ? 0.0
               : static_cast<double>(active.size()) /
                     static_cast<double>(src_values.size());
  }
};

enum class MetaViolation {
  kNone,
  kNoVertices,
  kShardCountMismatch,
  kEmptyInterval,
  kOverlap,
  kGap,
  kCoverage,
  kEdgeCountMismatch,
};

struct MetaCheck {
  MetaViolation violation = MetaViolation::kNone;
  std::string detail;

  bool ok() const { return violation == MetaViolation::kNone; }
  explicit operator bool() const { return ok(); }
};

// Checks every GraphMeta invariant and reports the first one violated.
MetaCheck validate_meta(const GraphMeta& meta);

const char* to_string(MetaViolation v);

}  // namespace semgraph
