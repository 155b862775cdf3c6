#include "semgraph/graph.hpp"

#include <algorithm>

namespace semgraph {

std::size_t GraphMeta::interval_of(VertexId v) const {
  auto it = std::upper_bound(
      intervals.begin(), intervals.end(), v,
      [](VertexId x, const VertexInterval& iv) { return x < iv.lo; });
  return static_cast<std::size_t>(it - intervals.begin()) - 1;
}

namespace {

MetaCheck fail(MetaViolation v, std::string detail) {
  return MetaCheck{v, std::move(detail)};
}

}  // namespace

MetaCheck validate_meta(const GraphMeta& meta) {
  if (meta.vertex_count == 0) {
    return fail(MetaViolation::kNoVertices, "graph has no vertices");
  }
  if (meta.intervals.size() != meta.shard_count) {
    return fail(MetaViolation::kShardCountMismatch,
                "shard_count " + std::to_string(meta.shard_count) +
                    " but " + std::to_string(meta.intervals.size()) +
                    " intervals");
  }
  VertexId expected_lo = 0;
  std::uint64_t edges = 0;
  for (std::size_t i = 0; i < meta.intervals.size(); ++i) {
    const auto& iv = meta.intervals[i];
    if (iv.lo >= iv.hi) {
      return fail(MetaViolation::kEmptyInterval,
                  "interval " + std::to_string(i) + " is empty");
    }
    if (iv.lo < expected_lo) {
      return fail(MetaViolation::kOverlap,
                  "interval " + std::to_string(i) + " overlaps its predecessor");
    }
    if (iv.lo > expected_lo) {
      return fail(MetaViolation::kGap, "vertices [" +
                                           std::to_string(expected_lo) + ", " +
                                           std::to_string(iv.lo) +
                                           ") are not covered");
    }
    expected_lo = iv.hi;
    edges += iv.edge_count;
  }
  if (expected_lo != meta.vertex_count) {
    return fail(MetaViolation::kCoverage,
                "intervals cover [0, " + std::to_string(expected_lo) +
                    ") but vertex_count is " +
                    std::to_string(meta.vertex_count));
  }
  if (edges != meta.edge_count) {
    return fail(MetaViolation::kEdgeCountMismatch,
                "interval edge counts sum to " + std::to_string(edges) +
                    ", expected " + std::to_string(meta.edge_count));
  }
  return {};
}

const char* to_string(MetaViolation v) {
  switch (v) {
    case MetaViolation::kNone: return "ok";
    case MetaViolation::kNoVertices: return "no vertices";
    case MetaViolation::kShardCountMismatch: return "shard count mismatch";
    case MetaViolation::kEmptyInterval: return "empty interval";
    case MetaViolation::kOverlap: return "overlapping intervals";
    case MetaViolation::kGap: return "gap in coverage";
    case MetaViolation::kCoverage: return "coverage mismatch";
    case MetaViolation::kEdgeCountMismatch: return "edge count mismatch";
  }
  return "unknown";
}

}  // namespace semgraph
