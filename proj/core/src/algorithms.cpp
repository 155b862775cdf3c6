#include "semgraph/algorithms.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "semgraph/error.hpp"

namespace semgraph {

UpdateResult pagerank_update(VertexId v, std::span<const VertexId> in_neighbors,
                             std::span<const double> src_values, const DegreeInfo& degrees) {
  double s = 0.0;
  for (auto u : in_neighbors) s += src_values[u] / static_cast<double>(degrees.out_degree[u]);
  const double value = kPageRankBase / static_cast<double>(src_values.size()) + kPageRankDamping * s;
  return {value, value != src_values[v]};
}

UpdateResult sssp_update(VertexId v, std::span<const VertexId> in_neighbors,
                         std::span<const double> src_values) {
  double d = std::numeric_limits<double>::infinity();
  for (auto u : in_neighbors) d = std::min(src_values[u] + 1.0, d);
  const double value = std::min(d, src_values[v]);
  return {value, value != src_values[v]};
}

UpdateResult wcc_update(VertexId v, std::span<const VertexId> in_neighbors,
                        std::span<const double> src_values) {
  double group = src_values[v];
  for (auto u : in_neighbors) group = std::min(src_values[u], group);
  return {group, group != src_values[v]};
}

std::vector<double> initial_values(const AlgorithmSpec& spec, std::uint64_t vertex_count) {
  std::vector<double> values(vertex_count);
  switch (spec.name) {
    case Algorithm::kPageRank:
      std::fill(values.begin(), values.end(), 1.0 / static_cast<double>(vertex_count));
      break;
    case Algorithm::kSssp:
      if (spec.source_vertex >= vertex_count) {
        throw Error(ErrorCode::kInvalidArgument, "source vertex " + std::to_string(spec.source_vertex) +
                                                     " out of range for " + std::to_string(vertex_count) +
                                                     " vertices");
      }
      std::fill(values.begin(), values.end(), std::numeric_limits<double>::infinity());
      values[spec.source_vertex] = 0.0;
      break;
    case Algorithm::kWcc:
      for (std::uint64_t v = 0; v < vertex_count; ++v) values[v] = static_cast<double>(v);
      break;
  }
  return values;
}

UpdateFunction make_update(const AlgorithmSpec& spec) {
  switch (spec.name) {
    case Algorithm::kPageRank:
      return pagerank_update;
    case Algorithm::kSssp:
      return [](VertexId v, std::span<const VertexId> in, std::span<const double> src, const DegreeInfo&) {
        return sssp_update(v, in, src);
      };
    case Algorithm::kWcc:
      return [](VertexId v, std::span<const VertexId> in, std::span<const double> src, const DegreeInfo&) {
        return wcc_update(v, in, src);
      };
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm");
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "pagerank") return Algorithm::kPageRank;
  if (name == "sssp") return Algorithm::kSssp;
  if (name == "wcc") return Algorithm::kWcc;
  throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kPageRank: return "pagerank";
    case Algorithm::kSssp: return "sssp";
    case Algorithm::kWcc: return "wcc";
  }
  return "unknown";
}

}  // namespace semgraph
