#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "semgraph/engine.hpp"

namespace semgraph {

enum class Algorithm { kPageRank, kSssp, kWcc };

struct AlgorithmSpec {
  Algorithm name = Algorithm::kPageRank;
  VertexId source_vertex = 0;  // SSSP only
};

inline constexpr double kPageRankDamping = 0.85;
inline constexpr double kPageRankBase = 0.15;

// 0.15 / |V| + 0.85 * sum(src[u] / d_out(u)), summed in in-neighbor order.
UpdateResult pagerank_update(VertexId v, std::span<const VertexId> in_neighbors,
                             std::span<const double> src_values, const DegreeInfo& degrees);

// Unit edge weights: min(src[v], min_u src[u] + 1).
UpdateResult sssp_update(VertexId v, std::span<const VertexId> in_neighbors,
                         std::span<const double> src_values);

// Min-label propagation along in-edges.
UpdateResult wcc_update(VertexId v, std::span<const VertexId> in_neighbors,
                        std::span<const double> src_values);

// PageRank: 1/|V| everywhere. SSSP: 0 at the source, +inf elsewhere.
// WCC: each vertex's own id.
std::vector<double> initial_values(const AlgorithmSpec& spec, std::uint64_t vertex_count);

UpdateFunction make_update(const AlgorithmSpec& spec);

Algorithm parse_algorithm(std::string_view name);
std::string_view to_string(Algorithm algo);

}  // namespace semgraph
