#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "semgraph/graph.hpp"
#include "semgraph/preprocess.hpp"

namespace semgraph {

enum class GraphKind { kPowerLaw, kUniform, kLine, kCycle, kStar, kComplete };

// Recursive-matrix quadrant probabilities for kPowerLaw.
struct QuadrantSkew {
  double a = 0.57, b = 0.19, c = 0.19, d = 0.05;
};

struct GenSpec {
  GraphKind kind = GraphKind::kPowerLaw;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;  // kPowerLaw and kUniform only
  std::uint64_t seed = 1;
  QuadrantSkew skew;
};

inline constexpr std::uint64_t kMaxGeneratedEdges = std::uint64_t{1} << 28;

// Deterministic in (spec, seed) on every platform.
std::vector<Edge> generate_edges(const GenSpec& spec);

void write_text_edge_list(std::span<const Edge> edges, const std::filesystem::path& path);

// Generates and writes a text edge list to path.
EdgeListSource generate(const GenSpec& spec, const std::filesystem::path& path);

GraphKind parse_graph_kind(std::string_view name);
std::string_view to_string(GraphKind kind);

}  // namespace semgraph
