#include "semgraph/graph_gen.hpp"

#include <bit>
#include <limits>
#include <random>
#include <string>

#include "semgraph/binary_io.hpp"
#include "semgraph/error.hpp"

namespace semgraph {

namespace {

// mt19937_64 output is fixed by the standard; the distributions are not,
// so the conversions below are done by hand.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::uint64_t below(std::uint64_t n) {
    // Rejection sampling keeps the draw unbiased and portable.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

void check_spec(const GenSpec& spec) {
  if (spec.vertex_count == 0) throw Error(ErrorCode::kInvalidArgument, "vertex count must be >= 1");
  const bool random = spec.kind == GraphKind::kPowerLaw || spec.kind == GraphKind::kUniform;
  if (random && spec.edge_count == 0) throw Error(ErrorCode::kInvalidArgument, "edge count must be >= 1");
  if (random && spec.edge_count > kMaxGeneratedEdges) {
    throw Error(ErrorCode::kInvalidArgument, "edge count exceeds generator limit");
  }
  if (spec.kind == GraphKind::kComplete && spec.vertex_count > (std::uint64_t{1} << 14)) {
    throw Error(ErrorCode::kInvalidArgument, "complete graph limited to 16384 vertices");
  }
  if (spec.vertex_count > kMaxGeneratedEdges && !random) {
    throw Error(ErrorCode::kInvalidArgument, "vertex count exceeds generator limit");
  }
  if (spec.kind == GraphKind::kPowerLaw) {
    const auto& s = spec.skew;
    const double sum = s.a + s.b + s.c + s.d;
    if (s.a < 0 || s.b < 0 || s.c < 0 || s.d < 0 || sum < 0.999999 || sum > 1.000001) {
      throw Error(ErrorCode::kInvalidArgument, "quadrant skew must be non-negative and sum to 1");
    }
  }
}

std::vector<Edge> power_law(const GenSpec& spec) {
  Rng rng(spec.seed);
  const unsigned levels = spec.vertex_count <= 1 ? 0 : std::bit_width(spec.vertex_count - 1);
  const auto& s = spec.skew;
  std::vector<Edge> edges;
  edges.reserve(spec.edge_count);
  while (edges.size() < spec.edge_count) {
    Edge e;
    for (unsigned level = 0; level < levels; ++level) {
      const double r = rng.uniform01();
      const std::uint64_t bit = std::uint64_t{1} << (levels - 1 - level);
      if (r < s.a) {
      } else if (r < s.a + s.b) {
        e.dst |= bit;
      } else if (r < s.a + s.b + s.c) {
        e.src |= bit;
      } else {
        e.src |= bit;
        e.dst |= bit;
      }
    }
    // Non power-of-two sizes: redraw anything that fell outside [0, n).
    if (e.src < spec.vertex_count && e.dst < spec.vertex_count) edges.push_back(e);
  }
  return edges;
}

}  // namespace

std::vector<Edge> generate_edges(const GenSpec& spec) {
  check_spec(spec);
  const auto n = spec.vertex_count;
  std::vector<Edge> edges;
  switch (spec.kind) {
    case GraphKind::kPowerLaw:
      return power_law(spec);
    case GraphKind::kUniform: {
      Rng rng(spec.seed);
      edges.reserve(spec.edge_count);
      for (std::uint64_t i = 0; i < spec.edge_count; ++i) {
        const auto src = rng.below(n);
        edges.push_back({src, rng.below(n)});
      }
      break;
    }
    case GraphKind::kLine:
      for (std::uint64_t v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
      break;
    case GraphKind::kCycle:
      for (std::uint64_t v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
      break;
    case GraphKind::kStar:
      for (std::uint64_t v = 1; v < n; ++v) edges.push_back({v, 0});
      break;
    case GraphKind::kComplete:
      for (std::uint64_t u = 0; u < n; ++u) {
        for (std::uint64_t v = 0; v < n; ++v) {
          if (u != v) edges.push_back({u, v});
        }
      }
      break;
  }
  return edges;
}

void write_text_edge_list(std::span<const Edge> edges, const std::filesystem::path& path) {
  std::string text;
  text.reserve(edges.size() * 12);
  for (const auto& e : edges) {
    text += std::to_string(e.src);
    text += ' ';
    text += std::to_string(e.dst);
    text += '\n';
  }
  io::write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

EdgeListSource generate(const GenSpec& spec, const std::filesystem::path& path) {
  write_text_edge_list(generate_edges(spec), path);
  return {EdgeListFormat::kText, path};
}

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "powerlaw" || name == "rmat") return GraphKind::kPowerLaw;
  if (name == "uniform") return GraphKind::kUniform;
  if (name == "line") return GraphKind::kLine;
  if (name == "cycle") return GraphKind::kCycle;
  if (name == "star") return GraphKind::kStar;
  if (name == "complete") return GraphKind::kComplete;
  throw Error(ErrorCode::kInvalidArgument, "unknown graph kind '" + std::string(name) + "'");
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::kPowerLaw: return "powerlaw";
    case GraphKind::kUniform: return "uniform";
    case GraphKind::kLine: return "line";
    case GraphKind::kCycle: return "cycle";
    case GraphKind::kStar: return "star";
    case GraphKind::kComplete: return "complete";
  }
  return "unknown";
}

}  // namespace semgraph
