#include <gtest/gtest.h>

#include <algorithm>

#include "semgraph/error.hpp"
#include "semgraph/graph_gen.hpp"
#include "test_util.hpp"

namespace semgraph {
namespace {

TEST(GraphGen, Line) {
  EXPECT_EQ(generate_edges({GraphKind::kLine, 5, 0, 1}),
            (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}}));
}

TEST(GraphGen, Star) {
  EXPECT_EQ(generate_edges({GraphKind::kStar, 4, 0, 1}), (std::vector<Edge>{{1, 0}, {2, 0}, {3, 0}}));
}

TEST(GraphGen, CycleAndComplete) {
  EXPECT_EQ(generate_edges({GraphKind::kCycle, 3, 0, 1}), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 0}}));
  EXPECT_EQ(generate_edges({GraphKind::kComplete, 4, 0, 1}).size(), 12u);
}

TEST(GraphGen, PowerLawFilesAreByteIdentical) {
  testing::TempDir dir;
  const GenSpec spec{GraphKind::kPowerLaw, 1 << 14, 1 << 17, 42};
  generate(spec, dir / "a.txt");
  generate(spec, dir / "b.txt");
  EXPECT_TRUE(testing::same_file_bytes(dir / "a.txt", dir / "b.txt"));
  auto other = spec;
  other.seed = 43;
  generate(other, dir / "c.txt");
  EXPECT_FALSE(testing::same_file_bytes(dir / "a.txt", dir / "c.txt"));
}

TEST(GraphGen, EndpointsInRange) {
  for (auto kind : {GraphKind::kPowerLaw, GraphKind::kUniform}) {
    for (std::uint64_t n : {1ull, 7ull, 1000ull, 1ull << 12}) {
      const auto edges = generate_edges({kind, n, 5000, n});
      ASSERT_EQ(edges.size(), 5000u);
      for (const auto& e : edges) {
        ASSERT_LT(e.src, n);
        ASSERT_LT(e.dst, n);
      }
    }
  }
}

TEST(GraphGen, PowerLawIsSkewed) {
  const std::uint64_t n = 1 << 14;
  const auto edges = generate_edges({GraphKind::kPowerLaw, n, 1 << 17, 42});
  std::vector<std::uint64_t> in(n, 0);
  for (const auto& e : edges) ++in[e.dst];
  const double mean = static_cast<double>(edges.size()) / static_cast<double>(n);
  EXPECT_GT(static_cast<double>(*std::max_element(in.begin(), in.end())), 10 * mean);
}

TEST(GraphGen, InvalidSpecs) {
  EXPECT_THROW(generate_edges({GraphKind::kLine, 0, 0, 1}), Error);
  EXPECT_THROW(generate_edges({GraphKind::kUniform, 10, 0, 1}), Error);
  GenSpec bad{GraphKind::kPowerLaw, 16, 10, 1};
  bad.skew = {0.5, 0.5, 0.5, 0.5};
  EXPECT_THROW(generate_edges(bad), Error);
  EXPECT_THROW(parse_graph_kind("tree"), Error);
  EXPECT_EQ(parse_graph_kind("powerlaw"), GraphKind::kPowerLaw);
}

}  // namespace
}  // namespace semgraph
