#include <gtest/gtest.h>

#include <limits>

#include "semgraph/algorithms.hpp"
#include "semgraph/error.hpp"

namespace semgraph {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(PageRank, AccumulatesOverOutDegree) {
  // |V| = 7; vertex 0 has in-neighbors 1 (d_out 2) and 2 (d_out 1).
  const std::vector<double> src(7, 1.0 / 7);
  DegreeInfo deg;
  deg.out_degree = {1, 2, 1, 1, 1, 1, 1};
  deg.in_degree.assign(7, 0);
  const std::vector<VertexId> in{1, 2};
  const auto r = pagerank_update(0, in, src, deg);
  EXPECT_NEAR(r.value, 0.15 / 7 + 0.85 * (3.0 / 14), 1e-15);
  EXPECT_NEAR(r.value, 0.2035714, 1e-7);
  EXPECT_TRUE(r.changed);
}

TEST(PageRank, NoInNeighbors) {
  const std::vector<double> src(4, 0.25);
  const DegreeInfo deg{{0, 0, 0, 0}, {0, 0, 0, 0}};
  const auto r = pagerank_update(2, {}, src, deg);
  EXPECT_DOUBLE_EQ(r.value, 0.15 / 4);
}

TEST(PageRank, InitialValues) {
  const auto v = initial_values({Algorithm::kPageRank, 0}, 7);
  ASSERT_EQ(v.size(), 7u);
  for (double x : v) {
    EXPECT_DOUBLE_EQ(x, 1.0 / 7);
    EXPECT_NEAR(x, 0.14, 0.005);
  }
}

TEST(PageRank, UnchangedValueIsNotActive) {
  const std::vector<double> src{0.15 / 2, 0.15 / 2};
  const DegreeInfo deg{{0, 0}, {0, 0}};
  EXPECT_FALSE(pagerank_update(0, {}, src, deg).changed);
}

TEST(Sssp, SourceStaysZero) {
  const auto init = initial_values({Algorithm::kSssp, 0}, 3);
  EXPECT_EQ(init, (std::vector<double>{0, kInf, kInf}));
  const std::vector<VertexId> in{1, 2};
  const std::vector<double> src{0, 0, 5};
  const auto r = sssp_update(0, in, src);
  EXPECT_EQ(r.value, 0.0);
  EXPECT_FALSE(r.changed);
}

TEST(Sssp, RelaxesThroughInNeighbor) {
  const std::vector<double> src{0, 3, kInf};
  const std::vector<VertexId> in{1};
  const auto r = sssp_update(2, in, src);
  EXPECT_EQ(r.value, 4.0);
  EXPECT_TRUE(r.changed);
}

TEST(Sssp, UnreachableStaysInfinite) {
  const std::vector<double> src{0, kInf};
  const auto r = sssp_update(1, {}, src);
  EXPECT_EQ(r.value, kInf);
  EXPECT_FALSE(r.changed);
}

TEST(Sssp, SourceOutOfRange) {
  EXPECT_THROW(initial_values({Algorithm::kSssp, 3}, 3), Error);
}

TEST(Wcc, IsolatedVertexKeepsLabel) {
  const auto src = initial_values({Algorithm::kWcc, 0}, 6);
  const auto r = wcc_update(5, {}, src);
  EXPECT_EQ(r.value, 5.0);
  EXPECT_FALSE(r.changed);
}

// Synchronous iteration by hand on the chain 0 -> 1 -> 2.
TEST(Wcc, ChainConvergesInTwoPropagations) {
  std::vector<double> labels = initial_values({Algorithm::kWcc, 0}, 3);
  const std::vector<std::vector<VertexId>> in{{}, {0}, {1}};
  auto step = [&] {
    std::vector<double> next(3);
    bool any = false;
    for (VertexId v = 0; v < 3; ++v) {
      const auto r = wcc_update(v, in[v], labels);
      next[v] = r.value;
      any |= r.changed;
    }
    labels = next;
    return any;
  };
  EXPECT_TRUE(step());
  EXPECT_EQ(labels, (std::vector<double>{0, 0, 1}));
  EXPECT_TRUE(step());
  EXPECT_EQ(labels, (std::vector<double>{0, 0, 0}));
  EXPECT_FALSE(step());
}

// Edge 2 -> 1 only: vertex 2 has no in-edges, so it keeps label 2.
TEST(Wcc, OneWayEdgeDoesNotReachBack) {
  const std::vector<double> src{0, 1, 2};
  const std::vector<VertexId> in_of_1{2};
  EXPECT_EQ(wcc_update(1, in_of_1, src).value, 1.0);
  EXPECT_EQ(wcc_update(2, {}, src).value, 2.0);
}

TEST(Algorithms, ParseNames) {
  EXPECT_EQ(parse_algorithm("pagerank"), Algorithm::kPageRank);
  EXPECT_EQ(parse_algorithm("sssp"), Algorithm::kSssp);
  EXPECT_EQ(parse_algorithm("wcc"), Algorithm::kWcc);
  EXPECT_THROW(parse_algorithm("bfs"), Error);
}

}  // namespace
}  // namespace semgraph
