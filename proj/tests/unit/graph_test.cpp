#include <gtest/gtest.h>

#include <random>

#include "semgraph/graph.hpp"

namespace semgraph {
namespace {

GraphMeta make_meta(std::uint64_t n, std::vector<VertexInterval> intervals) {
  GraphMeta m;
  m.vertex_count = n;
  m.shard_count = intervals.size();
  for (const auto& iv : intervals) m.edge_count += iv.edge_count;
  m.intervals = std::move(intervals);
  return m;
}

TEST(ValidateMeta, ThreeShardsOfTwoVertices) {
  auto m = make_meta(6, {{0, 2, 0}, {2, 4, 0}, {4, 6, 0}});
  EXPECT_TRUE(validate_meta(m).ok());
}

TEST(ValidateMeta, GapIsReported) {
  auto m = make_meta(6, {{0, 2, 0}, {3, 6, 0}});
  const auto check = validate_meta(m);
  EXPECT_EQ(check.violation, MetaViolation::kGap);
  EXPECT_NE(check.detail.find("[2, 3)"), std::string::npos);
}

TEST(ValidateMeta, Singleton) {
  EXPECT_TRUE(validate_meta(make_meta(1, {{0, 1, 0}})));
}

TEST(ValidateMeta, Violations) {
  EXPECT_EQ(validate_meta(make_meta(6, {{0, 3, 0}, {2, 6, 0}})).violation, MetaViolation::kOverlap);
  EXPECT_EQ(validate_meta(make_meta(6, {{0, 2, 0}, {2, 5, 0}})).violation, MetaViolation::kCoverage);
  EXPECT_EQ(validate_meta(make_meta(6, {{0, 0, 0}, {0, 6, 0}})).violation, MetaViolation::kEmptyInterval);
  EXPECT_EQ(validate_meta(GraphMeta{}).violation, MetaViolation::kNoVertices);

  auto m = make_meta(4, {{0, 2, 3}, {2, 4, 1}});
  m.shard_count = 3;
  EXPECT_EQ(validate_meta(m).violation, MetaViolation::kShardCountMismatch);
  m.shard_count = 2;
  m.edge_count = 5;
  EXPECT_EQ(validate_meta(m).violation, MetaViolation::kEdgeCountMismatch);
}

// Every vertex maps to exactly one interval, and the binary search agrees
// with a linear scan.
TEST(GraphMeta, IntervalLookupMatchesLinearScan) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t n = 1 + rng() % 300;
    std::vector<VertexInterval> ivs;
    for (std::uint64_t lo = 0; lo < n;) {
      const std::uint64_t hi = std::min(n, lo + 1 + rng() % 20);
      ivs.push_back({lo, hi, 0});
      lo = hi;
    }
    const auto m = make_meta(n, ivs);
    ASSERT_TRUE(validate_meta(m));
    for (VertexId v = 0; v < n; ++v) {
      std::size_t owners = 0, owner = 0;
      for (std::size_t k = 0; k < ivs.size(); ++k) {
        if (ivs[k].contains(v)) {
          ++owners;
          owner = k;
        }
      }
      ASSERT_EQ(owners, 1u);
      ASSERT_EQ(m.interval_of(v), owner);
    }
  }
}

TEST(VertexState, ActiveRatio) {
  VertexState s(std::vector<double>(8, 0.0));
  EXPECT_EQ(s.dst_values.size(), 8u);
  s.active = {1, 2};
  EXPECT_DOUBLE_EQ(s.active_ratio(), 0.25);
}

}  // namespace
}  // namespace semgraph
