#include <gtest/gtest.h>

#include "semgraph/preprocess.hpp"
#include "test_util.hpp"

namespace semgraph {
namespace {

const std::filesystem::path kData = SEMGRAPH_TEST_DATA_DIR;

TEST(Golden, LineFiveMatchesCommittedFiles) {
  testing::TempDir dir;
  PreprocessOptions opts;
  opts.policy.target_edges_per_shard = 2;
  preprocess({EdgeListFormat::kText, kData / "line5.txt"}, dir / "g", opts);
  for (const char* f : {"property.bin", "vertices.bin", "shard_0.bin", "shard_1.bin"}) {
    EXPECT_TRUE(testing::same_file_bytes(dir / "g" / f, kData / "line5_golden" / f)) << f;
  }
  EXPECT_FALSE(std::filesystem::exists(dir / "g" / "shard_2.bin"));
  EXPECT_FALSE(std::filesystem::exists(dir / "g" / "idmap.bin"));
}

TEST(Golden, ShardZeroLayout) {
  const auto bytes = io::read_file(kData / "line5_golden" / "shard_0.bin");
  ASSERT_EQ(bytes.size(), 88u);
  EXPECT_EQ(std::string(bytes.begin(), bytes.begin() + 8), "SEMGRAPH");
  EXPECT_EQ(io::get_u32(bytes, 8), 1u);
  EXPECT_EQ(io::get_u32(bytes, 12), 0u);
  EXPECT_EQ(io::get_u64(bytes, 16), 0u);
  EXPECT_EQ(io::get_u64(bytes, 24), 3u);
  EXPECT_EQ(io::get_u64(bytes, 32), 2u);
  const std::uint64_t row[] = {0, 0, 1, 2};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(io::get_u64(bytes, 40 + 8 * i), row[i]);
  EXPECT_EQ(io::get_u64(bytes, 72), 0u);
  EXPECT_EQ(io::get_u64(bytes, 80), 1u);
}

}  // namespace
}  // namespace semgraph
