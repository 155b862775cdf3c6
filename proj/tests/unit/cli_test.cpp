#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <fstream>
#include <limits>
#include <sstream>

#include "cli.hpp"
#include "semgraph/error.hpp"
#include "semgraph/shard_store.hpp"
#include "test_util.hpp"

namespace semgraph {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<double> read_values(const std::filesystem::path& path) {
  const auto bytes = io::read_file(path);
  std::vector<double> values(bytes.size() / 8);
  for (std::size_t i = 0; i < values.size(); ++i) values[i] = io::get_f64(bytes, i * 8);
  return values;
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> rows;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) rows.push_back(nlohmann::json::parse(line));
  }
  return rows;
}

class CliTest : public ::testing::Test {
 protected:
  testing::TempDir dir;

  std::string path(const std::string& name) const { return (dir / name).string(); }

  void gen_line5() {
    ASSERT_EQ(invoke({"gen", "--kind", "line", "--n", "5", "--out", path("line5.txt")}).code, 0);
  }
};

TEST_F(CliTest, PreprocessLineIntoTwoShards) {
  gen_line5();
  const auto r = invoke({"preprocess", path("line5.txt"), "--out", path("g"), "--target-edges", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("vertices: 5"), std::string::npos);
  EXPECT_NE(r.out.find("edges: 4"), std::string::npos);
  EXPECT_NE(r.out.find("shards: 2"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "g" / "shard_1.bin"));
  EXPECT_FALSE(std::filesystem::exists(dir / "g" / "shard_2.bin"));
}

TEST_F(CliTest, MissingInputIsDataError) {
  const auto r = invoke({"preprocess", path("nope.txt"), "--out", path("g")});
  EXPECT_EQ(r.code, cli::kExitData);
  EXPECT_NE(r.err.find("input not found"), std::string::npos);
}

TEST_F(CliTest, RerunIsByteIdentical) {
  gen_line5();
  ASSERT_EQ(invoke({"preprocess", path("line5.txt"), "--out", path("a"), "--target-edges", "2"}).code, 0);
  ASSERT_EQ(invoke({"preprocess", path("line5.txt"), "--out", path("b"), "--target-edges", "2"}).code, 0);
  for (const char* f : {"property.bin", "vertices.bin", "shard_0.bin", "shard_1.bin"}) {
    EXPECT_TRUE(testing::same_file_bytes(dir / "a" / f, dir / "b" / f)) << f;
  }
}

TEST_F(CliTest, RunWccAndSssp) {
  gen_line5();
  ASSERT_EQ(invoke({"preprocess", path("line5.txt"), "--out", path("g"), "--target-edges", "2",
                    "--symmetrize"})
                .code,
            0);
  auto r = invoke({"run", "--graph", path("g"), "--algo", "wcc", "--out", path("wcc.bin")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_values(dir / "wcc.bin"), (std::vector<double>{0, 0, 0, 0, 0}));

  r = invoke({"run", "--graph", path("g"), "--algo", "sssp", "--source", "0", "--workers", "2", "--out",
              path("sssp.bin")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(read_values(dir / "sssp.bin"), (std::vector<double>{0, 1, 2, 3, 4}));
  const auto rows = json_lines(r.out);
  ASSERT_FALSE(rows.empty());
  EXPECT_EQ(rows.back()["active_ratio"].get<double>(), 0.0);
}

TEST_F(CliTest, RunSingleIterationReport) {
  gen_line5();
  ASSERT_EQ(invoke({"preprocess", path("line5.txt"), "--out", path("g"), "--target-edges", "2"}).code, 0);
  const auto r = invoke({"run", "--graph", path("g"), "--algo", "pagerank", "--max-iterations", "1",
                         "--metrics", path("m.jsonl")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream metrics(dir / "m.jsonl");
  const auto rows = json_lines(std::string(std::istreambuf_iterator<char>(metrics), {}));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["iter"], 0);
  EXPECT_EQ(rows[0]["shards_skipped"], 0);
  EXPECT_EQ(rows[0]["shards_loaded"], 2);
  for (const char* key : {"active_ratio", "wall_ms", "bytes_read"}) EXPECT_TRUE(rows[0].contains(key)) << key;
  EXPECT_NE(r.err.find("vertex bytes written during iterations: 0"), std::string::npos);
}

TEST_F(CliTest, RunRejectsBadArguments) {
  gen_line5();
  ASSERT_EQ(invoke({"preprocess", path("line5.txt"), "--out", path("g")}).code, 0);
  EXPECT_EQ(invoke({"run", "--graph", path("g"), "--algo", "bfs"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"run", "--graph", path("g"), "--algo", "sssp", "--source", "9"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"run", "--graph", path("g"), "--algo", "wcc", "--cache-mode", "7"}).code, cli::kExitUsage);
  EXPECT_EQ(invoke({"run", "--graph", path("missing"), "--algo", "wcc"}).code, cli::kExitData);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitUsage);
}

TEST_F(CliTest, StatsOnStar) {
  ASSERT_EQ(invoke({"gen", "--kind", "star", "--n", "4", "--out", path("star.txt")}).code, 0);
  ASSERT_EQ(invoke({"preprocess", path("star.txt"), "--out", path("s")}).code, 0);
  const auto r = invoke({"stats", path("s")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("vertices: 4"), std::string::npos);
  EXPECT_NE(r.out.find("edges: 3"), std::string::npos);
  EXPECT_NE(r.out.find("max in-degree: 3"), std::string::npos);
}

TEST_F(CliTest, StatsOnEmptyDirectoryFails) {
  std::filesystem::create_directories(dir / "empty");
  EXPECT_NE(invoke({"stats", path("empty")}).code, 0);
}

TEST_F(CliTest, CostModelTableAndJson) {
  auto r = invoke({"costmodel", "--V", "100", "--E", "1000", "--P", "10", "--N", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* m : {"psw", "esg", "vsp", "dsw", "vsw"}) EXPECT_NE(r.out.find(m), std::string::npos) << m;
  EXPECT_NE(r.out.find("13856.9644706285"), std::string::npos);

  r = invoke({"costmodel", "--V", "100", "--E", "1000", "--P", "10", "--N", "4", "--json"});
  ASSERT_EQ(r.code, 0);
  const auto rows = nlohmann::json::parse(r.out);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[4]["read_bytes"].get<double>(), 8000.0);
  EXPECT_EQ(rows[4]["memory_bytes"].get<double>(), 4800.0);

  EXPECT_EQ(invoke({"costmodel", "--V", "100", "--E", "1000", "--theta", "2"}).code, cli::kExitUsage);
}

TEST(ParseByteSize, Suffixes) {
  EXPECT_EQ(cli::parse_byte_size("4096"), 4096u);
  EXPECT_EQ(cli::parse_byte_size("64K"), 65536u);
  EXPECT_EQ(cli::parse_byte_size("1.5M"), 1572864u);
  EXPECT_EQ(cli::parse_byte_size("2GiB"), 2147483648u);
  EXPECT_EQ(cli::parse_byte_size("inf"), std::numeric_limits<std::uint64_t>::max());
  EXPECT_THROW(cli::parse_byte_size("12Q"), Error);
  EXPECT_THROW(cli::parse_byte_size(""), Error);
}

}  // namespace
}  // namespace semgraph
