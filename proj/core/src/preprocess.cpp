#include "semgraph/preprocess.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <mutex>
#include <string>
#include <thread>

#include "semgraph/binary_io.hpp"
#include "semgraph/error.hpp"

namespace semgraph {

namespace fs = std::filesystem;

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; }

const char* skip_space(const char* p, const char* end) {
  while (p != end && is_space(*p)) ++p;
  return p;
}

[[noreturn]] void line_error(const fs::path& path, std::uint64_t line, const std::string& what) {
  throw Error(ErrorCode::kFormat, path.string() + ":" + std::to_string(line) + ": " + what);
}

std::uint64_t parse_id(const char*& p, const char* end, const fs::path& path, std::uint64_t line) {
  p = skip_space(p, end);
  std::uint64_t value = 0;
  auto [next, ec] = std::from_chars(p, end, value);
  if (ec == std::errc::result_out_of_range) line_error(path, line, "id overflow");
  if (ec != std::errc() || (next != end && !is_space(*next))) {
    line_error(path, line, "malformed edge, expected two non-negative integers");
  }
  p = next;
  return value;
}

void for_each_text_edge(const EdgeListSource& source, const std::function<void(const Edge&)>& fn) {
  std::ifstream in(source.path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + source.path.string());
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const char* p = line.data();
    const char* end = p + line.size();
    p = skip_space(p, end);
    if (p == end || *p == '#') continue;
    Edge e;
    e.src = parse_id(p, end, source.path, line_no);
    e.dst = parse_id(p, end, source.path, line_no);
    if (skip_space(p, end) != end) line_error(source.path, line_no, "trailing tokens after edge");
    fn(e);
  }
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed on " + source.path.string());
}

void for_each_binary_edge(const EdgeListSource& source, const std::function<void(const Edge&)>& fn) {
  const auto size = fs::file_size(source.path);
  if (size % 16 != 0) {
    throw Error(ErrorCode::kFormat, source.path.string() + ": binary edge list size " +
                                        std::to_string(size) + " is not a multiple of 16");
  }
  std::ifstream in(source.path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + source.path.string());
  constexpr std::size_t kChunkEdges = 1 << 16;
  io::Bytes buf(16 * kChunkEdges);
  std::uint64_t remaining = size / 16;
  while (remaining > 0) {
    const auto n = static_cast<std::size_t>(std::min<std::uint64_t>(remaining, kChunkEdges));
    if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(16 * n))) {
      throw Error(ErrorCode::kIo, "short read on " + source.path.string());
    }
    for (std::size_t i = 0; i < n; ++i) fn(Edge{io::get_u64(buf, 16 * i), io::get_u64(buf, 16 * i + 8)});
    remaining -= n;
  }
}

}  // namespace

void for_each_edge(const EdgeListSource& source, const std::function<void(const Edge&)>& fn) {
  std::error_code ec;
  if (!fs::is_regular_file(source.path, ec)) {
    throw Error(ErrorCode::kNotFound, "input not found: " + source.path.string());
  }
  if (source.format == EdgeListFormat::kText) {
    for_each_text_edge(source, fn);
  } else {
    for_each_binary_edge(source, fn);
  }
}

EdgeMapper::EdgeMapper(bool symmetrize, std::vector<std::uint64_t> original_ids)
    : symmetrize_(symmetrize), original_ids_(std::move(original_ids)) {}

VertexId EdgeMapper::map(std::uint64_t raw) const {
  if (original_ids_.empty()) return raw;
  auto it = std::lower_bound(original_ids_.begin(), original_ids_.end(), raw);
  if (it == original_ids_.end() || *it != raw) {
    throw Error(ErrorCode::kInternal, "id " + std::to_string(raw) + " missing from remap table");
  }
  return static_cast<VertexId>(it - original_ids_.begin());
}

DegreeScan scan_degrees(const EdgeListSource& source, const PreprocessOptions& options) {
  std::vector<std::uint64_t> ids;
  if (options.remap) {
    for_each_edge(source, [&](const Edge& e) {
      ids.push_back(e.src);
      ids.push_back(e.dst);
    });
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  }

  DegreeScan scan;
  scan.mapper = EdgeMapper(options.symmetrize, std::move(ids));
  auto& in = scan.degrees.in_degree;
  auto& out = scan.degrees.out_degree;
  if (scan.mapper.remapped()) {
    in.assign(scan.mapper.original_ids().size(), 0);
    out.assign(in.size(), 0);
  } else if (options.vertex_count) {
    in.assign(*options.vertex_count, 0);
    out.assign(in.size(), 0);
  }

  for_each_edge(source, [&](const Edge& raw) {
    if (!scan.mapper.remapped()) {
      const auto hi = std::max(raw.src, raw.dst);
      if (options.vertex_count && hi >= *options.vertex_count) {
        throw Error(ErrorCode::kFormat, "edge endpoint " + std::to_string(hi) +
                                            " out of range for vertex_count " +
                                            std::to_string(*options.vertex_count));
      }
      if (hi >= kMaxDenseVertexId) {
        throw Error(ErrorCode::kFormat,
                    "id overflow: " + std::to_string(hi) + " exceeds the dense id limit; use remap");
      }
      if (hi >= in.size()) {
        in.resize(hi + 1, 0);
        out.resize(hi + 1, 0);
      }
    }
    scan.mapper.emit(raw, [&](const Edge& e) {
      ++out[e.src];
      ++in[e.dst];
      ++scan.edge_count;
    });
  });
  if (scan.edge_count == 0) {
    throw Error(ErrorCode::kFormat, "empty input: " + source.path.string() + " has no edges");
  }
  scan.vertex_count = in.size();
  return scan;
}

std::vector<VertexInterval> compute_intervals(const DegreeInfo& degrees, const ShardingPolicy& policy) {
  if (policy.target_edges_per_shard == 0) {
    throw Error(ErrorCode::kInvalidArgument, "target_edges_per_shard must be >= 1");
  }
  if (policy.max_shard_count && *policy.max_shard_count == 0) {
    throw Error(ErrorCode::kInvalidArgument, "max_shard_count must be >= 1");
  }
  const auto n = degrees.in_degree.size();
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "no vertices to partition");

  std::uint64_t target = policy.target_edges_per_shard;
  if (policy.max_shard_count) {
    std::uint64_t total = 0;
    for (auto d : degrees.in_degree) total += d;
    const auto cap = *policy.max_shard_count;
    target = std::max(target, (total + cap - 1) / cap);
  }

  std::vector<VertexInterval> intervals;
  VertexInterval cur{0, 0, 0};
  for (VertexId v = 0; v < n; ++v) {
    cur.edge_count += degrees.in_degree[v];
    cur.hi = v + 1;
    if (cur.edge_count >= target) {
      intervals.push_back(cur);
      cur = VertexInterval{v + 1, v + 1, 0};
    }
  }
  if (cur.hi > cur.lo) intervals.push_back(cur);

  // Every closed interval holds >= target edges, so only the open tail can
  // push the count past the cap.
  if (policy.max_shard_count && intervals.size() > *policy.max_shard_count) {
    auto tail = intervals.back();
    intervals.pop_back();
    intervals.back().hi = tail.hi;
    intervals.back().edge_count += tail.edge_count;
  }
  return intervals;
}

namespace {

class BucketWriter {
 public:
  static constexpr std::size_t kFlushBytes = 1 << 16;

  explicit BucketWriter(fs::path path) : path_(std::move(path)) {
    std::ofstream(path_, std::ios::binary | std::ios::trunc);
  }

  void append(const Edge& e) {
    io::put_u64(buf_, e.src);
    io::put_u64(buf_, e.dst);
    ++count_;
    if (buf_.size() >= kFlushBytes) flush();
  }

  void flush() {
    if (buf_.empty()) return;
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    out.write(reinterpret_cast<const char*>(buf_.data()), static_cast<std::streamsize>(buf_.size()));
    if (!out) throw Error(ErrorCode::kIo, "write failed on " + path_.string());
    buf_.clear();
  }

  std::uint64_t count() const { return count_; }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
  io::Bytes buf_;
  std::uint64_t count_ = 0;
};

}  // namespace

EdgeBuckets partition_edges(const EdgeListSource& source, std::span<const VertexInterval> intervals,
                            const EdgeMapper& mapper, const fs::path& spill_dir) {
  if (intervals.empty()) throw Error(ErrorCode::kInvalidArgument, "no intervals");
  fs::create_directories(spill_dir);
  std::vector<BucketWriter> writers;
  writers.reserve(intervals.size());
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    writers.emplace_back(spill_dir / ("bucket_" + std::to_string(k) + ".bin"));
  }
  const auto vertex_count = intervals.back().hi;
  GraphMeta lookup;
  lookup.intervals.assign(intervals.begin(), intervals.end());

  for_each_edge(source, [&](const Edge& raw) {
    mapper.emit(raw, [&](const Edge& e) {
      if (e.src >= vertex_count || e.dst >= vertex_count) {
        throw Error(ErrorCode::kFormat, "edge (" + std::to_string(e.src) + ", " +
                                            std::to_string(e.dst) + ") has an endpoint out of range");
      }
      writers[lookup.interval_of(e.dst)].append(e);
    });
  });

  EdgeBuckets buckets;
  buckets.spill_dir = spill_dir;
  for (auto& w : writers) {
    w.flush();
    buckets.files.push_back(w.path());
    buckets.sizes.push_back(w.count());
  }
  return buckets;
}

Shard build_shard(std::uint64_t shard_id, const VertexInterval& interval, std::span<const Edge> bucket) {
  Shard shard;
  shard.shard_id = shard_id;
  shard.interval = {interval.lo, interval.hi, bucket.size()};
  shard.row.assign(interval.size() + 1, 0);
  for (const auto& e : bucket) {
    if (!interval.contains(e.dst)) {
      throw Error(ErrorCode::kInternal, "edge destination outside shard interval");
    }
    ++shard.row[e.dst - interval.lo + 1];
  }
  for (std::size_t i = 1; i < shard.row.size(); ++i) shard.row[i] += shard.row[i - 1];

  shard.col.resize(bucket.size());
  std::vector<std::uint64_t> cursor(shard.row.begin(), shard.row.end() - 1);
  for (const auto& e : bucket) shard.col[cursor[e.dst - interval.lo]++] = e.src;
  for (std::size_t i = 0; i + 1 < shard.row.size(); ++i) {
    std::sort(shard.col.begin() + static_cast<std::ptrdiff_t>(shard.row[i]),
              shard.col.begin() + static_cast<std::ptrdiff_t>(shard.row[i + 1]));
  }
  return shard;
}

namespace {

std::vector<Edge> read_bucket(const fs::path& path, std::uint64_t expected) {
  const auto bytes = io::read_file(path);
  if (bytes.size() != 16 * expected) {
    throw Error(ErrorCode::kIo, "spill file " + path.string() + " has unexpected size");
  }
  std::vector<Edge> edges(expected);
  for (std::uint64_t i = 0; i < expected; ++i) {
    edges[i] = {io::get_u64(bytes, 16 * i), io::get_u64(bytes, 16 * i + 8)};
  }
  return edges;
}

}  // namespace

GraphMeta build_shards(const EdgeBuckets& buckets, std::span<const VertexInterval> intervals,
                       const DegreeInfo& degrees, const fs::path& out_dir, unsigned workers) {
  if (buckets.files.size() != intervals.size()) {
    throw Error(ErrorCode::kInvalidArgument, "bucket count does not match interval count");
  }
  fs::create_directories(out_dir);

  GraphMeta meta;
  meta.vertex_count = degrees.in_degree.size();
  meta.shard_count = intervals.size();
  meta.intervals.assign(intervals.begin(), intervals.end());
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    meta.intervals[k].edge_count = buckets.sizes[k];
    meta.edge_count += buckets.sizes[k];
  }
  if (auto check = validate_meta(meta); !check) {
    throw Error(ErrorCode::kInternal, "preprocess produced invalid metadata: " + check.detail);
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (auto k = next.fetch_add(1); k < intervals.size(); k = next.fetch_add(1)) {
      try {
        const auto edges = read_bucket(buckets.files[k], buckets.sizes[k]);
        write_shard(build_shard(k, meta.intervals[k], edges), out_dir);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next.store(intervals.size());
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < std::max(1u, workers); ++i) pool.emplace_back(worker);
    worker();
  }
  if (failure) std::rethrow_exception(failure);

  const std::vector<double> values(meta.vertex_count, 0.0);
  write_metadata(meta, degrees, values, out_dir);
  return meta;
}

PreprocessSummary preprocess(const EdgeListSource& source, const fs::path& out_dir,
                             const PreprocessOptions& options) {
  auto scan = scan_degrees(source, options);
  const auto intervals = compute_intervals(scan.degrees, options.policy);

  fs::create_directories(out_dir);
  const auto spill_dir = out_dir / ".spill";
  fs::remove_all(spill_dir);
  auto buckets = partition_edges(source, intervals, scan.mapper, spill_dir);

  PreprocessSummary summary;
  summary.meta = build_shards(buckets, intervals, scan.degrees, out_dir, options.workers);
  fs::remove_all(spill_dir);

  // Drop leftovers of an earlier run with more shards or a remap table.
  std::vector<fs::path> stale;
  for (const auto& entry : fs::directory_iterator(out_dir)) {
    const auto name = entry.path().filename().string();
    if (name.starts_with("shard_") && name.ends_with(".bin")) {
      const auto digits = name.substr(6, name.size() - 10);
      std::uint64_t k = 0;
      auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
      if (ec == std::errc() && p == digits.data() + digits.size() && k >= summary.meta.shard_count) {
        stale.push_back(entry.path());
      }
    }
  }
  for (const auto& path : stale) fs::remove(path);
  if (scan.mapper.remapped()) {
    write_idmap(scan.mapper.original_ids(), out_dir);
  } else {
    fs::remove(out_dir / kIdMapFile);
  }

  summary.remapped = scan.mapper.remapped();
  summary.total_bytes = kPropertyHeaderBytes + kPropertyIntervalBytes * summary.meta.shard_count +
                        24 * summary.meta.vertex_count;
  for (const auto& iv : summary.meta.intervals) summary.total_bytes += shard_file_bytes(iv);
  if (summary.remapped) summary.total_bytes += 8 * (summary.meta.vertex_count + 1);
  return summary;
}

}  // namespace semgraph
