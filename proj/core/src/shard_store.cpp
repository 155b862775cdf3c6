#include "semgraph/shard_store.hpp"

#include <algorithm>
#include <string>

#include "semgraph/error.hpp"

namespace semgraph {

namespace fs = std::filesystem;

namespace {

[[noreturn]] void format_error(const std::string& what) {
  throw Error(ErrorCode::kFormat, what);
}

}  // namespace

fs::path shard_file_path(const fs::path& dir, std::uint64_t shard_id) {
  return dir / ("shard_" + std::to_string(shard_id) + ".bin");
}

void check_shard(const Shard& shard, std::optional<std::uint64_t> vertex_count) {
  const auto& iv = shard.interval;
  const auto id = std::to_string(shard.shard_id);
  if (iv.lo >= iv.hi) format_error("shard " + id + ": empty interval");
  if (shard.row.size() != iv.size() + 1) format_error("shard " + id + ": row length mismatch");
  if (shard.row.front() != 0) format_error("shard " + id + ": row[0] != 0");
  if (!std::is_sorted(shard.row.begin(), shard.row.end())) {
    format_error("shard " + id + ": row is not non-decreasing");
  }
  if (shard.row.back() != shard.col.size()) format_error("shard " + id + ": row end != col length");
  if (iv.edge_count != shard.col.size()) format_error("shard " + id + ": edge count mismatch");
  if (vertex_count) {
    for (auto u : shard.col) {
      if (u >= *vertex_count) format_error("shard " + id + ": source id out of range");
    }
  }
}

io::Bytes encode_payload(const Shard& shard) {
  io::Bytes out;
  out.reserve(8 * (shard.row.size() + shard.col.size()));
  for (auto r : shard.row) io::put_u64(out, r);
  for (auto c : shard.col) io::put_u64(out, c);
  return out;
}

io::Bytes encode_shard(const Shard& shard) {
  io::Bytes out;
  out.reserve(shard_file_bytes(shard.interval));
  out.insert(out.end(), kShardMagic.begin(), kShardMagic.end());
  io::put_u32(out, kShardFormatVersion);
  io::put_u32(out, static_cast<std::uint32_t>(shard.shard_id));
  io::put_u64(out, shard.interval.lo);
  io::put_u64(out, shard.interval.hi);
  io::put_u64(out, shard.col.size());
  const auto payload = encode_payload(shard);
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Shard decode_payload(std::uint64_t shard_id, const VertexInterval& interval,
                     std::span<const std::uint8_t> payload,
                     std::optional<std::uint64_t> vertex_count) {
  if (interval.hi <= interval.lo) format_error("shard " + std::to_string(shard_id) + ": empty interval");
  const auto rows = interval.size() + 1;
  if (payload.size() < 8 * rows) {
    format_error("shard " + std::to_string(shard_id) + ": truncated row section");
  }
  if (payload.size() < shard_payload_bytes(interval)) {
    format_error("shard " + std::to_string(shard_id) + ": truncated col section");
  }
  if (payload.size() > shard_payload_bytes(interval)) {
    format_error("shard " + std::to_string(shard_id) + ": trailing bytes after col section");
  }
  Shard shard;
  shard.shard_id = shard_id;
  shard.interval = interval;
  shard.row.resize(rows);
  for (std::uint64_t i = 0; i < rows; ++i) shard.row[i] = io::get_u64(payload, 8 * i);
  shard.col.resize(interval.edge_count);
  const auto base = 8 * rows;
  for (std::uint64_t i = 0; i < interval.edge_count; ++i) {
    shard.col[i] = io::get_u64(payload, base + 8 * i);
  }
  check_shard(shard, vertex_count);
  return shard;
}

namespace {

struct Header {
  std::uint64_t shard_id;
  VertexInterval interval;
};

Header decode_header(std::span<const std::uint8_t> file) {
  if (file.size() < kShardHeaderBytes) format_error("truncated shard header");
  if (!std::equal(kShardMagic.begin(), kShardMagic.end(), file.begin())) {
    format_error("bad magic");
  }
  if (io::get_u32(file, 8) != kShardFormatVersion) {
    format_error("unsupported shard format version " + std::to_string(io::get_u32(file, 8)));
  }
  Header h;
  h.shard_id = io::get_u32(file, 12);
  h.interval.lo = io::get_u64(file, 16);
  h.interval.hi = io::get_u64(file, 24);
  h.interval.edge_count = io::get_u64(file, 32);
  if (h.interval.hi <= h.interval.lo) format_error("shard header has an empty interval");
  return h;
}

}  // namespace

Shard decode_shard(std::span<const std::uint8_t> file, std::optional<std::uint64_t> vertex_count) {
  const auto h = decode_header(file);
  return decode_payload(h.shard_id, h.interval, file.subspan(kShardHeaderBytes), vertex_count);
}

void write_shard(const Shard& shard, const fs::path& dir) {
  check_shard(shard);
  io::write_file_atomic(shard_file_path(dir, shard.shard_id), encode_shard(shard));
}

Shard read_shard(const fs::path& path, IoCounters& counters) {
  const auto bytes = io::read_file(path);
  counters.add_shard_read(bytes.size());
  return decode_shard(bytes);
}

void write_metadata(const GraphMeta& meta, const DegreeInfo& degrees,
                    std::span<const double> values, const fs::path& dir) {
  const auto n = meta.vertex_count;
  if (degrees.in_degree.size() != n || degrees.out_degree.size() != n || values.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "vertex array lengths do not match vertex_count " + std::to_string(n));
  }
  if (meta.intervals.size() != meta.shard_count) {
    throw Error(ErrorCode::kInvalidArgument, "interval list does not match shard_count");
  }
  io::Bytes prop;
  prop.reserve(kPropertyHeaderBytes + kPropertyIntervalBytes * meta.shard_count);
  io::put_u64(prop, meta.vertex_count);
  io::put_u64(prop, meta.edge_count);
  io::put_u64(prop, meta.shard_count);
  for (const auto& iv : meta.intervals) {
    io::put_u64(prop, iv.lo);
    io::put_u64(prop, iv.hi);
    io::put_u64(prop, iv.edge_count);
  }
  io::Bytes verts;
  verts.reserve(24 * n);
  for (auto x : values) io::put_f64(verts, x);
  for (auto d : degrees.in_degree) io::put_u64(verts, d);
  for (auto d : degrees.out_degree) io::put_u64(verts, d);

  io::write_file_atomic(dir / kVertexFile, verts);
  io::write_file_atomic(dir / kPropertyFile, prop);
}

GraphFiles read_metadata(const fs::path& dir) {
  const auto prop = io::read_file(dir / kPropertyFile);
  if (prop.size() < kPropertyHeaderBytes) format_error("property file is truncated");
  GraphFiles g;
  g.meta.vertex_count = io::get_u64(prop, 0);
  g.meta.edge_count = io::get_u64(prop, 8);
  g.meta.shard_count = io::get_u64(prop, 16);
  const auto expected = kPropertyHeaderBytes + kPropertyIntervalBytes * g.meta.shard_count;
  if (g.meta.shard_count > prop.size() || prop.size() != expected) {
    format_error("property file has " + std::to_string(prop.size()) + " bytes, expected " +
                 std::to_string(expected));
  }
  g.meta.intervals.resize(g.meta.shard_count);
  for (std::uint64_t k = 0; k < g.meta.shard_count; ++k) {
    const auto off = kPropertyHeaderBytes + kPropertyIntervalBytes * k;
    g.meta.intervals[k] = {io::get_u64(prop, off), io::get_u64(prop, off + 8),
                           io::get_u64(prop, off + 16)};
  }
  if (auto check = validate_meta(g.meta); !check) {
    format_error("invalid property file: " + check.detail);
  }

  const auto verts = io::read_file(dir / kVertexFile);
  const auto n = g.meta.vertex_count;
  if (verts.size() / 24 != n || verts.size() % 24 != 0) {
    format_error("vertex file has " + std::to_string(verts.size()) + " bytes, expected " +
                 std::to_string(24 * n));
  }
  g.values.resize(n);
  g.degrees.in_degree.resize(n);
  g.degrees.out_degree.resize(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    g.values[v] = io::get_f64(verts, 8 * v);
    g.degrees.in_degree[v] = io::get_u64(verts, 8 * (n + v));
    g.degrees.out_degree[v] = io::get_u64(verts, 8 * (2 * n + v));
  }
  return g;
}

void write_idmap(std::span<const std::uint64_t> original_ids, const fs::path& dir) {
  io::Bytes out;
  out.reserve(8 * (original_ids.size() + 1));
  io::put_u64(out, original_ids.size());
  for (auto id : original_ids) io::put_u64(out, id);
  io::write_file_atomic(dir / kIdMapFile, out);
}

std::vector<std::uint64_t> read_idmap(const fs::path& dir) {
  const auto bytes = io::read_file(dir / kIdMapFile);
  if (bytes.size() < 8) format_error("idmap is truncated");
  const auto count = io::get_u64(bytes, 0);
  if ((bytes.size() - 8) / 8 != count || bytes.size() % 8 != 0) format_error("idmap is truncated");
  std::vector<std::uint64_t> ids(count);
  for (std::uint64_t i = 0; i < count; ++i) ids[i] = io::get_u64(bytes, 8 + 8 * i);
  return ids;
}

ShardStore::ShardStore(fs::path dir) : dir_(std::move(dir)), files_(read_metadata(dir_)) {}

io::Bytes ShardStore::load_payload(std::uint64_t shard_id) const {
  if (shard_id >= shard_count()) {
    throw Error(ErrorCode::kInvalidArgument, "no shard " + std::to_string(shard_id));
  }
  auto bytes = io::read_file(shard_file_path(dir_, shard_id));
  counters_.add_shard_read(bytes.size());
  const auto h = decode_header(bytes);
  if (h.shard_id != shard_id || !(h.interval == meta().intervals[shard_id])) {
    format_error("shard " + std::to_string(shard_id) + " header disagrees with property file");
  }
  bytes.erase(bytes.begin(), bytes.begin() + kShardHeaderBytes);
  return bytes;
}

Shard ShardStore::load_shard(std::uint64_t shard_id) const {
  const auto payload = load_payload(shard_id);
  return decode_payload(shard_id, meta().intervals[shard_id], payload, meta().vertex_count);
}

std::uint64_t ShardStore::total_shard_file_bytes() const {
  std::uint64_t total = 0;
  for (const auto& iv : meta().intervals) total += shard_file_bytes(iv);
  return total;
}

std::uint64_t ShardStore::total_overhead_bytes() const {
  std::uint64_t total = 0;
  for (const auto& iv : meta().intervals) total += shard_overhead_bytes(iv);
  return total;
}

}  // namespace semgraph
