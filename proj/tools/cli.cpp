#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "semgraph/algorithms.hpp"
#include "semgraph/binary_io.hpp"
#include "semgraph/cost_model.hpp"
#include "semgraph/engine.hpp"
#include "semgraph/error.hpp"
#include "semgraph/graph_gen.hpp"
#include "semgraph/preprocess.hpp"
#include "semgraph/shard_store.hpp"

namespace semgraph::cli {

namespace fs = std::filesystem;

std::uint64_t parse_byte_size(std::string_view text) {
  if (text == "inf" || text == "unlimited") return std::numeric_limits<std::uint64_t>::max();
  double number = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), number);
  if (ec != std::errc() || number < 0) {
    throw Error(ErrorCode::kInvalidArgument, "invalid byte size '" + std::string(text) + "'");
  }
  std::string suffix(p, text.data() + text.size());
  std::transform(suffix.begin(), suffix.end(), suffix.begin(), [](char c) { return std::toupper(c); });
  double scale = 1;
  if (suffix.empty() || suffix == "B") {
  } else if (suffix == "K" || suffix == "KB" || suffix == "KIB") {
    scale = 1024.0;
  } else if (suffix == "M" || suffix == "MB" || suffix == "MIB") {
    scale = 1024.0 * 1024;
  } else if (suffix == "G" || suffix == "GB" || suffix == "GIB") {
    scale = 1024.0 * 1024 * 1024;
  } else if (suffix == "T" || suffix == "TB" || suffix == "TIB") {
    scale = 1024.0 * 1024 * 1024 * 1024;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "invalid byte size suffix '" + suffix + "'");
  }
  const double bytes = std::floor(number * scale);
  if (bytes >= 18446744073709551616.0) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(bytes);
}

namespace {

struct GenArgs {
  std::string kind;
  std::uint64_t n = 0;
  std::uint64_t e = 0;
  std::uint64_t seed = 1;
  std::string out;
};

struct PreprocessArgs {
  std::string input;
  std::string out;
  std::string format = "text";
  std::uint64_t target_edges = std::uint64_t{1} << 20;
  std::uint64_t max_shards = 0;
  std::uint64_t vertices = 0;
  bool symmetrize = false;
  bool remap = false;
  unsigned workers = 1;
};

// Everything a `run` invocation needs, checked before the engine starts.
struct RunManifest {
  std::string graph_dir;
  std::string algo;
  std::uint64_t source = 0;
  unsigned workers = 1;
  std::uint64_t max_iterations = 200;
  bool no_selective = false;
  double activation_threshold = kDefaultActivationThreshold;
  int cache_mode = 1;
  std::string cache_budget = "0";
  double tolerance = 0.0;
  std::string values_out;
  std::string metrics_out;
};

struct CostArgs {
  double C = 8, D = 8, V = 0, E = 0, P = 1, N = 1, theta = 1;
  bool json = false;
};

unsigned default_workers() {
  if (const char* env = std::getenv("SEMGRAPH_WORKERS")) {
    unsigned n = 0;
    const std::string_view s(env);
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), n);
    if (ec == std::errc() && p == s.data() + s.size() && n > 0) return n;
  }
  return 1;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  GenSpec spec;
  spec.kind = parse_graph_kind(a.kind);
  spec.vertex_count = a.n;
  spec.edge_count = a.e;
  spec.seed = a.seed;
  const auto edges = generate_edges(spec);
  write_text_edge_list(edges, a.out);
  out << "wrote " << edges.size() << " edges over " << a.n << " vertices to " << a.out << "\n";
  return kExitOk;
}

int cmd_preprocess(const PreprocessArgs& a, std::ostream& out) {
  EdgeListSource source;
  source.path = a.input;
  if (a.format == "text") {
    source.format = EdgeListFormat::kText;
  } else if (a.format == "binary") {
    source.format = EdgeListFormat::kBinary;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown input format '" + a.format + "'");
  }
  if (!fs::exists(source.path)) throw Error(ErrorCode::kNotFound, "input not found: " + a.input);

  PreprocessOptions options;
  options.policy.target_edges_per_shard = a.target_edges;
  if (a.max_shards > 0) options.policy.max_shard_count = a.max_shards;
  if (a.vertices > 0) options.vertex_count = a.vertices;
  options.symmetrize = a.symmetrize;
  options.remap = a.remap;
  options.workers = std::max(1u, a.workers);

  const auto summary = preprocess(source, a.out, options);
  const auto& meta = summary.meta;
  out << "vertices: " << meta.vertex_count << "\n"
      << "edges: " << meta.edge_count << "\n"
      << "shards: " << meta.shard_count << "\n";
  out << std::setw(8) << "shard" << std::setw(14) << "lo" << std::setw(14) << "hi" << std::setw(14)
      << "edges" << std::setw(14) << "bytes" << "\n";
  for (std::size_t k = 0; k < meta.intervals.size(); ++k) {
    const auto& iv = meta.intervals[k];
    out << std::setw(8) << k << std::setw(14) << iv.lo << std::setw(14) << iv.hi << std::setw(14)
        << iv.edge_count << std::setw(14) << shard_file_bytes(iv) << "\n";
  }
  out << "remapped: " << (summary.remapped ? "yes" : "no") << "\n"
      << "total bytes: " << summary.total_bytes << "\n";
  return kExitOk;
}

nlohmann::json report_json(const IterationReport& r) {
  return {{"iter", r.iteration},
          {"active_ratio", r.active_ratio},
          {"shards_loaded", r.shards_loaded},
          {"shards_skipped", r.shards_skipped},
          {"wall_ms", r.wall_seconds * 1000.0},
          {"bytes_read", r.bytes_read}};
}

void check_manifest(const RunManifest& m) {
  if (!fs::is_directory(m.graph_dir)) throw Error(ErrorCode::kNotFound, "graph directory not found: " + m.graph_dir);
  for (const auto& path : {m.values_out, m.metrics_out}) {
    if (path.empty() || path == "-") continue;
    const auto parent = fs::absolute(path).parent_path();
    if (!fs::is_directory(parent)) {
      throw Error(ErrorCode::kNotFound, "output directory not found: " + parent.string());
    }
  }
}

int cmd_run(const RunManifest& m, std::ostream& out, std::ostream& err) {
  check_manifest(m);
  AlgorithmSpec algo{parse_algorithm(m.algo), m.source};

  EngineConfig config;
  config.worker_count = m.workers;
  config.max_iterations = m.max_iterations;
  config.selective_scheduling = !m.no_selective;
  config.activation_threshold = m.activation_threshold;
  config.cache.mode = cache_mode_from_int(m.cache_mode);
  config.cache.budget_bytes = parse_byte_size(m.cache_budget);
  config.float_tolerance = m.tolerance;

  ShardStore store(m.graph_dir);
  auto init = initial_values(algo, store.meta().vertex_count);

  std::ofstream metrics_file;
  std::ostream* metrics = &out;
  fs::path metrics_tmp;
  if (!m.metrics_out.empty() && m.metrics_out != "-") {
    metrics_tmp = m.metrics_out + ".tmp";
    metrics_file.open(metrics_tmp, std::ios::trunc);
    if (!metrics_file) throw Error(ErrorCode::kIo, "cannot create " + metrics_tmp.string());
    metrics = &metrics_file;
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto result = run(store, make_update(algo), std::move(init), config,
                    [&](const IterationReport& r) { *metrics << report_json(r).dump() << "\n"; });
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  if (metrics_file.is_open()) {
    metrics_file.close();
    fs::rename(metrics_tmp, m.metrics_out);
  }
  if (!m.values_out.empty()) {
    io::Bytes bytes;
    bytes.reserve(8 * result.values.size());
    for (double v : result.values) io::put_f64(bytes, v);
    io::write_file_atomic(m.values_out, bytes);
  }

  const auto& t = result.totals;
  err << "algorithm: " << to_string(algo.name) << "\n"
      << "iterations: " << result.iterations.size() << (result.converged ? " (converged)" : "") << "\n"
      << "wall time: " << std::fixed << std::setprecision(3) << wall << " s\n"
      << "load time: " << result.load.wall_seconds << " s\n"
      << std::defaultfloat << "shard bytes read: " << t.shard_bytes_read << "\n"
      << "shard loads: " << t.shard_loads << "\n"
      << "cache hits: " << t.cache_hits << "\n"
      << "cache misses: " << t.cache_misses << "\n"
      << "vertex bytes written during iterations: " << t.vertex_bytes_written << "\n";
  return kExitOk;
}

int cmd_stats(const std::string& dir, std::ostream& out) {
  if (!fs::is_directory(dir)) throw Error(ErrorCode::kNotFound, "graph directory not found: " + dir);
  const auto files = read_metadata(dir);
  const auto& meta = files.meta;
  out << "vertices: " << meta.vertex_count << "\n"
      << "edges: " << meta.edge_count << "\n"
      << "shards: " << meta.shard_count << "\n";
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < meta.intervals.size(); ++k) {
    const auto& iv = meta.intervals[k];
    out << "shard " << k << ": [" << iv.lo << ", " << iv.hi << ") edges " << iv.edge_count << "\n";
    sum += iv.edge_count;
  }
  out << "shard edge total: " << sum << "\n";

  const auto& in = files.degrees.in_degree;
  const auto& outd = files.degrees.out_degree;
  const auto n = static_cast<double>(meta.vertex_count);
  out << "max in-degree: " << *std::max_element(in.begin(), in.end()) << "\n"
      << "max out-degree: " << *std::max_element(outd.begin(), outd.end()) << "\n"
      << "mean degree: " << static_cast<double>(meta.edge_count) / n << "\n"
      << "zero in-degree vertices: " << std::count(in.begin(), in.end(), 0u) << "\n"
      << "zero out-degree vertices: " << std::count(outd.begin(), outd.end(), 0u) << "\n";
  // Bucket b holds in-degrees in [2^(b-1), 2^b), bucket 0 holds zero.
  std::vector<std::uint64_t> hist;
  for (auto d : in) {
    const auto b = static_cast<std::size_t>(std::bit_width(d));
    if (b >= hist.size()) hist.resize(b + 1, 0);
    ++hist[b];
  }
  out << "in-degree histogram (log2 buckets):\n";
  for (std::size_t b = 0; b < hist.size(); ++b) {
    if (hist[b] == 0) continue;
    const std::uint64_t lo = b == 0 ? 0 : std::uint64_t{1} << (b - 1);
    const std::uint64_t hi = b == 0 ? 0 : (std::uint64_t{1} << b) - 1;
    out << "  [" << lo << ", " << hi << "]: " << hist[b] << "\n";
  }
  return kExitOk;
}

int cmd_costmodel(const CostArgs& a, std::ostream& out) {
  cost::CostInputs in{a.C, a.D, a.V, a.E, a.P, a.N, a.theta};
  const auto reports = cost::compare_all(in);
  if (a.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : reports) {
      rows.push_back({{"model", cost::to_string(r.model)},
                      {"read_bytes", r.read_bytes},
                      {"write_bytes", r.write_bytes},
                      {"memory_bytes", r.memory_bytes}});
    }
    out << rows.dump(2) << "\n";
    return kExitOk;
  }
  out << std::left << std::setw(8) << "model" << std::right << std::setw(22) << "read_bytes"
      << std::setw(22) << "write_bytes" << std::setw(22) << "memory_bytes" << "\n";
  out << std::setprecision(15);
  for (const auto& r : reports) {
    out << std::left << std::setw(8) << cost::to_string(r.model) << std::right << std::setw(22)
        << r.read_bytes << std::setw(22) << r.write_bytes << std::setw(22) << r.memory_bytes << "\n";
  }
  return kExitOk;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return kExitUsage;
    case ErrorCode::kNotFound:
    case ErrorCode::kIo:
    case ErrorCode::kFormat: return kExitData;
    case ErrorCode::kInternal: return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semi-external-memory graph analytics"};
  app.name("semgraph");
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic edge list");
  gen_cmd->add_option("--kind", gen.kind, "powerlaw|uniform|line|cycle|star|complete")->required();
  gen_cmd->add_option("--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("--e", gen.e, "Edge count (powerlaw, uniform)");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed");
  gen_cmd->add_option("--out", gen.out, "Output edge list path")->required();

  PreprocessArgs pre;
  auto* pre_cmd = app.add_subcommand("preprocess", "Shard an edge list into a graph directory");
  pre_cmd->add_option("input,--input", pre.input, "Edge list path")->required();
  pre_cmd->add_option("--out", pre.out, "Output graph directory")->required();
  pre_cmd->add_option("--format", pre.format, "text|binary");
  pre_cmd->add_option("--target-edges", pre.target_edges, "Target edges per shard");
  pre_cmd->add_option("--max-shards", pre.max_shards, "Upper bound on shard count");
  pre_cmd->add_option("--vertices", pre.vertices, "Force the vertex count");
  pre_cmd->add_flag("--symmetrize", pre.symmetrize, "Add the reverse of every edge");
  pre_cmd->add_flag("--remap", pre.remap, "Renumber ids densely and write idmap.bin");
  pre_cmd->add_option("--workers", pre.workers, "Threads for CSR conversion");

  RunManifest manifest;
  manifest.workers = default_workers();
  auto* run_cmd = app.add_subcommand("run", "Run an algorithm over a graph directory");
  run_cmd->add_option("--graph", manifest.graph_dir, "Graph directory")->required();
  run_cmd->add_option("--algo", manifest.algo, "pagerank|sssp|wcc")->required();
  run_cmd->add_option("--source", manifest.source, "SSSP source vertex");
  run_cmd->add_option("--workers", manifest.workers, "Worker threads (default $SEMGRAPH_WORKERS or 1)");
  run_cmd->add_option("--max-iterations", manifest.max_iterations, "Iteration cap");
  run_cmd->add_flag("--no-selective", manifest.no_selective, "Disable selective scheduling");
  run_cmd->add_option("--activation-threshold", manifest.activation_threshold,
                      "Active ratio at or below which shards are filtered");
  run_cmd->add_option("--cache-mode", manifest.cache_mode, "1=raw 2=lz4 3=zlib-1 4=zlib-3");
  run_cmd->add_option("--cache-budget", manifest.cache_budget, "Cache capacity (bytes, K/M/G suffix, inf)");
  run_cmd->add_option("--tolerance", manifest.tolerance, "Absolute epsilon for the changed flag");
  run_cmd->add_option("--out", manifest.values_out, "Final values file (f64 little-endian)");
  run_cmd->add_option("--metrics", manifest.metrics_out, "JSON-lines iteration reports (default stdout)");

  std::string stats_dir;
  auto* stats_cmd = app.add_subcommand("stats", "Describe a graph directory");
  stats_cmd->add_option("graph,--graph", stats_dir, "Graph directory")->required();

  CostArgs cost_args;
  auto* cost_cmd = app.add_subcommand("costmodel", "Compare per-iteration I/O of computation models");
  cost_cmd->add_option("--C", cost_args.C, "Bytes per vertex value");
  cost_cmd->add_option("--D", cost_args.D, "Bytes per edge");
  cost_cmd->add_option("--V", cost_args.V, "Vertex count")->required();
  cost_cmd->add_option("--E", cost_args.E, "Edge count")->required();
  cost_cmd->add_option("--P", cost_args.P, "Shard count");
  cost_cmd->add_option("--N", cost_args.N, "Worker count");
  cost_cmd->add_option("--theta", cost_args.theta, "Cache miss ratio");
  cost_cmd->add_flag("--json", cost_args.json, "Emit JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen, out);
    if (*pre_cmd) return cmd_preprocess(pre, out);
    if (*run_cmd) return cmd_run(manifest, out, err);
    if (*stats_cmd) return cmd_stats(stats_dir, out);
    if (*cost_cmd) return cmd_costmodel(cost_args, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace semgraph::cli
