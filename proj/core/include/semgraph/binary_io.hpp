#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <filesystem>
#include <span>
#include <vector>

namespace semgraph::io {

using Bytes = std::vector<std::uint8_t>;

// Little-endian fixed-width encoding. Every on-disk integer and float goes
// through these helpers.
inline void put_u32(Bytes& out, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

inline void put_u64(Bytes& out, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

inline void put_f64(Bytes& out, double x) { put_u64(out, std::bit_cast<std::uint64_t>(x)); }

inline std::uint32_t get_u32(std::span<const std::uint8_t> in, std::size_t off) {
  std::uint32_t x = 0;
  for (int i = 0; i < 4; ++i) x |= static_cast<std::uint32_t>(in[off + i]) << (8 * i);
  return x;
}

inline std::uint64_t get_u64(std::span<const std::uint8_t> in, std::size_t off) {
  std::uint64_t x = 0;
  for (int i = 0; i < 8; ++i) x |= static_cast<std::uint64_t>(in[off + i]) << (8 * i);
  return x;
}

inline double get_f64(std::span<const std::uint8_t> in, std::size_t off) {
  return std::bit_cast<double>(get_u64(in, off));
}

// Reads the whole file. Throws semgraph::Error (kNotFound / kIo).
Bytes read_file(const std::filesystem::path& path);

// Writes via a sibling temp file and rename, so readers never observe a
// partially written file.
void write_file_atomic(const std::filesystem::path& path,
                       std::span<const std::uint8_t> data);

}  // namespace semgraph::io
