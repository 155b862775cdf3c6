#pragma once

#include <cstdint>
#include <span>
#include <string_view>

#include "semgraph/binary_io.hpp"

namespace semgraph {

// Cache compression modes, ordered by increasing compression ratio and
// decompression cost.
enum class CacheMode : int {
  kUncompressed = 1,
  kFast = 2,      // LZ4
  kDeflate1 = 3,  // zlib level 1
  kDeflate3 = 4,  // zlib level 3
};

CacheMode cache_mode_from_int(int mode);
std::string_view to_string(CacheMode mode);

io::Bytes compress(CacheMode mode, std::span<const std::uint8_t> raw);

// raw_size is the exact decompressed length; throws Error(kFormat) when the
// stored bytes do not decode to exactly that many bytes.
io::Bytes decompress(CacheMode mode, std::span<const std::uint8_t> stored, std::size_t raw_size);

std::uint32_t crc32(std::span<const std::uint8_t> data);

}  // namespace semgraph
