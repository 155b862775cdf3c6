#include "semgraph/codec.hpp"

#include <limits>
#include <string>

#include <lz4.h>
#include <zlib.h>

#include "semgraph/error.hpp"

namespace semgraph {

CacheMode cache_mode_from_int(int mode) {
  if (mode < 1 || mode > 4) {
    throw Error(ErrorCode::kInvalidArgument, "cache mode must be 1..4, got " + std::to_string(mode));
  }
  return static_cast<CacheMode>(mode);
}

std::string_view to_string(CacheMode mode) {
  switch (mode) {
    case CacheMode::kUncompressed: return "mode-1 (uncompressed)";
    case CacheMode::kFast: return "mode-2 (lz4)";
    case CacheMode::kDeflate1: return "mode-3 (zlib-1)";
    case CacheMode::kDeflate3: return "mode-4 (zlib-3)";
  }
  return "unknown";
}

namespace {

constexpr auto kMaxLz4Input = static_cast<std::size_t>(LZ4_MAX_INPUT_SIZE);

io::Bytes deflate(std::span<const std::uint8_t> raw, int level) {
  uLongf bound = compressBound(static_cast<uLong>(raw.size()));
  io::Bytes out(bound);
  if (compress2(out.data(), &bound, raw.data(), static_cast<uLong>(raw.size()), level) != Z_OK) {
    throw Error(ErrorCode::kInternal, "zlib compression failed");
  }
  out.resize(bound);
  return out;
}

io::Bytes inflate(std::span<const std::uint8_t> stored, std::size_t raw_size) {
  io::Bytes out(raw_size);
  uLongf len = static_cast<uLongf>(raw_size);
  const int rc = uncompress(out.data(), &len, stored.data(), static_cast<uLong>(stored.size()));
  if (rc != Z_OK || len != raw_size) throw Error(ErrorCode::kFormat, "zlib payload is corrupted");
  return out;
}

}  // namespace

io::Bytes compress(CacheMode mode, std::span<const std::uint8_t> raw) {
  switch (mode) {
    case CacheMode::kUncompressed:
      return io::Bytes(raw.begin(), raw.end());
    case CacheMode::kFast: {
      if (raw.size() > kMaxLz4Input) throw Error(ErrorCode::kInvalidArgument, "payload too large for lz4");
      const int src_len = static_cast<int>(raw.size());
      io::Bytes out(static_cast<std::size_t>(LZ4_compressBound(src_len)));
      const int n = LZ4_compress_default(reinterpret_cast<const char*>(raw.data()),
                                         reinterpret_cast<char*>(out.data()), src_len,
                                         static_cast<int>(out.size()));
      if (n <= 0 && !raw.empty()) throw Error(ErrorCode::kInternal, "lz4 compression failed");
      out.resize(static_cast<std::size_t>(n));
      return out;
    }
    case CacheMode::kDeflate1:
      return deflate(raw, 1);
    case CacheMode::kDeflate3:
      return deflate(raw, 3);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown cache mode");
}

io::Bytes decompress(CacheMode mode, std::span<const std::uint8_t> stored, std::size_t raw_size) {
  switch (mode) {
    case CacheMode::kUncompressed:
      if (stored.size() != raw_size) throw Error(ErrorCode::kFormat, "cached payload has wrong length");
      return io::Bytes(stored.begin(), stored.end());
    case CacheMode::kFast: {
      if (raw_size > kMaxLz4Input || stored.size() > kMaxLz4Input) {
        throw Error(ErrorCode::kFormat, "lz4 payload too large");
      }
      io::Bytes out(raw_size);
      const int n = LZ4_decompress_safe(reinterpret_cast<const char*>(stored.data()),
                                        reinterpret_cast<char*>(out.data()),
                                        static_cast<int>(stored.size()), static_cast<int>(raw_size));
      if (n < 0 || static_cast<std::size_t>(n) != raw_size) {
        throw Error(ErrorCode::kFormat, "lz4 payload is corrupted");
      }
      return out;
    }
    case CacheMode::kDeflate1:
    case CacheMode::kDeflate3:
      return inflate(stored, raw_size);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown cache mode");
}

std::uint32_t crc32(std::span<const std::uint8_t> data) {
  uLong crc = ::crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks.
  constexpr std::size_t kChunk = std::numeric_limits<uInt>::max();
  for (std::size_t off = 0; off < data.size(); off += kChunk) {
    const auto n = std::min(kChunk, data.size() - off);
    crc = ::crc32(crc, data.data() + off, static_cast<uInt>(n));
  }
  return static_cast<std::uint32_t>(crc);
}

}  // namespace semgraph
