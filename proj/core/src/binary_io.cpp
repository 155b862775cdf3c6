#include "semgraph/binary_io.hpp"

#include <fstream>
#include <system_error>

#include "semgraph/error.hpp"

namespace semgraph::io {

Bytes read_file(const std::filesystem::path& path) {
  std::error_code ec;
  const auto size = std::filesystem::file_size(path, ec);
  if (ec) {
    throw Error(ErrorCode::kNotFound, "cannot stat " + path.string() + ": " + ec.message());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  Bytes data(size);
  if (size > 0 && !in.read(reinterpret_cast<char*>(data.data()),
                           static_cast<std::streamsize>(size))) {
    throw Error(ErrorCode::kIo, "short read on " + path.string());
  }
  return data;
}

void write_file_atomic(const std::filesystem::path& path,
                       std::span<const std::uint8_t> data) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot create " + tmp.string());
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "write failed on " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot rename into " + path.string());
  }
}

}  // namespace semgraph::io
