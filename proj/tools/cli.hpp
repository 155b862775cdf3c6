#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace semgraph::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitInternal = 3,
};

// Entry point shared by the binary and the tests. args excludes argv[0].
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "4096", "64K", "1.5M", "2GiB", "inf". Binary (1024) multiples.
std::uint64_t parse_byte_size(std::string_view text);

}  // namespace semgraph::cli
