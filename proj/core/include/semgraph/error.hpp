#pragma once

#include <stdexcept>
#include <string>

namespace semgraph {

enum class ErrorCode {
  kInvalidArgument,
  kNotFound,
  kIo,
  kFormat,     // malformed or corrupted on-disk / input data
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace semgraph
