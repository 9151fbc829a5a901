#pragma once

#include <stdexcept>
#include <string>

namespace origami {

enum class ErrorCode {
  InvalidArgument = 1,
  Parse,
  Disconnected,
  NotFound,
  Io,
  CacheCorrupt,
  Resource,
  Internal,
};

// Single exception type for the core; the C layer maps `code()` to orc_status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace origami
