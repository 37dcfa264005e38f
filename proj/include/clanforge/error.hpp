#pragma once

#include <stdexcept>
#include <string>

namespace clanforge {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Io,
  Domain,        // quantity mathematically undefined for this input
  NotFound,
  Disconnected,
};

const char* to_string(ErrorCode code);

// Single exception type for the core library; the C API maps `code()` onto
// its status enum.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace clanforge
