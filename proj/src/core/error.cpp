#include "clanforge/error.hpp"

namespace clanforge {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Io: return "i/o error";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::NotFound: return "not found";
    case ErrorCode::Disconnected: return "disconnected";
  }
  return "unknown error";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace clanforge
