#pragma once

#include <stdexcept>
#include <string>

namespace lvs {

// Numeric values double as CLI exit codes and C API status codes.
enum class ErrorCode : int {
  InvalidArgument = 1,
  InvalidParams = 2,
  SolverAbort = 3,
  DomainMargin = 4,
  VerificationFailed = 5,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidArgument, what);
}

}  // namespace lvs
