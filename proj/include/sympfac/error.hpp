#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace sympfac {

/// Six-significant-digit rendering for numbers quoted in error messages
/// (std::to_string would flatten small values to 0.000000).
inline std::string num_str(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

/// Stable failure categories surfaced by the library. The C wrapper maps these
/// one-to-one onto sympfac_status codes.
enum class ErrorCode {
  InvalidArgument,
  SingularMatrix,
  NoConvergence,
  NotPositiveDefinite,
  OddDimension,
  NotSymplectic,
  SingularUpperLeftBlock,
  SingularAfterShift,
  NonsingularizationFailed,
  NonsingularSolutionNotFound,
  NumericalFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace sympfac
