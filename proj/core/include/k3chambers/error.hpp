#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3chambers {

enum class ErrorCode {
  SingularMatrix,
  NotSymmetric,
  DimensionMismatch,
  PreconditionViolated,
  ModeMismatch,
  ModeUnsupported,
  IndexOutOfRange,
  InvalidModel,
  ParseError,
  NotBig,
  NotNegativeDefinite,
  UnrecognizedDiagram,
  DegenerateCorners,
  InvalidArgument,
  InternalInvariant,
};

/// Stable machine-readable name, e.g. "NOT_BIG".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace k3chambers
