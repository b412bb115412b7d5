#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace defzero {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  DeskScaleExceeded,
  NotNormal,
  NotNormalPSubgroup,
  NotYFixed,
  NotCommutative,
  CrossCheckFailed,
  VerificationFailed,
  SpanMismatch,
  NotSymmetricQuotient,
  NotAnIdeal,
  RadicalMismatch,
  FieldNotSplitting,
  SplitFailure,
  DegreeRecoveryFailed,
  Parse,
  Io,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C API can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace defzero
