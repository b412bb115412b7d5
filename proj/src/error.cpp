#include "defzero/error.hpp"

namespace defzero {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DeskScaleExceeded: return "DeskScaleExceeded";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotNormalPSubgroup: return "NotNormalPSubgroup";
    case ErrorCode::NotYFixed: return "NotYFixed";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::CrossCheckFailed: return "CrossCheckFailed";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
    case ErrorCode::SpanMismatch: return "SpanMismatch";
    case ErrorCode::NotSymmetricQuotient: return "NotSymmetricQuotient";
    case ErrorCode::NotAnIdeal: return "NotAnIdeal";
    case ErrorCode::RadicalMismatch: return "RadicalMismatch";
    case ErrorCode::FieldNotSplitting: return "FieldNotSplitting";
    case ErrorCode::SplitFailure: return "SplitFailure";
    case ErrorCode::DegreeRecoveryFailed: return "DegreeRecoveryFailed";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace defzero
