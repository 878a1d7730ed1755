#include "k3chambers/error.hpp"

namespace k3chambers {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SINGULAR_MATRIX";
    case ErrorCode::NotSymmetric: return "NOT_SYMMETRIC";
    case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::PreconditionViolated: return "PRECONDITION_VIOLATED";
    case ErrorCode::ModeMismatch: return "MODE_MISMATCH";
    case ErrorCode::ModeUnsupported: return "MODE_UNSUPPORTED";
    case ErrorCode::IndexOutOfRange: return "INDEX_OUT_OF_RANGE";
    case ErrorCode::InvalidModel: return "INVALID_MODEL";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::NotBig: return "NOT_BIG";
    case ErrorCode::NotNegativeDefinite: return "NOT_NEGATIVE_DEFINITE";
    case ErrorCode::UnrecognizedDiagram: return "UNRECOGNIZED_DIAGRAM";
    case ErrorCode::DegenerateCorners: return "DEGENERATE_CORNERS";
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::InternalInvariant: return "INTERNAL_INVARIANT";
  }
  return "UNKNOWN";
}

}  // namespace k3chambers
