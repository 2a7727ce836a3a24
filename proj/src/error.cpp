#include "cubecomb/error.hpp"

namespace cubecomb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSchema: return "SCHEMA_ERROR";
    case ErrorCode::kDuplicateVertex: return "DUPLICATE_VERTEX";
    case ErrorCode::kDuplicateEdge: return "DUPLICATE_EDGE";
    case ErrorCode::kSelfLoop: return "SELF_LOOP";
    case ErrorCode::kDanglingEdge: return "DANGLING_EDGE";
    case ErrorCode::kDisconnected: return "DISCONNECTED";
    case ErrorCode::kUnknownVertex: return "UNKNOWN_VERTEX";
    case ErrorCode::kNotMedianGraph: return "NOT_MEDIAN_GRAPH";
    case ErrorCode::kBadParams: return "BAD_PARAMS";
    case ErrorCode::kNotTwoSided: return "NOT_TWO_SIDED";
    case ErrorCode::kUnknownWall: return "UNKNOWN_WALL";
    case ErrorCode::kSameWall: return "SAME_WALL";
    case ErrorCode::kNotCrossing: return "NOT_CROSSING";
    case ErrorCode::kEmptySet: return "EMPTY_SET";
    case ErrorCode::kNotConvex: return "NOT_CONVEX";
    case ErrorCode::kDefinitionMismatch: return "DEFINITION_MISMATCH";
    case ErrorCode::kFacingBoundViolated: return "FACING_BOUND_VIOLATED";
    case ErrorCode::kEmbeddingVerificationFailed: return "EMBEDDING_VERIFICATION_FAILED";
    case ErrorCode::kMedianClosureOverflow: return "MEDIAN_CLOSURE_OVERFLOW";
    case ErrorCode::kWindowTooSmall: return "WINDOW_TOO_SMALL";
    case ErrorCode::kInternal: return "INTERNAL_ERROR";
  }
  return "UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace cubecomb
