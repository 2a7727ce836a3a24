#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubecomb {

enum class ErrorCode {
  kSchema,
  kDuplicateVertex,
  kDuplicateEdge,
  kSelfLoop,
  kDanglingEdge,
  kDisconnected,
  kUnknownVertex,
  kNotMedianGraph,
  kBadParams,
  kNotTwoSided,
  kUnknownWall,
  kSameWall,
  kNotCrossing,
  kEmptySet,
  kNotConvex,
  kDefinitionMismatch,
  kFacingBoundViolated,
  kEmbeddingVerificationFailed,
  kMedianClosureOverflow,
  kWindowTooSmall,
  kInternal,
};

// Upper snake case name, e.g. "DANGLING_EDGE".
std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cubecomb
