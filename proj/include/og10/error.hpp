#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace og10 {

// Stable machine-readable failure codes. The names returned by
// error_code_name() are part of the CLI and C API contract.
enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NotSymmetric,
  NotEven,
  Degenerate,
  ZeroVector,
  NotPrimitive,
  NonNegativeSquare,
  NoU2Witness,
  RankTooLarge,
  NotApplicable,
  NoAmbientEmbedding,
  NotHalfIntegral,
  NotOG10Vector,
  Inconsistent,
  NotProportionalToWall,
  EmbeddingNotFound,
  OnWall,
  NotCubicGram,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace og10
