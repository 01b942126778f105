#include "og10/error.hpp"

namespace og10 {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NotEven: return "NotEven";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NonNegativeSquare: return "NonNegativeSquare";
    case ErrorCode::NoU2Witness: return "NoU2Witness";
    case ErrorCode::RankTooLarge: return "RankTooLarge";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NoAmbientEmbedding: return "NoAmbientEmbedding";
    case ErrorCode::NotHalfIntegral: return "NotHalfIntegral";
    case ErrorCode::NotOG10Vector: return "NotOG10Vector";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotProportionalToWall: return "NotProportionalToWall";
    case ErrorCode::EmbeddingNotFound: return "EmbeddingNotFound";
    case ErrorCode::OnWall: return "OnWall";
    case ErrorCode::NotCubicGram: return "NotCubicGram";
  }
  return "Unknown";
}

}  // namespace og10
