#include "multiflag/error.hpp"

namespace multiflag {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::BadLinkLength: return "BadLinkLength";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonUnitSegment: return "NonUnitSegment";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorCode::RankDeficientFrame: return "RankDeficientFrame";
    case ErrorCode::RuleViolation: return "RuleViolation";
    case ErrorCode::ChartSingular: return "ChartSingular";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::UnclassifiableDegeneracy: return "UnclassifiableDegeneracy";
    case ErrorCode::InfeasibleLetter: return "InfeasibleLetter";
    case ErrorCode::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::IdentityViolated: return "IdentityViolated";
    case ErrorCode::NonUnitDirection: return "NonUnitDirection";
    case ErrorCode::SpanMismatch: return "SpanMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace multiflag
