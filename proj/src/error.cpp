#include "parryscope/error.hpp"

namespace parryscope {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::TrailingZero: return "TrailingZero";
    case ErrorCode::ParryViolation: return "ParryViolation";
    case ErrorCode::BaseNotAboveOne: return "BaseNotAboveOne";
    case ErrorCode::IntegerBase: return "IntegerBase";
    case ErrorCode::DigitRange: return "DigitRange";
    case ErrorCode::LetterRange: return "LetterRange";
    case ErrorCode::MixedBase: return "MixedBase";
    case ErrorCode::IndexRange: return "IndexRange";
    case ErrorCode::NonIntegerExpansion: return "NonIntegerExpansion";
    case ErrorCode::FractionalBudgetExceeded: return "FractionalBudgetExceeded";
    case ErrorCode::InadmissibleInput: return "InadmissibleInput";
    case ErrorCode::ZeroHasNoPredecessor: return "ZeroHasNoPredecessor";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::DigitwiseSubtractionFailed: return "DigitwiseSubtractionFailed";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace parryscope
