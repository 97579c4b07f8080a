#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace parryscope {

enum class ErrorCode {
  Parse,
  EmptyWord,
  TrailingZero,
  ParryViolation,
  BaseNotAboveOne,
  IntegerBase,
  DigitRange,
  LetterRange,
  MixedBase,
  IndexRange,
  NonIntegerExpansion,
  FractionalBudgetExceeded,
  InadmissibleInput,
  ZeroHasNoPredecessor,
  BudgetExceeded,
  NotApplicable,
  DigitwiseSubtractionFailed,
  VerificationFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

// Single exception type for the library. `index` carries the offending
// position where one exists (suffix index for ParryViolation, condition
// number for VerificationFailed).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what,
        std::optional<std::size_t> index = std::nullopt)
      : std::runtime_error(what), code_(code), index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> index_;
};

}  // namespace parryscope
