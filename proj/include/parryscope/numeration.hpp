#pragma once

// Numeration in a simple Parry base beta: Renyi expansion validation,
// admissibility of digit strings, exact values of beta-integers and the
// gap coding of the non-negative beta-integers.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "parryscope/error.hpp"
#include "parryscope/words.hpp"
#include "parryscope/zbeta.hpp"

namespace parryscope {

/// A validated Renyi expansion of unity d = t1..tm (finite, tm != 0).
class RenyiExpansion {
 public:
  /// Checks t1 >= 1, tm >= 1 and the Parry condition (every zero-padded
  /// proper suffix strictly below d). Throws EmptyWord, TrailingZero,
  /// ParryViolation(i) or BaseNotAboveOne (for d = "1").
  static RenyiExpansion validate(const Word& candidate);
  static RenyiExpansion parse(std::string_view text) { return validate(Word::parse(text)); }

  const Word& digits() const noexcept { return digits_; }
  std::size_t m() const noexcept { return digits_.size(); }
  /// t_i, 1-based.
  Letter t(std::size_t i) const { return digits_[i - 1]; }
  /// Largest digit allowed in a beta-expansion, ceil(beta) - 1.
  Letter max_digit() const noexcept;
  const BetaFieldPtr& field() const noexcept { return field_; }
  std::string str() const { return digits_.str(); }

  friend bool operator==(const RenyiExpansion& a, const RenyiExpansion& b) { return a.digits_ == b.digits_; }

 private:
  RenyiExpansion(Word digits, BetaFieldPtr field) : digits_(std::move(digits)), field_(std::move(field)) {}

  Word digits_;
  BetaFieldPtr field_;
};

inline RenyiExpansion validate_renyi(const Word& candidate) { return RenyiExpansion::validate(candidate); }

/// x_k..x_0 . x_-1 x_-2 ... with no leading zeros in the integer part.
struct BetaExpansion {
  Word integer_digits;
  Word fractional_digits;

  /// "10.01"; the integer part alone when there are no fractional digits.
  std::string str() const;
  friend bool operator==(const BetaExpansion&, const BetaExpansion&) = default;
};

/// The purely periodic quasi-greedy expansion (t1..t_{m-1}(tm - 1))^omega.
struct QuasiGreedy {
  Word period;
  Letter at(std::size_t i) const { return period[i % period.size()]; }
  /// The first n letters.
  Word prefix(std::size_t n) const;
};

QuasiGreedy quasi_greedy(const RenyiExpansion& d);

/// Integer coefficients of x^m - t1 x^(m-1) - ... - tm, lowest degree first.
std::vector<long> parry_polynomial(const RenyiExpansion& d);
std::string parry_polynomial_str(const RenyiExpansion& d);

/// Every suffix of s is strictly below d (prefix-smaller convention).
/// Throws DigitRange for a digit above max_digit().
bool is_admissible(const RenyiExpansion& d, LetterSpan s);

ZBeta zb_zero(const RenyiExpansion& d);
ZBeta zb_integer(const RenyiExpansion& d, long value);
ZBeta zb_beta(const RenyiExpansion& d);
/// Builds an element from coordinates of 1, beta, ..., reducing as needed.
ZBeta zb_from_coords(const RenyiExpansion& d, std::vector<long> coords);

/// T^i(1), 0 <= i <= m. Throws IndexRange.
ZBeta t_orbit(const RenyiExpansion& d, std::size_t i);

/// Sum of x_i beta^i over an integer digit string (no admissibility check).
ZBeta value_of(const RenyiExpansion& d, LetterSpan integer_digits);
/// Throws NonIntegerExpansion when fractional digits are present.
ZBeta value_of(const RenyiExpansion& d, const BetaExpansion& e);

class FractionalBudgetExceeded : public Error {
 public:
  FractionalBudgetExceeded(BetaExpansion partial, std::size_t budget)
      : Error(ErrorCode::FractionalBudgetExceeded,
              "greedy expansion did not terminate within " + std::to_string(budget) + " fractional digits"),
        partial_(std::move(partial)) {}
  const BetaExpansion& partial() const noexcept { return partial_; }

 private:
  BetaExpansion partial_;
};

/// Greedy beta-expansion of a non-negative integer. `fractional_budget` of
/// 0 selects the default 4m. Throws FractionalBudgetExceeded.
BetaExpansion greedy_expand_integer(const RenyiExpansion& d, std::uint64_t n, std::size_t fractional_budget = 0);

/// Next admissible string in radix order. Throws InadmissibleInput.
Word next_admissible(const RenyiExpansion& d, const Word& s);
/// Previous admissible string in radix order. Throws InadmissibleInput or
/// ZeroHasNoPredecessor.
Word previous_admissible(const RenyiExpansion& d, const Word& s);

/// Largest k <= |y| such that the length-k suffix of y is a prefix of the
/// quasi-greedy expansion. succ(y) - y = T^(k mod m)(1).
std::size_t succ_match_length(const RenyiExpansion& d, const Word& y);
/// Letter coding the distance from y to its successor.
Letter succ_gap_letter(const RenyiExpansion& d, const Word& y);
/// Letter coding the distance from y to its predecessor: trailing zero count
/// of y taken mod m. Throws ZeroHasNoPredecessor for y = 0.
Letter pred_gap_letter(const RenyiExpansion& d, const Word& y);

/// The gap letters of `count` consecutive steps starting at `start`.
Word coding_of_segment(const RenyiExpansion& d, const Word& start, std::size_t count);

/// Number of admissible strings strictly below s in radix order, i.e. the
/// position of s in the increasing enumeration of the beta-integers.
std::size_t radix_index(const RenyiExpansion& d, const Word& s);

/// Admissible string reached after `steps` successors of `start`.
Word advance_admissible(const RenyiExpansion& d, Word start, std::size_t steps);

/// Throws InadmissibleInput unless s is admissible.
void require_admissible(const RenyiExpansion& d, const Word& s);

}  // namespace parryscope
