#pragma once

// Explicit non-prefix left special factor for a non-affine Parry number
// with tm = 1 whose head t1..t(m-1) is a fractional power.
//
// With p the shortest border of t1..t(m-1), write d = p^r p' q p 1 where p'
// is a proper prefix of p (|p'| = j) and q starts with a letter below
// p_(j+1). Let h1 c and h2 c be the longest distinct-letter common suffixes
// of p p' q and p' q p, h = min(h1, h2), A = r|p| + j + 1. Then
//   z  = h c p^r p' q1
//   x1 = p^r p' q 0^A   - h c 0^A
//   x2 = p^r p' q p 0^A - h c 0^A
// are beta-integers whose neighbourhoods code the same word w, while their
// predecessor gaps differ and the step after x_i + z is 1 but after z is
// not. Then w0 is left special and not a prefix of u_beta.

#include <array>
#include <cstddef>
#include <optional>
#include <string>

#include "parryscope/analysis.hpp"
#include "parryscope/numeration.hpp"
#include "parryscope/words.hpp"

namespace parryscope {

struct WitnessBundle {
  Word p;
  std::size_t r = 0;
  Word p_prime;
  Word q;
  Word c;
  std::size_t j = 0;
  Letter h1 = 0;
  Letter h2 = 0;
  Letter h = 0;
  std::size_t a = 0;
  Word z;
  Word x1;
  Word x2;
};

struct WitnessVerification {
  /// Results for conditions (i)..(iv).
  std::array<bool, 4> conditions{};
  /// Number of gaps in [0, z].
  std::size_t span = 0;
  Word coding;
  Word coding_x1;
  Word coding_x2;
  Word end_x1;  // x1 + z
  Word end_x2;  // x2 + z
  Letter pred_letter_x1 = 0;
  Letter pred_letter_x2 = 0;
  Letter succ_letter_end_x1 = 0;
  Letter succ_letter_end_x2 = 0;
  /// Raw suffix-match length for z and its letter.
  std::size_t succ_match_z = 0;
  Letter succ_letter_z = 0;
  /// Left special factor w0 that is not a prefix of u_beta.
  Word left_special;
  bool all() const { return conditions[0] && conditions[1] && conditions[2] && conditions[3]; }
};

/// Subtracts `subtrahend` from `minuend` digit by digit, right-aligned,
/// and strips leading zeros. Throws DigitwiseSubtractionFailed on a borrow.
Word digitwise_subtract(const Word& minuend, const Word& subtrahend);

/// Throws NotApplicable when the classifier says affine or tm != 1;
/// DigitwiseSubtractionFailed / VerificationFailed on internal
/// inconsistencies.
WitnessBundle construct_witness(const RenyiExpansion& d);

/// Checks conditions (i)..(iv) with exact arithmetic. Throws
/// VerificationFailed(condition) on the first failing condition unless
/// `throw_on_failure` is false.
WitnessVerification verify_witness(const RenyiExpansion& d, const WitnessBundle& w, bool throw_on_failure = true);

}  // namespace parryscope
