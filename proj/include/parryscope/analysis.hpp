#pragma once

// Factor complexity, special factors and the affine-complexity classifier
// for fixed points of canonical Parry substitutions.

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "parryscope/language.hpp"
#include "parryscope/numeration.hpp"
#include "parryscope/words.hpp"

namespace parryscope {

struct ComplexityProfile {
  /// values[n - 1] = C(n), n = 1..n_max.
  std::vector<std::size_t> values;
  /// deltas[n - 1] = C(n + 1) - C(n), n = 1..n_max - 1.
  std::vector<long> deltas;
  std::size_t n_max = 0;
  std::size_t prefix_length_used = 0;
  bool stabilized = false;

  std::size_t complexity(std::size_t n) const { return n == 0 ? 1 : values.at(n - 1); }
  long delta(std::size_t n) const { return deltas.at(n - 1); }
};

/// C(1..n_max) from a stabilized prefix. On budget exhaustion the partial
/// profile is returned with stabilized = false.
ComplexityProfile complexity_profile(const RenyiExpansion& d, std::size_t n_max, std::size_t budget = 0);

struct ExtendedFactor {
  Word word;
  std::vector<Letter> extensions;
};

struct SpecialFactorReport {
  std::size_t n = 0;
  std::size_t complexity = 0;       // C(n)
  std::size_t next_complexity = 0;  // C(n + 1)
  std::vector<ExtendedFactor> left_special;
  std::vector<ExtendedFactor> right_special;
  std::vector<Word> bispecial;
  std::vector<Word> maximal_left_special;
  /// Sum over length-n factors of (#Lext - 1); equals C(n + 1) - C(n).
  long lext_sum = 0;
  std::size_t prefix_length_used = 0;
};

/// Special factors of length n. Throws BudgetExceeded, or
/// VerificationFailed if the left-extension ledger does not balance.
SpecialFactorReport special_factors(const RenyiExpansion& d, std::size_t n, std::size_t budget = 0);
SpecialFactorReport special_factors(const StabilizedLanguage& lang, std::size_t n);

/// Maximal left special factors of length 1..bound, each checked to be
/// bispecial. Throws BudgetExceeded / VerificationFailed.
std::vector<Word> maximal_left_special(const RenyiExpansion& d, std::size_t bound, std::size_t budget = 0);
std::vector<Word> maximal_left_special(const StabilizedLanguage& lang, std::size_t bound);

struct Trident {
  Word word;
  Letter rooted = 0;
  Letter tooth_y = 0;
  Letter tooth_z = 0;
  /// Unique left extensions of word.Y and word.Z.
  Letter left_of_y = 0;
  Letter left_of_z = 0;
};

/// Every trident of length 0..bound (one entry per unordered pair of
/// non-rooted teeth). Empty when m < 3. Throws BudgetExceeded.
std::vector<Trident> find_tridents(const RenyiExpansion& d, std::size_t bound, std::size_t budget = 0);
std::vector<Trident> find_tridents(const StabilizedLanguage& lang, std::size_t bound);

enum class NonAffineReason { TmNotOne, FractionalPower };

struct OracleCheck {
  std::size_t n = 0;
  bool stabilized = false;
  bool affine_by_enumeration = false;
  /// First n with C(n+1) - C(n) != m - 1, if any.
  std::optional<std::size_t> first_excess;
  /// NotAffine only: length of a known left special factor that is not a
  /// prefix, so the first excess is at most this.
  std::optional<std::size_t> excess_bound;
  /// False when the verdict is NotAffine but excess_bound exceeds n, so the
  /// enumeration range cannot show the excess.
  bool conclusive = true;
  bool agrees = false;
  ComplexityProfile profile;
};

struct Classification {
  bool affine = false;
  /// Affine case: C(n) = slope * n + intercept.
  std::size_t slope = 0;
  std::size_t intercept = 0;
  std::optional<NonAffineReason> reason;
  /// FractionalPower: shortest border of t1..t(m-1).
  std::optional<Word> border;
  /// TmNotOne: 0^(t1 + tm - 1), a left special factor that is not a prefix.
  std::optional<Word> evidence;
  std::optional<OracleCheck> oracle;
};

/// Affine iff tm = 1 and t1..t(m-1) is not a fractional power.
/// Throws IntegerBase for m = 1.
Classification classify_affine(const RenyiExpansion& d);
/// Adds the enumeration cross-check over n = 1..oracle_n.
Classification classify_affine(const RenyiExpansion& d, std::size_t oracle_n, std::size_t budget = 0);

struct GapInventoryReport {
  std::set<Word> observed;
  std::set<Word> expected;
  std::set<Word> missing;  // expected but not observed
  std::set<Word> extra;    // observed but not expected
  std::size_t longest_zero_run = 0;
  std::size_t prefix_length_used = 0;
  bool stabilized = false;
  bool ok() const { return missing.empty() && extra.empty(); }
};

/// The factors X 0^r Y (X, Y non-zero) predicted from j_k and t1..tm.
std::set<Word> predicted_gap_inventory(const RenyiExpansion& d);

/// Scans a prefix of at least `min_length` letters, doubling until the
/// observed inventory stops growing. Throws BudgetExceeded.
GapInventoryReport verify_gap_inventory(const RenyiExpansion& d, std::size_t min_length = 1000, std::size_t budget = 0);

}  // namespace parryscope
