#pragma once

// Factor languages of finite prefixes of u_beta, with doubling until the
// factor sets stabilize.

#include <cstddef>
#include <cstdlib>
#include <vector>

#include "parryscope/numeration.hpp"
#include "parryscope/words.hpp"

namespace parryscope {

/// Default cap on the generated prefix length; PARRYSCOPE_BUDGET overrides.
std::size_t default_prefix_budget();

/// Distinct factors of a finite word, by length, up to a maximum length.
class FactorLanguage {
 public:
  FactorLanguage() = default;
  /// Indexes all factors of `text` of length <= max_length.
  FactorLanguage(const Word& text, std::size_t max_length);

  std::size_t max_length() const noexcept { return max_length_; }
  /// Number of distinct factors of length n (n <= max_length).
  std::size_t count(std::size_t n) const { return counts_.at(n); }
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }
  /// Sorted distinct factors of length n.
  const std::vector<Word>& factors(std::size_t n) const { return factors_.at(n); }

  bool contains(const Word& w) const;
  /// Letters a with a.w a factor. Requires |w| < max_length.
  std::vector<Letter> left_extensions(const Word& w, std::size_t alphabet) const;
  std::vector<Letter> right_extensions(const Word& w, std::size_t alphabet) const;
  bool is_left_special(const Word& w, std::size_t alphabet) const { return left_extensions(w, alphabet).size() >= 2; }
  bool is_right_special(const Word& w, std::size_t alphabet) const { return right_extensions(w, alphabet).size() >= 2; }

 private:
  std::size_t max_length_ = 0;
  std::vector<std::size_t> counts_;
  std::vector<std::vector<Word>> factors_;
};

/// Factor language of u_beta up to a maximum length, taken from a prefix
/// that was doubled until the counts for every length stopped changing.
struct StabilizedLanguage {
  Word prefix;
  FactorLanguage language;
  std::size_t alphabet = 0;
  bool stabilized = false;
};

/// Starts at max(10 * max_length, |phi^(2m)(0)|), capped at budget / 2,
/// and doubles while the
/// per-length factor counts change and the prefix fits in `budget`
/// (0 selects default_prefix_budget()). Never throws on budget exhaustion;
/// check `stabilized`.
StabilizedLanguage stabilized_language(const RenyiExpansion& d, std::size_t max_length, std::size_t budget = 0);

/// As above, but throws BudgetExceeded when stabilization was not reached.
StabilizedLanguage require_stabilized_language(const RenyiExpansion& d, std::size_t max_length, std::size_t budget = 0);

}  // namespace parryscope
