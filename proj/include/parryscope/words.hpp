#pragma once

// Finite words over a small integer alphabet.
//
// A Word is an immutable-by-convention sequence of letters 0..255. The
// alphabet size is not stored; callers supply it from context (the Renyi
// expansion or substitution they are working with).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace parryscope {

using Letter = std::uint8_t;
using LetterSpan = std::span<const Letter>;

/// Lexicographic comparison where a proper prefix compares Less.
std::strong_ordering lex_compare(LetterSpan u, LetterSpan v) noexcept;

class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  explicit Word(LetterSpan letters) : letters_(letters.begin(), letters.end()) {}

  /// Parses "2121" (compact, every digit <= 9) or "2,1,2,1". The empty
  /// string parses to the empty word. Throws Error(Parse).
  static Word parse(std::string_view text);

  /// n copies of `letter`.
  static Word repeat(Letter letter, std::size_t n) { return Word(std::vector<Letter>(n, letter)); }

  /// Compact form when every letter <= 9, otherwise comma separated.
  std::string str() const;

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  Letter front() const noexcept { return letters_.front(); }
  Letter back() const noexcept { return letters_.back(); }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }
  LetterSpan span() const noexcept { return letters_; }
  operator LetterSpan() const noexcept { return letters_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }

  Word prefix(std::size_t n) const;
  Word suffix(std::size_t n) const;
  Word substr(std::size_t pos, std::size_t n) const;
  /// This word repeated `k` times.
  Word power(std::size_t k) const;
  bool starts_with(LetterSpan p) const noexcept;
  bool ends_with(LetterSpan s) const noexcept;

  Word& operator+=(const Word& other);
  Word& operator+=(Letter letter);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }
  friend Word operator+(Word lhs, Letter rhs) { return lhs += rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& u, const Word& v) noexcept {
    return lex_compare(u.span(), v.span());
  }

 private:
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Comparison in radix order: shorter first, then lexicographic.
std::strong_ordering radix_compare(LetterSpan u, LetterSpan v) noexcept;

/// KMP failure table: fail[i] is the length of the longest proper border
/// of the prefix of length i + 1.
std::vector<std::size_t> failure_function(LetterSpan w);

/// All border lengths 0 < l < |w|, ascending. Throws EmptyWord.
std::vector<std::size_t> borders(const Word& w);

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 1;
};

/// w = root^exponent with exponent maximal. Throws EmptyWord.
PrimitiveRoot primitive_root(const Word& w);

/// True iff w is not a fractional power: every rational alpha > 1 with
/// w = v^alpha is an integer. Equivalent: w has no border, or w is a
/// proper integer power. Throws EmptyWord.
bool satisfies_power_condition(const Word& w);

/// All distinct length-n factors of w.
std::set<Word> factor_set(const Word& w, std::size_t n);

/// Longest common suffix length of two spans.
std::size_t common_suffix_length(LetterSpan u, LetterSpan v) noexcept;

}  // namespace parryscope
