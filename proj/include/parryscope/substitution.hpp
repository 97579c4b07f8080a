#pragma once

// The canonical substitution of a simple Parry number:
//   0 -> 0^t1 1,  1 -> 0^t2 2,  ...,  m-2 -> 0^t(m-1) (m-1),  m-1 -> 0^tm
// and its fixed point u_beta = lim phi^n(0).

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "parryscope/numeration.hpp"
#include "parryscope/words.hpp"

namespace parryscope {

/// entry(a, b) = number of occurrences of letter a in the image of b.
class IncidenceMatrix {
 public:
  explicit IncidenceMatrix(std::size_t size) : size_(size), entries_(size * size, 0) {}

  std::size_t size() const noexcept { return size_; }
  std::uint64_t operator()(std::size_t row, std::size_t col) const { return entries_[row * size_ + col]; }
  std::uint64_t& operator()(std::size_t row, std::size_t col) { return entries_[row * size_ + col]; }

  /// M v; used for letter counts of phi^n(w).
  std::vector<std::uint64_t> apply(const std::vector<std::uint64_t>& v) const;

  /// Smallest k <= limit with M^k entrywise positive (on the zero pattern).
  std::optional<std::size_t> positivity_exponent(std::size_t limit) const;

  std::vector<std::vector<std::uint64_t>> rows() const;

 private:
  std::size_t size_;
  std::vector<std::uint64_t> entries_;
};

class Substitution {
 public:
  /// Throws IntegerBase when m = 1 (the images degenerate to 0 -> 0^t1).
  static Substitution build(const RenyiExpansion& d);

  std::size_t alphabet_size() const noexcept { return images_.size(); }
  const Word& image(Letter a) const;
  const std::vector<Word>& images() const noexcept { return images_; }

  /// Morphic image of w. Throws LetterRange.
  Word apply(const Word& w) const;

  IncidenceMatrix incidence_matrix() const;
  /// Smallest k with M^k > 0, searched up to 2m.
  std::optional<std::size_t> primitivity_exponent() const;
  bool is_primitive() const { return primitivity_exponent().has_value(); }

 private:
  explicit Substitution(std::vector<Word> images) : images_(std::move(images)) {}
  std::vector<Word> images_;
};

inline Substitution build_substitution(const RenyiExpansion& d) { return Substitution::build(d); }

/// First `length` letters of u_beta, by iterating phi on "0".
Word fixed_point_prefix(const RenyiExpansion& d, std::size_t length);

/// Single-consumer letter stream over u_beta. The buffer is regrown by
/// applying phi to itself, which keeps it a prefix of the fixed point.
class FixedPointStream {
 public:
  explicit FixedPointStream(const RenyiExpansion& d);

  Letter next();
  std::size_t position() const noexcept { return cursor_; }

 private:
  Substitution phi_;
  Word buffer_;
  std::size_t cursor_ = 0;
};

/// j_k = min{ i in 1..k-1 : t_(k-i) != 0 } for k = 2..m.
std::map<std::size_t, std::size_t> j_indices(const RenyiExpansion& d);

}  // namespace parryscope
