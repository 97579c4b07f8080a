#include "parryscope/substitution.hpp"

#include <algorithm>

namespace parryscope {

std::vector<std::uint64_t> IncidenceMatrix::apply(const std::vector<std::uint64_t>& v) const {
  std::vector<std::uint64_t> out(size_, 0);
  for (std::size_t r = 0; r < size_; ++r) {
    for (std::size_t c = 0; c < size_; ++c) out[r] += (*this)(r, c) * v[c];
  }
  return out;
}

std::optional<std::size_t> IncidenceMatrix::positivity_exponent(std::size_t limit) const {
  const std::size_t n = size_;
  std::vector<bool> base(n * n), power(n * n);
  for (std::size_t i = 0; i < n * n; ++i) base[i] = power[i] = entries_[i] != 0;
  for (std::size_t k = 1; k <= limit; ++k) {
    if (std::all_of(power.begin(), power.end(), [](bool b) { return b; })) return k;
    std::vector<bool> next(n * n, false);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t j = 0; j < n && !next[r * n + c]; ++j) next[r * n + c] = power[r * n + j] && base[j * n + c];
      }
    }
    power = std::move(next);
  }
  return std::nullopt;
}

std::vector<std::vector<std::uint64_t>> IncidenceMatrix::rows() const {
  std::vector<std::vector<std::uint64_t>> out(size_);
  for (std::size_t r = 0; r < size_; ++r) out[r].assign(entries_.begin() + static_cast<std::ptrdiff_t>(r * size_),
                                                       entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * size_));
  return out;
}

Substitution Substitution::build(const RenyiExpansion& d) {
  const std::size_t m = d.m();
  if (m < 2) throw Error(ErrorCode::IntegerBase, "d = " + d.str() + " is an integer base; no canonical substitution");
  if (m > 256) throw Error(ErrorCode::LetterRange, "alphabet larger than 256 letters");
  std::vector<Word> images;
  images.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    Word img = Word::repeat(0, d.t(i + 1));
    if (i + 1 < m) img += static_cast<Letter>(i + 1);
    images.push_back(std::move(img));
  }
  return Substitution(std::move(images));
}

const Word& Substitution::image(Letter a) const {
  if (a >= images_.size()) throw Error(ErrorCode::LetterRange, "letter " + std::to_string(a) + " outside the alphabet");
  return images_[a];
}

Word Substitution::apply(const Word& w) const {
  std::vector<Letter> out;
  for (Letter a : w) {
    const Word& img = image(a);
    out.insert(out.end(), img.begin(), img.end());
  }
  return Word(std::move(out));
}

IncidenceMatrix Substitution::incidence_matrix() const {
  IncidenceMatrix mat(images_.size());
  for (std::size_t b = 0; b < images_.size(); ++b) {
    for (Letter a : images_[b]) ++mat(a, b);
  }
  return mat;
}

std::optional<std::size_t> Substitution::primitivity_exponent() const {
  return incidence_matrix().positivity_exponent(2 * images_.size());
}

Word fixed_point_prefix(const RenyiExpansion& d, std::size_t length) {
  const Substitution phi = Substitution::build(d);
  Word w{0};
  while (w.size() < length) w = phi.apply(w);
  return w.prefix(length);
}

FixedPointStream::FixedPointStream(const RenyiExpansion& d) : phi_(Substitution::build(d)), buffer_{0} {}

Letter FixedPointStream::next() {
  if (cursor_ == buffer_.size()) buffer_ = phi_.apply(buffer_);
  return buffer_[cursor_++];
}

std::map<std::size_t, std::size_t> j_indices(const RenyiExpansion& d) {
  std::map<std::size_t, std::size_t> out;
  for (std::size_t k = 2; k <= d.m(); ++k) {
    std::size_t i = 1;
    while (d.t(k - i) == 0) ++i;
    out[k] = i;
  }
  return out;
}

}  // namespace parryscope
