#include "parryscope/words.hpp"

#include <algorithm>
#include <charconv>

#include "parryscope/error.hpp"

namespace parryscope {

std::strong_ordering lex_compare(LetterSpan u, LetterSpan v) noexcept {
  return std::lexicographical_compare_three_way(u.begin(), u.end(), v.begin(), v.end());
}

std::strong_ordering radix_compare(LetterSpan u, LetterSpan v) noexcept {
  if (u.size() != v.size()) return u.size() <=> v.size();
  return lex_compare(u, v);
}

Word Word::parse(std::string_view text) {
  std::vector<Letter> out;
  if (text.empty()) return Word{};
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') {
        throw Error(ErrorCode::Parse, "invalid digit '" + std::string(1, c) + "' in \"" + std::string(text) + "\"");
      }
      out.push_back(static_cast<Letter>(c - '0'));
    }
    return Word(std::move(out));
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto field = text.substr(pos, comma - pos);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size() || value > 255) {
      throw Error(ErrorCode::Parse, "invalid letter \"" + std::string(field) + "\" in \"" + std::string(text) + "\"");
    }
    out.push_back(static_cast<Letter>(value));
    pos = comma + 1;
  }
  return Word(std::move(out));
}

std::string Word::str() const {
  const bool compact = std::all_of(letters_.begin(), letters_.end(), [](Letter a) { return a <= 9; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (compact) {
      out.push_back(static_cast<char>('0' + letters_[i]));
    } else {
      if (i) out.push_back(',');
      out += std::to_string(letters_[i]);
    }
  }
  return out;
}

Word Word::prefix(std::size_t n) const {
  n = std::min(n, size());
  return Word(span().first(n));
}

Word Word::suffix(std::size_t n) const {
  n = std::min(n, size());
  return Word(span().last(n));
}

Word Word::substr(std::size_t pos, std::size_t n) const {
  pos = std::min(pos, size());
  n = std::min(n, size() - pos);
  return Word(span().subspan(pos, n));
}

Word Word::power(std::size_t k) const {
  std::vector<Letter> out;
  out.reserve(size() * k);
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out));
}

bool Word::starts_with(LetterSpan p) const noexcept {
  return p.size() <= size() && std::equal(p.begin(), p.end(), letters_.begin());
}

bool Word::ends_with(LetterSpan s) const noexcept {
  return s.size() <= size() && std::equal(s.begin(), s.end(), letters_.end() - static_cast<std::ptrdiff_t>(s.size()));
}

Word& Word::operator+=(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word& Word::operator+=(Letter letter) {
  letters_.push_back(letter);
  return *this;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  // FNV-1a
  std::size_t h = 1469598103934665603ull;
  for (Letter a : w) {
    h ^= a;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<std::size_t> failure_function(LetterSpan w) {
  std::vector<std::size_t> fail(w.size(), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k - 1];
    if (w[i] == w[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

std::vector<std::size_t> borders(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "borders of the empty word");
  const auto fail = failure_function(w);
  std::vector<std::size_t> out;
  for (std::size_t b = fail.back(); b > 0; b = fail[b - 1]) out.push_back(b);
  std::reverse(out.begin(), out.end());
  return out;
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "primitive root of the empty word");
  const std::size_t period = w.size() - failure_function(w).back();
  if (w.size() % period == 0) return {w.prefix(period), w.size() / period};
  return {w, 1};
}

bool satisfies_power_condition(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "power condition on the empty word");
  return borders(w).empty() || primitive_root(w).exponent >= 2;
}

std::set<Word> factor_set(const Word& w, std::size_t n) {
  std::set<Word> out;
  if (n > w.size()) return out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

std::size_t common_suffix_length(LetterSpan u, LetterSpan v) noexcept {
  std::size_t k = 0;
  while (k < u.size() && k < v.size() && u[u.size() - 1 - k] == v[v.size() - 1 - k]) ++k;
  return k;
}

}  // namespace parryscope
