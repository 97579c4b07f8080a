#pragma once

// Brute-force reference implementations used only by the tests. Nothing
// here calls into the code paths it is compared against.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "parryscope/words.hpp"

namespace parryscope::oracle {

inline std::vector<Letter> letters(const std::string& s) {
  std::vector<Letter> out;
  for (char c : s) out.push_back(static_cast<Letter>(c - '0'));
  return out;
}

inline Word w(const std::string& s) { return Word(letters(s)); }

/// Every word of length exactly n over 0..alphabet-1, in lexicographic order.
inline void for_each_word(std::size_t n, std::size_t alphabet, const std::function<void(const Word&)>& f) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= alphabet;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Letter> cur(n, 0);
    std::size_t rest = code;
    for (std::size_t i = n; i > 0; --i, rest /= alphabet) cur[i - 1] = static_cast<Letter>(rest % alphabet);
    f(Word(std::move(cur)));
  }
}

/// Border lengths by comparing every prefix with the suffix of equal length.
inline std::vector<std::size_t> naive_borders(const Word& x) {
  std::vector<std::size_t> out;
  for (std::size_t l = 1; l < x.size(); ++l) {
    bool same = true;
    for (std::size_t i = 0; i < l; ++i) same = same && x[i] == x[x.size() - l + i];
    if (same) out.push_back(l);
  }
  return out;
}

/// Largest k with x = v^k, trying every divisor of |x|.
inline std::size_t naive_exponent(const Word& x) {
  for (std::size_t len = 1; len <= x.size(); ++len) {
    if (x.size() % len) continue;
    bool ok = true;
    for (std::size_t i = len; i < x.size(); ++i) ok = ok && x[i] == x[i - len];
    if (ok) return x.size() / len;
  }
  return 1;
}

/// Suffix-of-length-i comparison with 0-padding against d, strictly below.
inline bool naive_admissible(const std::string& s, const std::string& d) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::string suffix = s.substr(i);
    // prefix-smaller lexicographic order
    if (!(suffix < d)) return false;
  }
  return true;
}

}  // namespace parryscope::oracle
