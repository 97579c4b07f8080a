#include "parryscope/language.hpp"

#include <algorithm>
#include <charconv>
#include <cstring>
#include <limits>
#include <numeric>
#include <string_view>

#include "parryscope/substitution.hpp"

namespace parryscope {

std::size_t default_prefix_budget() {
  constexpr std::size_t fallback = std::size_t{1} << 21;
  const char* env = std::getenv("PARRYSCOPE_BUDGET");
  if (env == nullptr) return fallback;
  std::string_view text(env);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) return fallback;
  return value;
}

FactorLanguage::FactorLanguage(const Word& text, std::size_t max_length)
    : max_length_(max_length), counts_(max_length + 1, 0), factors_(max_length + 1) {
  const std::size_t len = text.size();
  const Letter* data = text.letters().data();
  auto key_len = [&](std::size_t pos) { return std::min(max_length, len - pos); };

  // Suffixes truncated to max_length, sorted; a proper prefix sorts first.
  std::vector<std::size_t> order(len);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const std::size_t la = key_len(a), lb = key_len(b);
    const int c = std::memcmp(data + a, data + b, std::min(la, lb));
    return c != 0 ? c < 0 : la < lb;
  });

  // lcp[k]: common prefix of the keys at order[k-1] and order[k].
  std::vector<std::size_t> lcp(len, 0);
  for (std::size_t k = 1; k < len; ++k) {
    const std::size_t a = order[k - 1], b = order[k];
    const std::size_t limit = std::min(key_len(a), key_len(b));
    std::size_t l = 0;
    while (l < limit && data[a + l] == data[b + l]) ++l;
    lcp[k] = l;
  }

  counts_[0] = 1;
  factors_[0].push_back(Word{});
  for (std::size_t n = 1; n <= max_length; ++n) {
    bool any = false;
    std::size_t run = std::numeric_limits<std::size_t>::max();
    for (std::size_t k = 0; k < len; ++k) {
      if (k > 0) run = std::min(run, lcp[k]);
      const std::size_t pos = order[k];
      if (key_len(pos) < n) continue;
      if (!any || run < n) factors_[n].emplace_back(LetterSpan(data + pos, n));
      any = true;
      run = std::numeric_limits<std::size_t>::max();
    }
    counts_[n] = factors_[n].size();
  }
}

bool FactorLanguage::contains(const Word& w) const {
  if (w.size() > max_length_) return false;
  const auto& set = factors_[w.size()];
  return std::binary_search(set.begin(), set.end(), w);
}

std::vector<Letter> FactorLanguage::left_extensions(const Word& w, std::size_t alphabet) const {
  std::vector<Letter> out;
  for (std::size_t a = 0; a < alphabet; ++a) {
    Word ext = Word{static_cast<Letter>(a)} + w;
    if (contains(ext)) out.push_back(static_cast<Letter>(a));
  }
  return out;
}

std::vector<Letter> FactorLanguage::right_extensions(const Word& w, std::size_t alphabet) const {
  std::vector<Letter> out;
  for (std::size_t a = 0; a < alphabet; ++a) {
    if (contains(w + static_cast<Letter>(a))) out.push_back(static_cast<Letter>(a));
  }
  return out;
}

StabilizedLanguage stabilized_language(const RenyiExpansion& d, std::size_t max_length, std::size_t budget) {
  if (budget == 0) budget = default_prefix_budget();
  const Substitution phi = Substitution::build(d);
  // Leave room for at least one doubling inside the budget.
  const std::size_t cap = std::max<std::size_t>(budget / 2, 1);
  Word seed{0};
  for (std::size_t i = 0; i < 2 * d.m() && seed.size() < cap; ++i) seed = phi.apply(seed);
  std::size_t length = std::min(std::max(10 * max_length, seed.size()), cap);

  StabilizedLanguage prev{fixed_point_prefix(d, length), {}, d.m(), false};
  prev.language = FactorLanguage(prev.prefix, max_length);
  while (2 * length <= budget) {
    length *= 2;
    StabilizedLanguage cur{fixed_point_prefix(d, length), {}, d.m(), false};
    cur.language = FactorLanguage(cur.prefix, max_length);
    if (cur.language.counts() == prev.language.counts()) {
      cur.stabilized = true;
      return cur;
    }
    prev = std::move(cur);
  }
  return prev;
}

StabilizedLanguage require_stabilized_language(const RenyiExpansion& d, std::size_t max_length, std::size_t budget) {
  StabilizedLanguage lang = stabilized_language(d, max_length, budget);
  if (!lang.stabilized) {
    throw Error(ErrorCode::BudgetExceeded, "factor sets up to length " + std::to_string(max_length) +
                                               " did not stabilize within a prefix of " +
                                               std::to_string(lang.prefix.size()) + " letters");
  }
  return lang;
}

}  // namespace parryscope
