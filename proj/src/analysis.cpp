#include "parryscope/analysis.hpp"

#include <algorithm>

#include "parryscope/substitution.hpp"
#include "parryscope/witness.hpp"

namespace parryscope {

namespace {

void require_length(const StabilizedLanguage& lang, std::size_t needed) {
  if (lang.language.max_length() < needed) {
    throw Error(ErrorCode::IndexRange, "factor language indexed to length " + std::to_string(lang.language.max_length()) +
                                           ", need " + std::to_string(needed));
  }
}

}  // namespace

ComplexityProfile complexity_profile(const RenyiExpansion& d, std::size_t n_max, std::size_t budget) {
  if (n_max == 0) throw Error(ErrorCode::IndexRange, "complexity profile needs n_max >= 1");
  const StabilizedLanguage lang = stabilized_language(d, n_max, budget);
  ComplexityProfile out;
  out.n_max = n_max;
  out.prefix_length_used = lang.prefix.size();
  out.stabilized = lang.stabilized;
  for (std::size_t n = 1; n <= n_max; ++n) out.values.push_back(lang.language.count(n));
  for (std::size_t n = 1; n < n_max; ++n) {
    out.deltas.push_back(static_cast<long>(out.values[n]) - static_cast<long>(out.values[n - 1]));
  }
  return out;
}

SpecialFactorReport special_factors(const StabilizedLanguage& lang, std::size_t n) {
  require_length(lang, n + 2);
  const FactorLanguage& fl = lang.language;
  const std::size_t alphabet = lang.alphabet;
  SpecialFactorReport out;
  out.n = n;
  out.complexity = fl.count(n);
  out.next_complexity = fl.count(n + 1);
  out.prefix_length_used = lang.prefix.size();
  for (const Word& w : fl.factors(n)) {
    auto lext = fl.left_extensions(w, alphabet);
    auto rext = fl.right_extensions(w, alphabet);
    out.lext_sum += static_cast<long>(lext.size()) - 1;
    const bool left = lext.size() >= 2;
    const bool right = rext.size() >= 2;
    if (left) {
      const bool maximal = std::none_of(rext.begin(), rext.end(),
                                        [&](Letter a) { return fl.is_left_special(w + a, alphabet); });
      if (maximal) out.maximal_left_special.push_back(w);
      out.left_special.push_back({w, std::move(lext)});
    }
    if (right) out.right_special.push_back({w, std::move(rext)});
    if (left && right) out.bispecial.push_back(w);
  }
  const long delta = static_cast<long>(out.next_complexity) - static_cast<long>(out.complexity);
  if (out.lext_sum != delta) {
    throw Error(ErrorCode::VerificationFailed, "left-extension sum " + std::to_string(out.lext_sum) +
                                                   " != C(n+1) - C(n) = " + std::to_string(delta) +
                                                   " at n = " + std::to_string(n));
  }
  return out;
}

SpecialFactorReport special_factors(const RenyiExpansion& d, std::size_t n, std::size_t budget) {
  return special_factors(require_stabilized_language(d, n + 2, budget), n);
}

std::vector<Word> maximal_left_special(const StabilizedLanguage& lang, std::size_t bound) {
  require_length(lang, bound + 2);
  std::vector<Word> out;
  for (std::size_t n = 1; n <= bound; ++n) {
    const SpecialFactorReport report = special_factors(lang, n);
    for (const Word& w : report.maximal_left_special) {
      if (std::find(report.bispecial.begin(), report.bispecial.end(), w) == report.bispecial.end()) {
        throw Error(ErrorCode::VerificationFailed, "maximal left special factor " + w.str() + " is not bispecial");
      }
      out.push_back(w);
    }
  }
  return out;
}

std::vector<Word> maximal_left_special(const RenyiExpansion& d, std::size_t bound, std::size_t budget) {
  return maximal_left_special(require_stabilized_language(d, bound + 2, budget), bound);
}

std::vector<Trident> find_tridents(const StabilizedLanguage& lang, std::size_t bound) {
  std::vector<Trident> out;
  const std::size_t alphabet = lang.alphabet;
  if (alphabet < 3) return out;
  require_length(lang, bound + 2);
  const FactorLanguage& fl = lang.language;
  for (std::size_t n = 0; n <= bound; ++n) {
    for (const Word& w : fl.factors(n)) {
      std::vector<Letter> rooted;
      std::vector<std::pair<Letter, Letter>> unique;  // (tooth, its only left extension)
      for (Letter a : fl.right_extensions(w, alphabet)) {
        const auto lext = fl.left_extensions(w + a, alphabet);
        if (lext.size() >= 2) {
          rooted.push_back(a);
        } else if (lext.size() == 1) {
          unique.emplace_back(a, lext.front());
        }
      }
      for (Letter x : rooted) {
        for (std::size_t i = 0; i < unique.size(); ++i) {
          for (std::size_t j = i + 1; j < unique.size(); ++j) {
            if (unique[i].second == unique[j].second) continue;
            out.push_back({w, x, unique[i].first, unique[j].first, unique[i].second, unique[j].second});
          }
        }
      }
    }
  }
  return out;
}

std::vector<Trident> find_tridents(const RenyiExpansion& d, std::size_t bound, std::size_t budget) {
  if (d.m() < 3) return {};
  return find_tridents(require_stabilized_language(d, bound + 2, budget), bound);
}

Classification classify_affine(const RenyiExpansion& d) {
  const std::size_t m = d.m();
  if (m < 2) throw Error(ErrorCode::IntegerBase, "d = " + d.str() + " is an integer base");
  Classification out;
  if (d.t(m) != 1) {
    out.reason = NonAffineReason::TmNotOne;
    out.evidence = Word::repeat(0, d.t(1) + d.t(m) - 1u);
    return out;
  }
  const Word head = d.digits().prefix(m - 1);
  if (satisfies_power_condition(head)) {
    out.affine = true;
    out.slope = m - 1;
    out.intercept = 1;
    return out;
  }
  out.reason = NonAffineReason::FractionalPower;
  out.border = head.prefix(borders(head).front());
  return out;
}

Classification classify_affine(const RenyiExpansion& d, std::size_t oracle_n, std::size_t budget) {
  Classification out = classify_affine(d);
  OracleCheck check;
  check.n = oracle_n;
  check.profile = complexity_profile(d, oracle_n + 1, budget);
  check.stabilized = check.profile.stabilized;
  const long expected = static_cast<long>(d.m()) - 1;
  if (check.profile.complexity(1) != d.m()) check.first_excess = 0;
  for (std::size_t n = 1; n <= oracle_n && !check.first_excess; ++n) {
    if (check.profile.delta(n) != expected) check.first_excess = n;
  }
  check.affine_by_enumeration = !check.first_excess.has_value();
  bool match = check.affine_by_enumeration == out.affine;
  if (!out.affine) {
    if (out.reason == NonAffineReason::TmNotOne) {
      check.excess_bound = out.evidence->size();
    } else {
      const WitnessBundle w = construct_witness(d);
      check.excess_bound = verify_witness(d, w).left_special.size();
    }
    check.conclusive = *check.excess_bound <= oracle_n;
    match = match && *check.first_excess <= *check.excess_bound;
  }
  check.agrees = check.stabilized && check.conclusive && match;
  out.oracle = std::move(check);
  return out;
}

std::set<Word> predicted_gap_inventory(const RenyiExpansion& d) {
  const std::size_t m = d.m();
  const auto j = j_indices(d);
  std::set<Word> out;
  for (std::size_t k = 2; k + 1 <= m; ++k) {
    out.insert(Word{static_cast<Letter>(j.at(k))} + Word::repeat(0, d.t(k)) + static_cast<Letter>(k));
  }
  for (std::size_t k = 1; k + 1 <= m; ++k) {
    out.insert(Word{static_cast<Letter>(k)} + Word::repeat(0, d.t(1)) + static_cast<Letter>(1));
  }
  out.insert(Word{static_cast<Letter>(j.at(m))} + Word::repeat(0, d.t(1) + d.t(m)) + static_cast<Letter>(1));
  return out;
}

namespace {

void scan_gaps(const Word& prefix, std::set<Word>& observed, std::size_t& longest_zero_run) {
  std::optional<std::size_t> last;
  std::size_t run = 0;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (prefix[i] == 0) {
      longest_zero_run = std::max(longest_zero_run, ++run);
      continue;
    }
    run = 0;
    if (last) observed.insert(prefix.substr(*last, i - *last + 1));
    last = i;
  }
}

}  // namespace

GapInventoryReport verify_gap_inventory(const RenyiExpansion& d, std::size_t min_length, std::size_t budget) {
  if (budget == 0) budget = default_prefix_budget();
  GapInventoryReport out;
  out.expected = predicted_gap_inventory(d);
  std::size_t length = std::min(std::max<std::size_t>(min_length, 16), budget);
  scan_gaps(fixed_point_prefix(d, length), out.observed, out.longest_zero_run);
  while (2 * length <= budget) {
    length *= 2;
    std::set<Word> observed;
    std::size_t zero_run = 0;
    scan_gaps(fixed_point_prefix(d, length), observed, zero_run);
    const bool same = observed == out.observed && zero_run == out.longest_zero_run;
    out.observed = std::move(observed);
    out.longest_zero_run = zero_run;
    if (same) {
      out.stabilized = true;
      break;
    }
  }
  out.prefix_length_used = length;
  if (!out.stabilized) {
    throw Error(ErrorCode::BudgetExceeded, "gap inventory did not stabilize within " + std::to_string(budget) + " letters");
  }
  std::set_difference(out.expected.begin(), out.expected.end(), out.observed.begin(), out.observed.end(),
                      std::inserter(out.missing, out.missing.end()));
  std::set_difference(out.observed.begin(), out.observed.end(), out.expected.begin(), out.expected.end(),
                      std::inserter(out.extra, out.extra.end()));
  return out;
}

}  // namespace parryscope
