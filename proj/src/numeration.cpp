#include "parryscope/numeration.hpp"

#include <algorithm>
#include <sstream>

namespace parryscope {

RenyiExpansion RenyiExpansion::validate(const Word& candidate) {
  if (candidate.empty()) throw Error(ErrorCode::EmptyWord, "Renyi expansion must be non-empty");
  if (candidate.back() == 0) throw Error(ErrorCode::TrailingZero, "Renyi expansion " + candidate.str() + " ends with 0");
  const std::size_t m = candidate.size();
  if (m == 1 && candidate.front() == 1) {
    throw Error(ErrorCode::BaseNotAboveOne, "d = 1 defines beta = 1");
  }
  for (std::size_t i = 2; i <= m; ++i) {
    Word padded = candidate.suffix(m - i + 1) + Word::repeat(0, i - 1);
    if (lex_compare(padded, candidate) != std::strong_ordering::less) {
      throw Error(ErrorCode::ParryViolation,
                  "Parry condition fails at suffix index " + std::to_string(i) + " of " + candidate.str(), i);
    }
  }

  std::vector<int> digits(candidate.begin(), candidate.end());
  auto field = std::make_shared<const BetaField>(std::move(digits));
  RenyiExpansion d(candidate, std::move(field));

  // The gap lengths T^i(1), i < m, must be pairwise distinct for the
  // letter coding to be well defined.
  std::vector<ZBeta> orbit;
  for (std::size_t i = 0; i < m; ++i) orbit.push_back(t_orbit(d, i));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (orbit[i].value_equals(orbit[j])) {
        throw Error(ErrorCode::VerificationFailed,
                    "T^" + std::to_string(i) + "(1) = T^" + std::to_string(j) + "(1) for " + candidate.str());
      }
    }
  }
  return d;
}

Letter RenyiExpansion::max_digit() const noexcept {
  // beta lies in (t1, t1 + 1) unless d = t1 is an integer base.
  return m() == 1 ? static_cast<Letter>(t(1) - 1) : t(1);
}

std::string BetaExpansion::str() const {
  std::string out = integer_digits.empty() ? "0" : integer_digits.str();
  if (!fractional_digits.empty()) {
    const bool commas = out.find(',') != std::string::npos || fractional_digits.str().find(',') != std::string::npos;
    out += commas ? ";" : ".";
    out += fractional_digits.str();
  }
  return out;
}

Word QuasiGreedy::prefix(std::size_t n) const {
  std::vector<Letter> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return Word(std::move(out));
}

QuasiGreedy quasi_greedy(const RenyiExpansion& d) {
  std::vector<Letter> period(d.digits().begin(), d.digits().end());
  period.back() = static_cast<Letter>(period.back() - 1);
  return QuasiGreedy{Word(std::move(period))};
}

std::vector<long> parry_polynomial(const RenyiExpansion& d) {
  const std::size_t m = d.m();
  std::vector<long> out(m + 1, 0);
  out[m] = 1;
  for (std::size_t i = 1; i <= m; ++i) out[m - i] = -static_cast<long>(d.t(i));
  return out;
}

std::string parry_polynomial_str(const RenyiExpansion& d) {
  return d.field()->parry_polynomial().str();
}

bool is_admissible(const RenyiExpansion& d, LetterSpan s) {
  const Letter top = d.max_digit();
  for (Letter a : s) {
    if (a > top) {
      throw Error(ErrorCode::DigitRange,
                  "digit " + std::to_string(a) + " outside 0.." + std::to_string(top) + " for d = " + d.str());
    }
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (lex_compare(s.subspan(i), d.digits()) != std::strong_ordering::less) return false;
  }
  return true;
}

void require_admissible(const RenyiExpansion& d, const Word& s) {
  if (!is_admissible(d, s)) {
    throw Error(ErrorCode::InadmissibleInput, "\"" + s.str() + "\" is not admissible for d = " + d.str());
  }
  if (!s.empty() && s.front() == 0) {
    throw Error(ErrorCode::InadmissibleInput, "\"" + s.str() + "\" has a leading zero");
  }
}

ZBeta zb_zero(const RenyiExpansion& d) { return ZBeta::zero(d.field()); }
ZBeta zb_integer(const RenyiExpansion& d, long value) { return ZBeta::integer(d.field(), value); }
ZBeta zb_beta(const RenyiExpansion& d) { return ZBeta::beta_power(d.field(), 1); }

ZBeta zb_from_coords(const RenyiExpansion& d, std::vector<long> coords) {
  std::vector<mpz_class> big(coords.begin(), coords.end());
  return ZBeta(d.field(), std::move(big));
}

ZBeta t_orbit(const RenyiExpansion& d, std::size_t i) {
  if (i > d.m()) {
    throw Error(ErrorCode::IndexRange, "T^i(1) requested for i = " + std::to_string(i) + " > m = " + std::to_string(d.m()));
  }
  ZBeta x = zb_integer(d, 1);
  for (std::size_t k = 1; k <= i; ++k) x = x.times_beta() - zb_integer(d, d.t(k));
  return x;
}

ZBeta value_of(const RenyiExpansion& d, LetterSpan integer_digits) {
  // Horner in Z[beta].
  ZBeta acc = zb_zero(d);
  for (Letter a : integer_digits) acc = acc.times_beta() + zb_integer(d, a);
  return acc;
}

ZBeta value_of(const RenyiExpansion& d, const BetaExpansion& e) {
  if (!e.fractional_digits.empty()) {
    throw Error(ErrorCode::NonIntegerExpansion, "expansion " + e.str() + " has fractional digits");
  }
  return value_of(d, e.integer_digits);
}

namespace {

// Largest digit x <= top with x * unit <= remainder.
Letter greedy_digit(const RenyiExpansion& d, const ZBeta& remainder, const ZBeta& unit) {
  Letter x = 0;
  ZBeta taken = unit;
  while (x < d.max_digit() && taken.compare(remainder) != std::strong_ordering::greater) {
    ++x;
    taken += unit;
  }
  return x;
}

}  // namespace

BetaExpansion greedy_expand_integer(const RenyiExpansion& d, std::uint64_t n, std::size_t fractional_budget) {
  if (fractional_budget == 0) fractional_budget = 4 * d.m();
  const ZBeta target = ZBeta::integer(d.field(), mpz_class(std::to_string(n)));
  BetaExpansion out;
  if (n == 0) return out;

  std::vector<ZBeta> powers{zb_integer(d, 1)};
  while (powers.back().times_beta().compare(target) != std::strong_ordering::greater) {
    powers.push_back(powers.back().times_beta());
  }
  ZBeta remainder = target;
  std::vector<Letter> integer_digits;
  for (std::size_t i = powers.size(); i-- > 0;) {
    const Letter x = greedy_digit(d, remainder, powers[i]);
    integer_digits.push_back(x);
    for (Letter k = 0; k < x; ++k) remainder -= powers[i];
  }
  out.integer_digits = Word(std::move(integer_digits));

  // Fractional digits: track beta^j * remainder so everything stays in Z[beta].
  const ZBeta one = zb_integer(d, 1);
  std::vector<Letter> fractional;
  while (remainder.sign() != Sign::Zero) {
    if (fractional.size() == fractional_budget) {
      out.fractional_digits = Word(std::move(fractional));
      throw FractionalBudgetExceeded(std::move(out), fractional_budget);
    }
    remainder = remainder.times_beta();
    const Letter x = greedy_digit(d, remainder, one);
    fractional.push_back(x);
    remainder -= zb_integer(d, x);
  }
  out.fractional_digits = Word(std::move(fractional));
  return out;
}

Word next_admissible(const RenyiExpansion& d, const Word& s) {
  require_admissible(d, s);
  std::vector<Letter> buf(s.begin(), s.end());
  // Raising a digit makes every suffix through it larger, so only +1 needs
  // testing; zeros are the smallest admissible completion.
  for (std::size_t i = buf.size(); i-- > 0;) {
    if (buf[i] >= d.max_digit()) continue;
    std::vector<Letter> candidate(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(i));
    candidate.push_back(static_cast<Letter>(buf[i] + 1));
    candidate.resize(buf.size(), 0);
    if (is_admissible(d, candidate)) return Word(std::move(candidate));
  }
  std::vector<Letter> rolled(buf.size() + 1, 0);
  rolled[0] = 1;
  return Word(std::move(rolled));
}

Word previous_admissible(const RenyiExpansion& d, const Word& s) {
  require_admissible(d, s);
  if (s.empty()) throw Error(ErrorCode::ZeroHasNoPredecessor, "0 has no predecessor");
  std::size_t k = 0;
  while (s[s.size() - 1 - k] == 0) ++k;
  std::vector<Letter> out(s.begin(), s.end() - static_cast<std::ptrdiff_t>(k));
  out.back() = static_cast<Letter>(out.back() - 1);
  const Word tail = quasi_greedy(d).prefix(k);
  out.insert(out.end(), tail.begin(), tail.end());
  const auto first = std::find_if(out.begin(), out.end(), [](Letter a) { return a != 0; });
  return Word(std::vector<Letter>(first, out.end()));
}

std::size_t succ_match_length(const RenyiExpansion& d, const Word& y) {
  require_admissible(d, y);
  const QuasiGreedy qg = quasi_greedy(d);
  for (std::size_t j = y.size(); j > 0; --j) {
    bool match = true;
    for (std::size_t i = 0; i < j && match; ++i) match = y[y.size() - j + i] == qg.at(i);
    if (match) return j;
  }
  return 0;
}

Letter succ_gap_letter(const RenyiExpansion& d, const Word& y) {
  return static_cast<Letter>(succ_match_length(d, y) % d.m());
}

Letter pred_gap_letter(const RenyiExpansion& d, const Word& y) {
  require_admissible(d, y);
  if (y.empty()) throw Error(ErrorCode::ZeroHasNoPredecessor, "0 has no predecessor");
  std::size_t k = 0;
  while (y[y.size() - 1 - k] == 0) ++k;
  return static_cast<Letter>(k % d.m());
}

Word coding_of_segment(const RenyiExpansion& d, const Word& start, std::size_t count) {
  std::vector<Letter> out;
  out.reserve(count);
  Word cur = start;
  require_admissible(d, cur);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(succ_gap_letter(d, cur));
    cur = next_admissible(d, cur);
  }
  return Word(std::move(out));
}

std::size_t radix_index(const RenyiExpansion& d, const Word& s) {
  require_admissible(d, s);
  std::size_t index = 0;
  for (Word cur; cur != s; cur = next_admissible(d, cur)) ++index;
  return index;
}

Word advance_admissible(const RenyiExpansion& d, Word start, std::size_t steps) {
  for (std::size_t i = 0; i < steps; ++i) start = next_admissible(d, start);
  return start;
}

}  // namespace parryscope
