#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "parryscope/numeration.hpp"

using namespace parryscope;
using oracle::w;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Parse;
}

// Admissible strings of length <= max_len without leading zero, radix order,
// by filtering every digit string through the naive suffix test.
std::vector<std::string> enumerate_admissible(const std::string& d, std::size_t max_len, int max_digit) {
  std::vector<std::string> out{""};
  for (std::size_t n = 1; n <= max_len; ++n) {
    oracle::for_each_word(n, static_cast<std::size_t>(max_digit) + 1, [&](const Word& x) {
      std::string s = x.str();
      if (s[0] != '0' && oracle::naive_admissible(s, d)) out.push_back(s);
    });
  }
  return out;
}

}  // namespace

TEST_CASE("validate_renyi") {
  CHECK(RenyiExpansion::parse("11").m() == 2);
  CHECK(RenyiExpansion::parse("2121").m() == 4);
  CHECK(RenyiExpansion::parse("21211").m() == 5);
  CHECK(RenyiExpansion::parse("22").m() == 2);
  CHECK(RenyiExpansion::parse("2").m() == 1);

  CHECK(code_of([] { RenyiExpansion::parse("12"); }) == ErrorCode::ParryViolation);
  try {
    RenyiExpansion::parse("12");
  } catch (const Error& e) {
    CHECK(e.index() == std::optional<std::size_t>{2});
  }
  CHECK(code_of([] { RenyiExpansion::parse(""); }) == ErrorCode::EmptyWord);
  CHECK(code_of([] { RenyiExpansion::parse("210"); }) == ErrorCode::TrailingZero);
  CHECK(code_of([] { RenyiExpansion::parse("1"); }) == ErrorCode::BaseNotAboveOne);
  CHECK(code_of([] { RenyiExpansion::parse("0111"); }) == ErrorCode::ParryViolation);
  CHECK(code_of([] { RenyiExpansion::parse("2122"); }) == ErrorCode::ParryViolation);
}

TEST_CASE("validate_renyi agrees with the padded-suffix oracle") {
  for (std::size_t m = 1; m <= 5; ++m) {
    oracle::for_each_word(m, 4, [](const Word& x) {
      const std::string s = x.str();
      bool expect = s.front() != '0' && s.back() != '0' && s != "1";
      for (std::size_t i = 1; i < s.size() && expect; ++i) {
        expect = s.substr(i) + std::string(i, '0') < s;
      }
      bool got = true;
      try {
        RenyiExpansion::validate(x);
      } catch (const Error&) {
        got = false;
      }
      CHECK_MESSAGE(got == expect, s);
    });
  }
}

TEST_CASE("is_admissible, golden ratio") {
  const auto d = RenyiExpansion::parse("11");
  CHECK(is_admissible(d, w("101")));
  CHECK_FALSE(is_admissible(d, w("110")));
  CHECK(is_admissible(d, Word{}));
  CHECK(code_of([&] { is_admissible(d, w("102")); }) == ErrorCode::DigitRange);
}

TEST_CASE("quasi-greedy expansion") {
  CHECK(quasi_greedy(RenyiExpansion::parse("11")).period == w("10"));
  CHECK(quasi_greedy(RenyiExpansion::parse("2121")).period == w("2120"));
  CHECK(quasi_greedy(RenyiExpansion::parse("22")).period == w("21"));
}

TEST_CASE("quasi-greedy period sums to one and its prefixes are admissible") {
  for (const char* text : {"11", "2121", "22", "201", "1101", "3213", "21211"}) {
    const auto d = RenyiExpansion::parse(text);
    const QuasiGreedy qg = quasi_greedy(d);
    // sum p_i beta^(m-i) = beta^m - 1  <=>  0.(p)^omega = 1
    ZBeta lhs = value_of(d, qg.period);
    ZBeta rhs = ZBeta::beta_power(d.field(), d.m()) - zb_integer(d, 1);
    CHECK(lhs.value_equals(rhs));
    for (std::size_t n = 1; n <= 4 * d.m(); ++n) CHECK(is_admissible(d, qg.prefix(n)));
  }
}

TEST_CASE("parry_polynomial") {
  CHECK(parry_polynomial(RenyiExpansion::parse("11")) == std::vector<long>{-1, -1, 1});
  CHECK(parry_polynomial(RenyiExpansion::parse("2")) == std::vector<long>{-2, 1});
  CHECK(parry_polynomial(RenyiExpansion::parse("2121")) == std::vector<long>{-1, -2, -1, -2, 1});
  CHECK(parry_polynomial_str(RenyiExpansion::parse("11")) == "x^2 - x - 1");
}

TEST_CASE("T-orbit of 1") {
  const auto golden = RenyiExpansion::parse("11");
  CHECK(t_orbit(golden, 1).coords() == std::vector<mpz_class>{-1, 1});
  CHECK(t_orbit(golden, 0).coords() == std::vector<mpz_class>{1, 0});
  CHECK(code_of([&] { t_orbit(golden, 3); }) == ErrorCode::IndexRange);
  for (const char* text : {"11", "2121", "22", "201", "1101", "3213", "21211", "2"}) {
    const auto d = RenyiExpansion::parse(text);
    CHECK(t_orbit(d, d.m()).sign() == Sign::Zero);
    for (std::size_t i = 1; i < d.m(); ++i) {
      const ZBeta x = t_orbit(d, i);
      CHECK(x.sign() == Sign::Positive);
      CHECK((zb_integer(d, 1) - x).sign() == Sign::Positive);
      for (std::size_t k = 0; k < i; ++k) CHECK_FALSE(x.value_equals(t_orbit(d, k)));
    }
  }
}

TEST_CASE("value_of") {
  const auto golden = RenyiExpansion::parse("11");
  const ZBeta b = zb_beta(golden);
  CHECK(value_of(golden, w("101")).value_equals(b * b + zb_integer(golden, 1)));
  CHECK(value_of(golden, Word{}).coords_zero());
  const auto d = RenyiExpansion::parse("2121");
  const ZBeta bd = zb_beta(d);
  CHECK(value_of(d, w("121")).coords() == (bd * bd + zb_integer(d, 2) * bd + zb_integer(d, 1)).coords());
  CHECK(code_of([&] { value_of(golden, BetaExpansion{w("1"), w("01")}); }) == ErrorCode::NonIntegerExpansion);
}

TEST_CASE("greedy expansion of integers, golden ratio") {
  const auto d = RenyiExpansion::parse("11");
  CHECK(greedy_expand_integer(d, 0).str() == "0");
  CHECK(greedy_expand_integer(d, 1).str() == "1");
  CHECK(greedy_expand_integer(d, 2).str() == "10.01");
  CHECK(greedy_expand_integer(d, 3).str() == "100.01");
  // beta + beta^-2 = 2  <=>  beta^3 + 1 = 2 beta^2
  const ZBeta b = zb_beta(d);
  CHECK((b * b * b + zb_integer(d, 1)).value_equals(zb_integer(d, 2) * b * b));
  // beta^2 + beta^-2 = 3  <=>  beta^4 + 1 = 3 beta^2
  CHECK((b * b * b * b + zb_integer(d, 1)).value_equals(zb_integer(d, 3) * b * b));

  try {
    greedy_expand_integer(d, 2, 1);
    FAIL("expected budget error");
  } catch (const FractionalBudgetExceeded& e) {
    CHECK(e.code() == ErrorCode::FractionalBudgetExceeded);
    CHECK(e.partial().str() == "10.0");
  }
}

TEST_CASE("greedy expansions are admissible and evaluate back") {
  for (const char* text : {"11", "2121", "22", "201"}) {
    const auto d = RenyiExpansion::parse(text);
    for (std::uint64_t n = 0; n <= 40; ++n) {
      BetaExpansion e;
      try {
        e = greedy_expand_integer(d, n, 64);
      } catch (const FractionalBudgetExceeded&) {
        continue;
      }
      const Word all = e.integer_digits + e.fractional_digits;
      CHECK(is_admissible(d, all));
      // n * beta^f = digits read as an integer, f = #fractional digits
      const ZBeta scaled = zb_integer(d, static_cast<long>(n)) * ZBeta::beta_power(d.field(), e.fractional_digits.size());
      CHECK(value_of(d, all).value_equals(scaled));
    }
  }
}

TEST_CASE("next_admissible walks the beta-integers, golden") {
  const auto d = RenyiExpansion::parse("11");
  std::vector<std::string> seen;
  Word cur;
  for (int i = 0; i < 6; ++i) {
    seen.push_back(cur.str());
    cur = next_admissible(d, cur);
  }
  CHECK(seen == std::vector<std::string>{"", "1", "10", "100", "101", "1000"});
  CHECK(code_of([&] { next_admissible(d, w("11")); }) == ErrorCode::InadmissibleInput);
  CHECK(code_of([&] { next_admissible(d, w("01")); }) == ErrorCode::InadmissibleInput);
}

TEST_CASE("next_admissible matches the filtered enumeration") {
  for (const char* text : {"11", "2121", "22", "201", "1101", "3213"}) {
    const auto d = RenyiExpansion::parse(text);
    const auto expected = enumerate_admissible(text, 5, d.max_digit());
    Word cur;
    for (const auto& s : expected) {
      CHECK(cur.str() == s);
      cur = next_admissible(d, cur);
    }
    CHECK(cur.size() == 6);
  }
}

TEST_CASE("radix order equals value order; distinct strings have distinct values") {
  for (const char* text : {"11", "2121", "1101", "22"}) {
    const auto d = RenyiExpansion::parse(text);
    std::vector<Word> strings;
    for (Word cur; cur.size() <= 4; cur = next_admissible(d, cur)) strings.push_back(cur);
    std::vector<ZBeta> values;
    for (const Word& s : strings) values.push_back(value_of(d, s));
    for (std::size_t i = 0; i < strings.size(); ++i) {
      for (std::size_t j = 0; j < strings.size(); ++j) {
        CHECK(values[i].compare(values[j]) == radix_compare(strings[i], strings[j]));
      }
    }
  }
}

TEST_CASE("gap letters") {
  const auto golden = RenyiExpansion::parse("11");
  CHECK(succ_gap_letter(golden, w("1")) == 1);
  CHECK(succ_gap_letter(golden, Word{}) == 0);
  CHECK(succ_match_length(golden, w("10")) == 2);
  CHECK(pred_gap_letter(golden, w("10")) == 1);
  CHECK(code_of([&] { pred_gap_letter(golden, Word{}); }) == ErrorCode::ZeroHasNoPredecessor);

  const auto d = RenyiExpansion::parse("2121");
  CHECK(succ_gap_letter(d, w("121")) == 2);
  CHECK(pred_gap_letter(d, w("2000")) == 3);
  CHECK(pred_gap_letter(d, w("21100")) == 2);
}

TEST_CASE("gap letters code the exact distances to neighbours") {
  for (const char* text : {"11", "2121", "22", "201", "1101", "3213", "21211"}) {
    const auto d = RenyiExpansion::parse(text);
    Word prev;
    Word cur = next_admissible(d, prev);
    for (int i = 0; i < 300; ++i) {
      const ZBeta gap = value_of(d, cur) - value_of(d, prev);
      CHECK(gap.value_equals(t_orbit(d, pred_gap_letter(d, cur))));
      CHECK(gap.value_equals(t_orbit(d, succ_gap_letter(d, prev))));
      CHECK(previous_admissible(d, cur) == prev);
      prev = cur;
      cur = next_admissible(d, cur);
    }
  }
}

TEST_CASE("coding of segments") {
  const auto golden = RenyiExpansion::parse("11");
  CHECK(coding_of_segment(golden, Word{}, 5) == w("01001"));
  CHECK(coding_of_segment(golden, w("101"), 0).empty());
  const auto d = RenyiExpansion::parse("2121");
  CHECK(radix_index(d, w("121")) == 15);
  CHECK(advance_admissible(d, Word{}, 15) == w("121"));
}
