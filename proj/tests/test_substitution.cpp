#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "parryscope/numeration.hpp"
#include "parryscope/substitution.hpp"

using namespace parryscope;
using oracle::w;

TEST_CASE("canonical substitutions") {
  auto s = Substitution::build(RenyiExpansion::parse("11"));
  CHECK(s.images() == std::vector<Word>{w("01"), w("0")});
  s = Substitution::build(RenyiExpansion::parse("2121"));
  CHECK(s.images() == std::vector<Word>{w("001"), w("02"), w("003"), w("0")});
  s = Substitution::build(RenyiExpansion::parse("22"));
  CHECK(s.images() == std::vector<Word>{w("001"), w("00")});
  CHECK_THROWS_AS(Substitution::build(RenyiExpansion::parse("2")), Error);
}

TEST_CASE("apply") {
  const auto golden = Substitution::build(RenyiExpansion::parse("11"));
  CHECK(golden.apply(w("01")) == w("010"));
  CHECK(golden.apply(Word{}).empty());
  const auto s = Substitution::build(RenyiExpansion::parse("2121"));
  CHECK(s.apply(s.apply(w("0"))) == w("00100102"));
  CHECK_THROWS_AS(golden.apply(w("2")), Error);
}

TEST_CASE("morphism law on random splits") {
  std::mt19937 rng(1);
  for (const char* text : {"11", "2121", "201", "3213"}) {
    const auto d = RenyiExpansion::parse(text);
    const auto s = Substitution::build(d);
    for (int it = 0; it < 100; ++it) {
      std::vector<Letter> u(rng() % 10), v(rng() % 10);
      for (auto& a : u) a = static_cast<Letter>(rng() % d.m());
      for (auto& a : v) a = static_cast<Letter>(rng() % d.m());
      CHECK(s.apply(Word(u) + Word(v)) == s.apply(Word(u)) + s.apply(Word(v)));
    }
  }
}

TEST_CASE("fixed point prefixes") {
  CHECK(fixed_point_prefix(RenyiExpansion::parse("11"), 5) == w("01001"));
  CHECK(fixed_point_prefix(RenyiExpansion::parse("11"), 0).empty());
  CHECK(fixed_point_prefix(RenyiExpansion::parse("2121"), 8) == w("00100102"));
}

TEST_CASE("fixed point law, stream equivalence and the last letter rule") {
  for (const char* text : {"11", "2121", "22", "201", "1101", "21211", "3213"}) {
    const auto d = RenyiExpansion::parse(text);
    const auto s = Substitution::build(d);
    const Word u = fixed_point_prefix(d, 5000);
    CHECK(s.apply(u).prefix(u.size()) == u);
    FixedPointStream stream(d);
    bool same = true;
    for (std::size_t i = 0; i < u.size(); ++i) same = same && stream.next() == u[i];
    CHECK(same);
    CHECK(stream.position() == u.size());
    const Letter last = static_cast<Letter>(d.m() - 1);
    for (std::size_t i = 0; i + 1 < u.size(); ++i) {
      if (u[i] == last) CHECK(u[i + 1] == 0);
    }
  }
}

TEST_CASE("fixed point equals the gap coding of the beta-integers") {
  for (const char* text : {"11", "2121", "22", "201", "1101", "21211", "3213"}) {
    const auto d = RenyiExpansion::parse(text);
    const std::size_t n = 10000;
    CHECK(fixed_point_prefix(d, n) == coding_of_segment(d, Word{}, n));
  }
}

TEST_CASE("incidence matrix and primitivity") {
  const auto golden = Substitution::build(RenyiExpansion::parse("11"));
  CHECK(golden.incidence_matrix().rows() == std::vector<std::vector<std::uint64_t>>{{1, 1}, {1, 0}});
  CHECK(golden.is_primitive());
  const auto s = Substitution::build(RenyiExpansion::parse("2121"));
  REQUIRE(s.primitivity_exponent().has_value());
  CHECK(*s.primitivity_exponent() <= 8);
  // Column sums are image lengths.
  const auto mat = s.incidence_matrix();
  for (std::size_t b = 0; b < s.alphabet_size(); ++b) {
    std::uint64_t sum = 0;
    for (std::size_t a = 0; a < s.alphabet_size(); ++a) sum += mat(a, b);
    CHECK(sum == s.images()[b].size());
  }
}

TEST_CASE("abelianization of phi^n(0) is M^n e0") {
  for (const char* text : {"11", "2121", "201", "3213"}) {
    const auto d = RenyiExpansion::parse(text);
    const auto s = Substitution::build(d);
    const auto mat = s.incidence_matrix();
    std::vector<std::uint64_t> counts(d.m(), 0);
    counts[0] = 1;
    Word x{0};
    for (int n = 1; n <= 8; ++n) {
      x = s.apply(x);
      counts = mat.apply(counts);
      std::vector<std::uint64_t> observed(d.m(), 0);
      for (Letter a : x) ++observed[a];
      CHECK(observed == counts);
    }
  }
}

TEST_CASE("j indices") {
  CHECK(j_indices(RenyiExpansion::parse("2121")) == std::map<std::size_t, std::size_t>{{2, 1}, {3, 1}, {4, 1}});
  CHECK(j_indices(RenyiExpansion::parse("201")) == std::map<std::size_t, std::size_t>{{2, 1}, {3, 2}});
  CHECK(j_indices(RenyiExpansion::parse("11")) == std::map<std::size_t, std::size_t>{{2, 1}});
}
