#pragma once

// Finite families of Renyi expansions for batch runs.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "parryscope/numeration.hpp"

namespace parryscope {

enum class TmFilter { Any, One, AtLeastTwo };
enum class HeadFilter { Any, Power, Fractional };

struct CorpusSpec {
  std::size_t m_min = 2;
  std::size_t m_max = 4;
  Letter digit_max = 2;
  TmFilter tm = TmFilter::Any;
  HeadFilter head = HeadFilter::Any;

  /// Comma-separated terms: "m=2..4" (or "m=3"), "digit<=2", "tm=1",
  /// "tm>=2", "head=power", "head=fractional". Throws Parse.
  static CorpusSpec parse(std::string_view text);
  std::string str() const;
};

struct Corpus {
  /// Valid expansions in enumeration order: by m, then lexicographically.
  std::vector<RenyiExpansion> members;
  /// Candidates t1..tm with t1, tm >= 1 that failed the Parry condition.
  std::size_t rejected_parry = 0;
  /// Valid candidates dropped by the tm / head filters.
  std::size_t filtered = 0;
};

Corpus enumerate_corpus(const CorpusSpec& spec);

}  // namespace parryscope
