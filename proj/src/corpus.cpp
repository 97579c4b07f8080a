#include "parryscope/corpus.hpp"

#include <charconv>

namespace parryscope {

namespace {

std::size_t parse_number(std::string_view text, std::string_view term) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::Parse, "bad number in corpus term '" + std::string(term) + "'");
  }
  return value;
}

bool consume(std::string_view& text, std::string_view prefix) {
  if (text.substr(0, prefix.size()) != prefix) return false;
  text.remove_prefix(prefix.size());
  return true;
}

// Odometer step over t1 in 1..D, t2..t(m-1) in 0..D, tm in 1..D.
bool advance(std::vector<Letter>& digits, Letter max) {
  const std::size_t m = digits.size();
  for (std::size_t i = m; i-- > 0;) {
    if (digits[i] < max) {
      ++digits[i];
      return true;
    }
    digits[i] = (i == 0 || i == m - 1) ? 1 : 0;
  }
  return false;
}

}  // namespace

CorpusSpec CorpusSpec::parse(std::string_view text) {
  CorpusSpec spec;
  while (!text.empty()) {
    const std::size_t comma = text.find(',');
    std::string_view term = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    const std::string_view whole = term;
    if (consume(term, "m=")) {
      const std::size_t dots = term.find("..");
      if (dots == std::string_view::npos) {
        spec.m_min = spec.m_max = parse_number(term, whole);
      } else {
        spec.m_min = parse_number(term.substr(0, dots), whole);
        spec.m_max = parse_number(term.substr(dots + 2), whole);
      }
    } else if (consume(term, "digit<=")) {
      const std::size_t v = parse_number(term, whole);
      if (v == 0 || v > 9) throw Error(ErrorCode::Parse, "digit bound must be in 1..9");
      spec.digit_max = static_cast<Letter>(v);
    } else if (whole == "tm=1") {
      spec.tm = TmFilter::One;
    } else if (whole == "tm>=2") {
      spec.tm = TmFilter::AtLeastTwo;
    } else if (whole == "head=power") {
      spec.head = HeadFilter::Power;
    } else if (whole == "head=fractional") {
      spec.head = HeadFilter::Fractional;
    } else {
      throw Error(ErrorCode::Parse, "unknown corpus term '" + std::string(whole) + "'");
    }
  }
  if (spec.m_min == 0 || spec.m_min > spec.m_max || spec.m_max > 16) {
    throw Error(ErrorCode::Parse, "m range must satisfy 1 <= min <= max <= 16");
  }
  return spec;
}

std::string CorpusSpec::str() const {
  std::string out = "m=" + std::to_string(m_min) + ".." + std::to_string(m_max) + ",digit<=" + std::to_string(digit_max);
  if (tm == TmFilter::One) out += ",tm=1";
  if (tm == TmFilter::AtLeastTwo) out += ",tm>=2";
  if (head == HeadFilter::Power) out += ",head=power";
  if (head == HeadFilter::Fractional) out += ",head=fractional";
  return out;
}

Corpus enumerate_corpus(const CorpusSpec& spec) {
  Corpus out;
  for (std::size_t m = spec.m_min; m <= spec.m_max; ++m) {
    std::vector<Letter> digits(m, 0);
    digits.front() = digits.back() = 1;
    while (true) {
      const Word candidate(digits);
      if (!(m == 1 && digits.front() == 1)) {
        try {
          RenyiExpansion d = RenyiExpansion::validate(candidate);
          bool keep = true;
          if (spec.tm == TmFilter::One) keep = d.t(m) == 1;
          if (spec.tm == TmFilter::AtLeastTwo) keep = d.t(m) >= 2;
          if (keep && spec.head != HeadFilter::Any) {
            const bool power = m >= 2 && satisfies_power_condition(candidate.prefix(m - 1));
            keep = (spec.head == HeadFilter::Power) == power;
          }
          if (keep) {
            out.members.push_back(std::move(d));
          } else {
            ++out.filtered;
          }
        } catch (const Error& e) {
          if (e.code() != ErrorCode::ParryViolation) throw;
          ++out.rejected_parry;
        }
      }
      if (!advance(digits, spec.digit_max)) break;
    }
  }
  return out;
}

}  // namespace parryscope
