#include "parryscope/witness.hpp"

#include <algorithm>

namespace parryscope {

Word digitwise_subtract(const Word& minuend, const Word& subtrahend) {
  if (subtrahend.size() > minuend.size()) {
    throw Error(ErrorCode::DigitwiseSubtractionFailed, subtrahend.str() + " is longer than " + minuend.str());
  }
  std::vector<Letter> out(minuend.begin(), minuend.end());
  const std::size_t offset = minuend.size() - subtrahend.size();
  for (std::size_t i = 0; i < subtrahend.size(); ++i) {
    if (out[offset + i] < subtrahend[i]) {
      throw Error(ErrorCode::DigitwiseSubtractionFailed,
                  "digit-wise subtraction " + minuend.str() + " - " + subtrahend.str() + " borrows");
    }
    out[offset + i] = static_cast<Letter>(out[offset + i] - subtrahend[i]);
  }
  const auto first = std::find_if(out.begin(), out.end(), [](Letter a) { return a != 0; });
  return Word(std::vector<Letter>(first, out.end()));
}

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::VerificationFailed, what); }

}  // namespace

WitnessBundle construct_witness(const RenyiExpansion& d) {
  const Classification cls = classify_affine(d);
  if (cls.affine) throw Error(ErrorCode::NotApplicable, "d = " + d.str() + " has affine complexity");
  if (cls.reason == NonAffineReason::TmNotOne) {
    throw Error(ErrorCode::NotApplicable, "d = " + d.str() + " has tm != 1 (TmNotOne)");
  }

  const Word head = d.digits().prefix(d.m() - 1);
  WitnessBundle w;
  w.p = *cls.border;
  const std::size_t s = w.p.size();

  // head = p^r p' q p
  const Word body = head.prefix(head.size() - s);
  std::size_t pos = 0;
  while (pos + s <= body.size() && body.substr(pos, s) == w.p) {
    ++w.r;
    pos += s;
  }
  const Word rest = body.substr(pos, body.size() - pos);
  while (w.j < rest.size() && w.j < s && rest[w.j] == w.p[w.j]) ++w.j;
  w.p_prime = w.p.prefix(w.j);
  w.q = rest.substr(w.j, rest.size() - w.j);
  if (w.r == 0 || w.j >= s || w.q.empty() || w.q.front() >= w.p[w.j]) {
    fail("cannot decompose " + head.str() + " as p^r p' q p with p = " + w.p.str());
  }

  const Word left = w.p + w.p_prime + w.q;
  const Word right = w.p_prime + w.q + w.p;
  const std::size_t c_len = common_suffix_length(left, right);
  if (c_len >= left.size()) fail("p p' q equals p' q p for d = " + d.str());
  w.c = left.suffix(c_len);
  w.h1 = left[left.size() - c_len - 1];
  w.h2 = right[right.size() - c_len - 1];
  w.h = std::min(w.h1, w.h2);
  if (w.c.size() + 1 > s + w.q.size()) fail("common suffix c too long for d = " + d.str());
  w.a = w.r * s + w.j + 1;

  const Word p_r = w.p.power(w.r);
  const Word lead = p_r + w.p_prime + w.q.front();
  const Word hc = Word{w.h} + w.c;
  const Word zeros = Word::repeat(0, w.a);
  // h may be 0; z is kept as a number, without leading zeros.
  w.z = digitwise_subtract(hc + lead, Word{});
  w.x1 = digitwise_subtract(p_r + w.p_prime + w.q + zeros, hc + zeros);
  w.x2 = digitwise_subtract(p_r + w.p_prime + w.q + w.p + zeros, hc + zeros);

  for (const Word* x : {&w.z, &w.x1, &w.x2}) {
    if (!is_admissible(d, *x)) fail("constructed " + x->str() + " is not admissible for d = " + d.str());
  }
  return w;
}

namespace {

// Walks `span` successors from x alongside the same walk from 0, checking
// x + z' is the matching beta-integer at every step. Returns the coding
// and the endpoint, or nullopt if some x + z' is missed.
std::optional<std::pair<Word, Word>> shifted_coding(const RenyiExpansion& d, const Word& x, std::size_t span) {
  const ZBeta base = value_of(d, x);
  std::vector<Letter> letters;
  Word cur = x;
  Word from_zero;
  for (std::size_t k = 0; k <= span; ++k) {
    if (!(value_of(d, cur) - base).value_equals(value_of(d, from_zero))) return std::nullopt;
    if (k == span) break;
    letters.push_back(succ_gap_letter(d, cur));
    cur = next_admissible(d, cur);
    from_zero = next_admissible(d, from_zero);
  }
  return std::make_pair(Word(std::move(letters)), cur);
}

}  // namespace

WitnessVerification verify_witness(const RenyiExpansion& d, const WitnessBundle& w, bool throw_on_failure) {
  WitnessVerification v;
  v.span = radix_index(d, w.z);
  v.coding = coding_of_segment(d, Word{}, v.span);

  // (i)
  const auto s1 = shifted_coding(d, w.x1, v.span);
  const auto s2 = shifted_coding(d, w.x2, v.span);
  if (s1) std::tie(v.coding_x1, v.end_x1) = *s1;
  if (s2) std::tie(v.coding_x2, v.end_x2) = *s2;
  v.conditions[0] = s1 && s2 && v.coding_x1 == v.coding && v.coding_x2 == v.coding;

  // (ii)
  v.pred_letter_x1 = pred_gap_letter(d, w.x1);
  v.pred_letter_x2 = pred_gap_letter(d, w.x2);
  v.conditions[1] = v.pred_letter_x1 != v.pred_letter_x2;

  // (iii)
  if (s1 && s2) {
    v.succ_letter_end_x1 = succ_gap_letter(d, v.end_x1);
    v.succ_letter_end_x2 = succ_gap_letter(d, v.end_x2);
    v.conditions[2] = v.succ_letter_end_x1 == 0 && v.succ_letter_end_x2 == 0;
  }

  // (iv), with the bound |p^r p' q1| <= k < |h c p^r p' q1| <= m
  v.succ_match_z = succ_match_length(d, w.z);
  v.succ_letter_z = static_cast<Letter>(v.succ_match_z % d.m());
  const std::size_t low = w.a;
  const std::size_t high = 1 + w.c.size() + w.a;  // |h c p^r p' q1|
  v.conditions[3] = v.succ_letter_z != 0 && low <= v.succ_match_z && v.succ_match_z < high && high <= d.m();

  v.left_special = v.coding + Letter{0};
  if (throw_on_failure) {
    for (std::size_t i = 0; i < 4; ++i) {
      if (!v.conditions[i]) {
        throw Error(ErrorCode::VerificationFailed,
                    "witness condition " + std::to_string(i + 1) + " fails for d = " + d.str(), i + 1);
      }
    }
  }
  return v;
}

}  // namespace parryscope
