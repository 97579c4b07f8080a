#include "parryscope/report.hpp"

#include <limits>

namespace parryscope {

namespace {

Json words(const std::vector<Word>& ws) {
  Json out = Json::array();
  for (const Word& w : ws) out.push_back(w.str());
  return out;
}

Json words(const std::set<Word>& ws) {
  Json out = Json::array();
  for (const Word& w : ws) out.push_back(w.str());
  return out;
}

Json letters(const std::vector<Letter>& ls) {
  Json out = Json::array();
  for (Letter a : ls) out.push_back(static_cast<int>(a));
  return out;
}

Json extended(const std::vector<ExtendedFactor>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back({{"word", f.word.str()}, {"extensions", letters(f.extensions)}});
  return out;
}

}  // namespace

Json to_json(const ZBeta& x) {
  Json coords = Json::array();
  for (const mpz_class& c : x.coords()) {
    if (c.fits_slong_p()) {
      coords.push_back(c.get_si());
    } else {
      coords.push_back(c.get_str());
    }
  }
  return {{"coords", coords}};
}

ZBeta zbeta_from_json(const RenyiExpansion& d, const Json& j) {
  if (!j.is_object() || !j.contains("coords") || !j["coords"].is_array()) {
    throw Error(ErrorCode::Parse, "expected {\"coords\": [...]}");
  }
  std::vector<mpz_class> coords;
  for (const auto& c : j["coords"]) {
    if (c.is_number_integer()) {
      coords.emplace_back(std::to_string(c.get<long long>()));
    } else if (c.is_string()) {
      coords.emplace_back(c.get<std::string>());
    } else {
      throw Error(ErrorCode::Parse, "coordinate is not an integer");
    }
  }
  if (coords.size() != d.m()) throw Error(ErrorCode::Parse, "expected " + std::to_string(d.m()) + " coordinates");
  return ZBeta(d.field(), std::move(coords));
}

Json to_json(const Substitution& s) {
  Json images = Json::object();
  for (std::size_t a = 0; a < s.alphabet_size(); ++a) images[std::to_string(a)] = s.images()[a].str();
  const auto exponent = s.primitivity_exponent();
  return {{"images", images},
          {"matrix", s.incidence_matrix().rows()},
          {"primitive", exponent.has_value()},
          {"primitivity_exponent", exponent ? Json(*exponent) : Json(nullptr)}};
}

Json to_json(const ComplexityProfile& p) {
  return {{"n_max", p.n_max},
          {"complexity", p.values},
          {"deltas", p.deltas},
          {"prefix_length", p.prefix_length_used},
          {"stabilized", p.stabilized}};
}

Json to_json(const SpecialFactorReport& r) {
  return {{"n", r.n},
          {"complexity", r.complexity},
          {"next_complexity", r.next_complexity},
          {"left_special", extended(r.left_special)},
          {"right_special", extended(r.right_special)},
          {"bispecial", words(r.bispecial)},
          {"maximal_left_special", words(r.maximal_left_special)},
          {"lext_sum", r.lext_sum},
          {"prefix_length", r.prefix_length_used}};
}

Json to_json(const Trident& t) {
  return {{"word", t.word.str()},
          {"rooted", static_cast<int>(t.rooted)},
          {"teeth", {static_cast<int>(t.tooth_y), static_cast<int>(t.tooth_z)}},
          {"left_extensions", {static_cast<int>(t.left_of_y), static_cast<int>(t.left_of_z)}}};
}

Json to_json(const Classification& c) {
  Json verdict;
  if (c.affine) {
    verdict = {{"kind", "Affine"}, {"slope", c.slope}, {"intercept", c.intercept}};
  } else {
    verdict = {{"kind", "NotAffine"},
               {"reason", c.reason == NonAffineReason::TmNotOne ? "TmNotOne" : "FractionalPower"}};
    if (c.border) verdict["p"] = c.border->str();
    if (c.evidence) verdict["evidence"] = c.evidence->str();
  }
  Json out = {{"verdict", verdict}};
  if (c.oracle) {
    const OracleCheck& o = *c.oracle;
    out["oracle"] = {{"n", o.n},
                     {"stabilized", o.stabilized},
                     {"affine", o.affine_by_enumeration},
                     {"first_excess", o.first_excess ? Json(*o.first_excess) : Json(nullptr)},
                     {"excess_bound", o.excess_bound ? Json(*o.excess_bound) : Json(nullptr)},
                     {"conclusive", o.conclusive},
                     {"agrees", o.agrees}};
  }
  return out;
}

Json to_json(const WitnessBundle& w) {
  return {{"p", w.p.str()},   {"r", w.r},       {"p_prime", w.p_prime.str()}, {"j", w.j},
          {"q", w.q.str()},   {"c", w.c.str()}, {"h1", static_cast<int>(w.h1)}, {"h2", static_cast<int>(w.h2)},
          {"h", static_cast<int>(w.h)}, {"A", w.a}, {"z", w.z.str()}, {"x1", w.x1.str()},
          {"x2", w.x2.str()}};
}

Json to_json(const WitnessVerification& v) {
  return {{"conditions", {{"i", v.conditions[0]}, {"ii", v.conditions[1]}, {"iii", v.conditions[2]}, {"iv", v.conditions[3]}}},
          {"span", v.span},
          {"coding", v.coding.str()},
          {"x1_plus_z", v.end_x1.str()},
          {"x2_plus_z", v.end_x2.str()},
          {"pred_letters", {static_cast<int>(v.pred_letter_x1), static_cast<int>(v.pred_letter_x2)}},
          {"succ_letters_after", {static_cast<int>(v.succ_letter_end_x1), static_cast<int>(v.succ_letter_end_x2)}},
          {"succ_match_z", v.succ_match_z},
          {"succ_letter_z", static_cast<int>(v.succ_letter_z)},
          {"left_special", v.left_special.str()}};
}

Json to_json(const GapInventoryReport& g) {
  return {{"observed", words(g.observed)},
          {"expected", words(g.expected)},
          {"missing", words(g.missing)},
          {"extra", words(g.extra)},
          {"longest_zero_run", g.longest_zero_run},
          {"prefix_length", g.prefix_length_used},
          {"ok", g.ok()}};
}

Json analysis_report(const RenyiExpansion& d, const Classification& c, const Json& witness, const Json& specials) {
  Json out;
  out["d"] = d.str();
  out["verdict"] = to_json(c)["verdict"];
  if (c.oracle) {
    out["complexity"] = c.oracle->profile.values;
    out["deltas"] = c.oracle->profile.deltas;
    out["stabilized"] = c.oracle->profile.stabilized;
    out["oracle"] = to_json(c)["oracle"];
  } else {
    out["complexity"] = Json::array();
    out["deltas"] = Json::array();
    out["stabilized"] = false;
  }
  out["witness"] = witness;
  out["specials"] = specials;
  return out;
}

}  // namespace parryscope
