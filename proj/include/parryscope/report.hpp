#pragma once

// JSON forms of the library's reports.

#include <json.hpp>

#include "parryscope/analysis.hpp"
#include "parryscope/numeration.hpp"
#include "parryscope/substitution.hpp"
#include "parryscope/witness.hpp"
#include "parryscope/zbeta.hpp"

namespace parryscope {

using Json = nlohmann::ordered_json;

/// {"coords":[c0,...,c(m-1)]}; coordinates that do not fit in int64 are
/// emitted as decimal strings.
Json to_json(const ZBeta& x);
/// Inverse of to_json(ZBeta). Throws Error(Parse).
ZBeta zbeta_from_json(const RenyiExpansion& d, const Json& j);

Json to_json(const Substitution& s);
Json to_json(const ComplexityProfile& p);
Json to_json(const SpecialFactorReport& r);
Json to_json(const Trident& t);
Json to_json(const Classification& c);
Json to_json(const WitnessBundle& w);
Json to_json(const WitnessVerification& v);
Json to_json(const GapInventoryReport& g);

/// Analysis report: {"d", "verdict", "complexity", "deltas", "stabilized",
/// "witness", "specials"}.
Json analysis_report(const RenyiExpansion& d, const Classification& c, const Json& witness, const Json& specials);

}  // namespace parryscope
