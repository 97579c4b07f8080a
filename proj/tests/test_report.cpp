#include <doctest.h>

#include "oracles.hpp"
#include "parryscope/report.hpp"

using namespace parryscope;
using oracle::w;

TEST_CASE("ZBeta JSON round trip") {
  const auto d = RenyiExpansion::parse("2121");
  const ZBeta x = ZBeta::beta_power(d.field(), 40) - zb_integer(d, 7);
  const Json j = to_json(x);
  CHECK(j.contains("coords"));
  const ZBeta back = zbeta_from_json(d, Json::parse(j.dump()));
  CHECK(back.coords() == x.coords());
  CHECK_THROWS_AS(zbeta_from_json(d, Json::parse(R"({"coords":[1,2]})")), Error);
  CHECK(to_json(zb_beta(RenyiExpansion::parse("11"))).dump() == R"({"coords":[0,1]})");
}

TEST_CASE("substitution JSON") {
  const Json j = to_json(Substitution::build(RenyiExpansion::parse("2121")));
  CHECK(j["images"]["0"] == "001");
  CHECK(j["images"]["3"] == "0");
  CHECK(j["primitive"] == true);
  CHECK(j["matrix"].size() == 4);
}

TEST_CASE("analysis report schema round-trips") {
  const auto d = RenyiExpansion::parse("2121");
  const auto c = classify_affine(d, 10);
  const auto b = construct_witness(d);
  Json witness = to_json(b);
  witness["verification"] = to_json(verify_witness(d, b));
  const Json report = analysis_report(d, c, witness, Json(nullptr));
  const Json again = Json::parse(report.dump());
  CHECK(again == report);
  for (const char* key : {"d", "verdict", "complexity", "deltas", "stabilized", "witness", "specials"}) {
    CHECK(again.contains(key));
  }
  CHECK(again["verdict"]["kind"] == "NotAffine");
  CHECK(again["verdict"]["reason"] == "FractionalPower");
  CHECK(again["witness"]["z"] == "121");
  CHECK(again["witness"]["verification"]["conditions"]["iv"] == true);
}
