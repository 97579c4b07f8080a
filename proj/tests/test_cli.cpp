#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "parryscope/report.hpp"

using parryscope::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = parryscope::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> tsv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream cells_in(line);
    std::string cell;
    while (std::getline(cells_in, cell, '\t')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("validate") {
  auto r = run({"validate", "2121"});
  CHECK(r.code == 0);
  CHECK(r.json()["valid"] == true);
  CHECK(r.json()["m"] == 4);
  r = run({"validate", "12"});
  CHECK(r.code == 2);
  CHECK(r.json()["index"] == 2);
  CHECK(r.json()["error"] == "ParryViolation");
  r = run({"validate", "abc"});
  CHECK(r.code == 1);
  CHECK(run({"validate", "210"}).code == 2);
  CHECK(run({}).code == 1);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"classify"}).code == 1);
}

TEST_CASE("classify") {
  auto r = run({"classify", "11"});
  CHECK(r.code == 0);
  CHECK(r.json()["verdict"] == Json::parse(R"({"kind":"Affine","slope":1,"intercept":1})"));
  r = run({"classify", "2121", "--oracle-n", "20"});
  CHECK(r.code == 0);
  CHECK(r.json()["verdict"]["reason"] == "FractionalPower");
  CHECK(r.json()["oracle"]["agrees"] == true);
  r = run({"classify", "21211", "--oracle-n", "40"});
  CHECK(r.json()["verdict"]["slope"] == 4);
  CHECK(r.json()["oracle"]["agrees"] == true);
  CHECK(run({"classify", "2"}).code == 3);
}

TEST_CASE("witness") {
  auto r = run({"witness", "2121"});
  CHECK(r.code == 0);
  CHECK(r.json()["bundle"]["x2"] == "21100");
  CHECK(r.json()["all_pass"] == true);
  CHECK(run({"witness", "11"}).code == 3);
  r = run({"witness", "22"});
  CHECK(r.code == 3);
  CHECK(r.json()["verdict"]["reason"] == "TmNotOne");
}

TEST_CASE("scan") {
  auto r = run({"scan", "--corpus", "m=2..4,digit<=2", "--oracle-n", "30"});
  CHECK(r.code == 0);
  const auto rows = tsv_rows(r.out);
  REQUIRE(rows.size() > 10);
  CHECK(rows.front().front() == "d");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 8);
    CHECK_MESSAGE(rows[i][6] == "yes", rows[i][0]);
  }

  r = run({"--format", "json", "scan", "--corpus", "m=2..4,digit<=2,tm>=2"});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(j["rows"].size() > 3);
  for (const auto& row : j["rows"]) CHECK(row["verdict"]["kind"] == "NotAffine");

  r = run({"scan", "--corpus", "m=2,digit<=1,tm>=2"});
  CHECK(r.code == 0);
  CHECK(tsv_rows(r.out).size() == 1);

  CHECK(run({"scan", "--corpus", "m=2..x"}).code == 1);
}

TEST_CASE("scan output does not depend on thread count") {
  const auto one = run({"--threads", "1", "scan", "--corpus", "m=2..4,digit<=3", "--oracle-n", "12"});
  const auto many = run({"--threads", "4", "scan", "--corpus", "m=2..4,digit<=3", "--oracle-n", "12"});
  CHECK(one.out == many.out);
}

TEST_CASE("betaint, generate, profile, specials, report") {
  auto r = run({"betaint", "succ", "2121", "121"});
  CHECK(r.json()["succ"] == "200");
  CHECK(r.json()["letter"] == 2);
  r = run({"betaint", "pred", "2121", "2000"});
  CHECK(r.json()["pred"] == "1212");
  CHECK(r.json()["letter"] == 3);
  CHECK(run({"betaint", "pred", "11", "0"}).code == 2);
  CHECK(run({"betaint", "succ", "11", "11"}).code == 2);
  r = run({"betaint", "coding", "11", "--count", "5"});
  CHECK(r.json()["coding"] == "01001");
  r = run({"betaint", "expand", "11", "2"});
  CHECK(r.json()["expansion"] == "10.01");
  r = run({"betaint", "value", "11", "1001"});
  CHECK(r.json()["coords"] == Json::parse("[2,2]"));
  CHECK(r.json()["index"] == 6);

  r = run({"generate", "11", "--length", "8", "--format", "tsv"});
  CHECK(r.out == "01001010\n");
  r = run({"profile", "111", "--n-max", "5"});
  CHECK(r.json()["complexity"] == Json::parse("[3,5,7,9,11]"));

  r = run({"specials", "22", "--n", "2", "--length-bound", "5"});
  CHECK(r.code == 0);
  const Json specials = r.json();
  bool found = false;
  for (const auto& w : specials["maximal_left_special"]) found = found || w == "000";
  CHECK_MESSAGE(found, r.out);

  r = run({"report", "2121", "--oracle-n", "20"});
  CHECK(r.code == 0);
  const Json j = r.json();
  CHECK(Json::parse(j.dump()) == j);
  CHECK(j["witness"]["z"] == "121");
  CHECK(j["complexity"].size() == 21);
}
