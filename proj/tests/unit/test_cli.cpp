#include "doctest.h"
#include "helpers.hpp"
#include "otb/error.hpp"
#include "otb/report.hpp"

using namespace otb;

TEST_CASE("report envelope") {
  auto a = builtin_arrangement("braid-a3");
  auto r = run_command("poincare", a);
  CHECK(r["tool"] == "otb");
  CHECK(r["version"] == kToolVersion);
  CHECK(r["seed"] == 20080701);
  CHECK(r["arrangement"]["name"] == "braid-a3");
  CHECK(r["arrangement"]["forms"][3] == Json::array({"1", "-1", "0"}));
  CHECK(r["result"]["polynomial"] == "1+6t+11t^2+6t^3");
  CHECK(render_text(run_command("poincare", builtin_arrangement("9_3_2"))).find("1+9t+27t^2+19t^3") !=
        std::string::npos);
  CHECK_THROWS_AS(run_command("nope", a), InputError);
}

TEST_CASE("betti text and json") {
  auto r = run_command("betti", builtin_arrangement("braid-a3"));
  CHECK(r["result"]["totals"] == Json::array({1, 4, 5, 2}));
  CHECK(r["result"]["entries"]["2,4"] == 3);
  auto text = render_text(r);
  CHECK(text.find("total: 1 4 5 2") != std::string::npos);
}

TEST_CASE("net search output") {
  CommandOptions o;
  auto r = run_command("net-search", builtin_arrangement("9_3_2"), o);
  CHECK(r["result"]["count"] == 0);
  auto b = run_command("net-search", builtin_arrangement("braid-a3"), o);
  REQUIRE(b["result"]["count"] == 1);
  CHECK(b["result"]["certificates"][0]["blocks"] == Json::parse("[[1,6],[2,5],[3,4]]"));
}

TEST_CASE("h0 command") {
  auto a = builtin_arrangement("9_3_1");
  CommandOptions o;
  o.m = 5;
  o.mults = "1";
  auto r = run_command("h0", a, o);
  CHECK(r["result"]["h0"] == 3);
  CHECK(r["result"]["basis"].size() == 3);
  o.mults = "1,2";
  CHECK_THROWS_AS(run_command("h0", a, o), InputError);
  o.mults = "1,x";
  CHECK_THROWS_AS(run_command("h0", a, o), InputError);
  CHECK(parse_mults("0,1,2", 3) == std::vector<long>{0, 1, 2});
  CHECK(parse_mults("2", 4) == std::vector<long>{2, 2, 2, 2});
}

TEST_CASE("deterministic output") {
  auto a = builtin_arrangement("braid-a3");
  CommandOptions o;
  o.all = true;
  CHECK(run_command("report", a, o).dump() == run_command("report", a, o).dump());
  CHECK(render_text(run_command("resonance", a)) == render_text(run_command("resonance", a)));
}
