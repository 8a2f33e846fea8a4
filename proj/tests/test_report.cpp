#include <doctest.h>

#include "coprod/report.hpp"
#include "support.hpp"

using namespace coprod;
using namespace support;

TEST_SUITE("report") {

TEST_CASE("classification text ends with the verdict line") {
  auto e = make_entry("kleene3");
  auto text = classify_text(flowchart_classify({e.algebra}, e.spec));
  const std::string tail = "E: no, S: yes\n";
  REQUIRE(text.size() > tail.size());
  CHECK(text.substr(text.size() - tail.size()) == tail);
}

TEST_CASE("JSON reports are versioned and deterministic") {
  auto e = make_entry("demorgan4");
  auto a = classify_json(flowchart_classify({e.algebra}, e.spec)).dump();
  auto b = classify_json(flowchart_classify({e.algebra}, e.spec)).dump();
  CHECK(a == b);
  auto j = Json::parse(a);
  CHECK(j["schema"] == 1);
  CHECK(j["E"] == true);
  CHECK(j["S"] == true);
  REQUIRE(j["relations"].size() == 1);
  CHECK(j["relations"][0]["relations"][0].size() == 9);
}

TEST_CASE("coproduct report") {
  auto ego = ego_of("demorgan4");
  auto dm = alg("demorgan4");
  auto c = coproduct(ego, {dm, dm});
  auto text = coproduct_text(c, {dm, dm}, ego.gens);
  CHECK(text.find("size 16\n") != std::string::npos);
  CHECK(text.find("injection 0") != std::string::npos);
  auto j = coproduct_json(c, {dm, dm}, ego.gens);
  CHECK(j["size"] == 16);
  CHECK(j["injections"].size() == 2);
}

TEST_CASE("table rows") {
  auto rows = std::vector<Table1Result>{run_table1_case({"kleene3", {false, true}}),
                                        run_table1_case({"demorgan4", {false, false}})};
  CHECK(rows[0].match);
  CHECK_FALSE(rows[1].match);
  auto j = table1_json(rows);
  CHECK(j["cases"][0]["match"] == true);
  CHECK(j["cases"][1]["computed"]["E"] == true);
  auto bad = run_table1_case({"nosuch", {true, true}});
  CHECK_FALSE(bad.match);
  CHECK(bad.E == Tri::Unknown);
}

TEST_CASE("alter ego and reconstruction reports") {
  auto ego = ego_of("kleene3");
  auto t = alter_ego_text(ego);
  CHECK(t.find("relations:") != std::string::npos);
  CHECK(alter_ego_json(ego)["relations"].size() == 4);
  auto r = reveng_priestley(alg("kleene3"), ego);
  CHECK(reveng_json(r, alg("kleene3"))["abstract_isomorphism"] == true);
}

}  // TEST_SUITE
