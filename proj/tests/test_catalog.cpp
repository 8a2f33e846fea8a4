#include <doctest.h>

#include "coprod/classify.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace coprod;
using namespace support;

TEST_SUITE("catalog") {

TEST_CASE("every entry has a valid lattice reduct") {
  for (const auto& [name, param] : catalog_names()) {
    std::vector<std::string> ids;
    if (!param) ids.push_back(name);
    else
      for (int n : {2, 3, 4}) ids.push_back(name + ":" + std::to_string(n));
    for (const auto& id : ids) {
      auto e = make_entry(id);
      CHECK_NOTHROW(d_reduct(e.algebra, e.spec));
      CHECK(e.id == id);
    }
  }
  CHECK_NOTHROW(d_reduct(alg("pseudo_b:0"), DReductSpec::standard()));
  CHECK_NOTHROW(make_entry("mv_chain:1"));
}

TEST_CASE("bad ids") {
  CHECK_THROWS_AS(make_entry("nosuch"), InputError);
  CHECK_THROWS_AS(make_entry("heyting_chain"), InputError);
  CHECK_THROWS_AS(make_entry("heyting_chain:x"), InputError);
  CHECK_THROWS_AS(make_entry("demorgan4:3"), InputError);
  CHECK_THROWS_AS(make_entry("moisil_L:1"), InputError);
}

TEST_CASE("Heyting chain implication") {
  auto c = alg("heyting_chain:3");
  auto imp = *c.signature().find("imp");
  Element d = el(c, "d");
  CHECK(c.apply(imp, {d, el(c, "0")}) == el(c, "0"));
  CHECK(c.apply(imp, {el(c, "0"), d}) == el(c, "1"));
  CHECK(c.apply(imp, {d, d}) == el(c, "1"));
}

TEST_CASE("pre-Lukasiewicz-Moisil L0_2") {
  auto a = alg("pre_moisil_L0:2");
  REQUIRE(a.size() == 4);
  auto e1 = *a.signature().find("e1");
  const Element top = 3;
  for (Element x = 0; x < 4; ++x) CHECK((a.apply(e1, {x}) == top) == (x % 2 >= 1));
}

TEST_CASE("the two-element MV chain is Boolean") {
  auto e = make_entry("mv_chain:1");
  REQUIRE(e.algebra.size() == 2);
  auto l = d_reduct(e.algebra, e.spec);
  CHECK(l.leq(0, 1));
  auto neg = *e.algebra.signature().find("neg");
  CHECK(e.algebra.apply(neg, {0}) == 1);
}

TEST_CASE("pseudocomplemented algebras") {
  for (int n = 0; n <= 3; ++n) {
    auto a = alg("pseudo_b:" + std::to_string(n));
    CHECK(a.size() == (1 << n) + 1);
    auto pc = *a.signature().find("pc");
    const Element top = 1 << n;
    // pc(x) is the largest y with x meet y = 0
    auto meet = *a.signature().find("meet");
    for (Element x = 0; x <= top; ++x) {
      Element best = -1;
      for (Element y = 0; y <= top; ++y)
        if (a.apply(meet, {x, y}) == 0 && (best < 0 || a.apply(meet, {best, y}) == best)) best = y;
      CHECK(a.apply(pc, {x}) == best);
    }
  }
}

TEST_CASE("documented carriers separate") {
  for (const auto& id : small_catalog()) {
    auto e = make_entry(id);
    if (e.documented_carriers.empty()) continue;
    auto g = GeneratorSet::make({e.algebra}, e.spec);
    std::vector<CarrierMap> om;
    for (const auto& f : g.filters[0])
      for (Element x : e.documented_carriers)
        if (f.generator == x) om.push_back({0, f});
    CHECK_MESSAGE(om.size() == e.documented_carriers.size(), id);
    CHECK_MESSAGE(sep_condition(g, om).holds, id);
  }
}

TEST_CASE("pre-Moisil carrier separates") {
  for (int n = 2; n <= 4; ++n) {
    auto e = make_entry("pre_moisil_L0:" + std::to_string(n));
    auto g = GeneratorSet::make({e.algebra}, e.spec);
    // w(x, y) = x: the filter {(1, k)}
    ElementSet want(static_cast<std::size_t>(2 * n));
    for (int k = 0; k < n; ++k) want.insert(static_cast<std::size_t>(n + k));
    std::vector<CarrierMap> om;
    for (const auto& f : g.filters[0])
      if (f.members == want) om.push_back({0, f});
    REQUIRE(om.size() == 1);
    CHECK(sep_condition(g, om).holds);
  }
  auto m = make_entry("pre_moisil_M0:2");
  auto g = GeneratorSet::make({m.algebra}, m.spec);
  CHECK(in_isp(m.algebra, {m.algebra}));
  CHECK(minimal_omega(g).omega.size() == 1);
}

TEST_CASE("every expected verdict is reproduced") {
  for (const auto& c : table1_suite()) {
    auto e = make_entry(c.id);
    REQUIRE(e.expected);
    CHECK(e.expected->E == c.expected.E);
    CHECK(e.expected->S == c.expected.S);
    auto r = flowchart_classify({e.algebra}, e.spec);
    CHECK_MESSAGE((r.verdict_E == Tri::Yes) == c.expected.E, c.id);
    CHECK_MESSAGE(r.verdict_S == c.expected.S, c.id);
  }
}

TEST_CASE("two-valued Moisil algebras are flagged") {
  auto e = make_entry("moisil_L:2");
  CHECK(e.note.find("n = 2") != std::string::npos);
  auto r = flowchart_classify({e.algebra}, e.spec);
  // computed: a single carrier separates, so E holds here
  CHECK(r.verdict_E == Tri::Yes);
  CHECK(r.verdict_S);
}

}  // TEST_SUITE
