#include <doctest.h>

#include "coprod/duality.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace coprod;
using namespace support;

TEST_SUITE("duality") {

TEST_CASE("natural duals") {
  auto dm = ego_of("demorgan4");
  auto a = alg("demorgan4");
  auto d = natural_dual(a, dm);
  REQUIRE(d.sort_sizes == std::vector<int>{2});
  // r lifted pointwise: x r y iff (x(e), y(e)) in r for every e
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      bool want = true;
      for (Element e = 0; e < 4; ++e)
        want = want && dm.relations[0].contains(d.point_maps[0][static_cast<std::size_t>(x)][static_cast<std::size_t>(e)],
                                                d.point_maps[0][static_cast<std::size_t>(y)][static_cast<std::size_t>(e)]);
      CHECK(d.related(0, x, y, 2) == want);
    }

  auto k = ego_of("kleene3");
  auto f1 = free_algebra({alg("kleene3")}, 1).algebra;
  CHECK(natural_dual(f1, k).sort_sizes == std::vector<int>{3});

  CHECK_THROWS_AS(natural_dual(alg("demorgan4"), k), InputError);
}

TEST_CASE("one-element algebra has one point per sort") {
  auto k = ego_of("kleene3");
  auto one = quotient(alg("kleene3"), Congruence::all(3)).algebra;
  auto d = natural_dual(one, k);
  CHECK(d.sort_sizes == std::vector<int>{static_cast<int>(hom_enumerate(one, alg("kleene3")).size())});
}

TEST_CASE("products of structures") {
  auto dm = ego_of("demorgan4");
  auto d = natural_dual(alg("demorgan4"), dm);
  auto p1 = structure_product({d}, dm);
  CHECK(p1.sort_sizes == d.sort_sizes);
  CHECK(p1.relations == d.relations);
  CHECK(p1.operations == d.operations);
  auto p2 = structure_product({d, d}, dm);
  CHECK(p2.sort_sizes == std::vector<int>{4});
  auto p0 = structure_product({}, dm);
  CHECK(p0.sort_sizes == std::vector<int>{1});
  // the terminal structure: E of it is the initial algebra
  auto e0 = e_functor(p0, dm);
  CHECK(isomorphic(e0.algebra, free_algebra({alg("demorgan4")}, 0).algebra).has_value());
  MultisortedStructure empty;
  empty.sort_sizes = {0};
  empty.relations = {{}};
  empty.operations = {{}, {}};
  CHECK(e_functor(empty, dm).algebra.size() == 1);
}

TEST_CASE("evaluation is an isomorphism onto E(D(A))") {
  for (const auto& id : small_catalog()) {
    auto a = alg(id);
    if (a.size() > 8) continue;
    auto ego = ego_of(id);
    auto ed = e_functor(natural_dual(a, ego), ego);
    CHECK_MESSAGE(isomorphic(ed.algebra, a).has_value(), id);
    // evaluations are exactly the morphisms
    CHECK(ed.morphisms.size() == static_cast<std::size_t>(a.size()));
  }
}

TEST_CASE("coproducts agree with the hom-tuple oracle") {
  struct Case {
    std::string ambient;
    std::vector<std::string> family;
  };
  std::vector<Case> cases{{"demorgan4", {"demorgan4", "demorgan4"}},
                          {"kleene3", {"kleene3", "kleene3"}},
                          {"demorgan4", {"kleene3", "kleene3"}},
                          {"heyting_chain:3", {"heyting_chain:3", "heyting_chain:3"}},
                          {"pseudo_b:1", {"pseudo_b:1", "pseudo_b:1"}},
                          {"mv_chain:2", {"mv_chain:2", "mv_chain:2"}},
                          {"demorgan4", {"demorgan4"}},
                          {"bool2", {"bool2", "bool2", "bool2"}}};
  for (const auto& c : cases) {
    auto ego = ego_of(c.ambient);
    std::vector<FiniteAlgebra> fam;
    for (const auto& f : c.family) fam.push_back(alg(f));
    auto cp = coproduct(ego, fam);
    CHECK_MESSAGE(static_cast<std::size_t>(cp.algebra.size()) == oracle::coproduct_size(ego.gens.algebras, fam),
                  c.ambient);
    CHECK(cp.universal_property);
  }
  auto dm = coproduct(ego_of("demorgan4"), {alg("demorgan4"), alg("demorgan4")});
  CHECK(dm.algebra.size() == 16);
  auto single = coproduct(ego_of("demorgan4"), {alg("demorgan4")});
  CHECK(isomorphic(single.algebra, alg("demorgan4")).has_value());
}

TEST_CASE("coproduct of free algebras is free") {
  auto k = alg("kleene3");
  auto f1 = free_algebra({k}, 1).algebra;
  auto cp = coproduct(ego_of("kleene3"), {f1, f1});
  CHECK(isomorphic(cp.algebra, free_algebra({k}, 2).algebra).has_value());
}

TEST_CASE("reconstruction of the Priestley dual") {
  auto dm = reveng_priestley(alg("demorgan4"), ego_of("demorgan4"));
  CHECK(dm.y.size() == 2);
  CHECK(dm.quotient.size() == 2);
  CHECK(dm.quotient.is_antichain());
  CHECK(dm.phi_isomorphism);

  auto kego = ego_of("kleene3");
  auto k = reveng_priestley(alg("kleene3"), kego);
  REQUIRE(k.y.size() == 2);
  CHECK(k.quotient.size() == 2);
  CHECK_FALSE(k.quotient.is_antichain());
  CHECK(k.phi_isomorphism);
  CHECK(k.abstract_isomorphism);

  for (const auto& id : small_catalog()) {
    auto r = reveng_priestley(alg(id), ego_of(id));
    CHECK_MESSAGE(r.is_preorder, id);
    CHECK_MESSAGE(r.phi_isomorphism, id);
    CHECK_MESSAGE(r.abstract_isomorphism, id);
  }
}

TEST_CASE("simple piggyback: the lifted relation orders D(A)") {
  for (const auto& id : {"demorgan4", "pseudo_b:1", "pre_moisil_L0:2", "bool2"}) {
    auto ego = ego_of(id);
    REQUIRE(ego.omega.size() == 1);
    REQUIRE(ego.relations.size() == 1);
    auto a = alg(id);
    auto r = reveng_priestley(a, ego);
    CHECK(r.quotient.size() == static_cast<int>(r.y.size()));
  }
}

TEST_CASE("lambda maps") {
  auto kego = ego_of("kleene3");
  auto k = alg("kleene3");
  auto lam = lambda_map(k, kego);
  auto filters = prime_filters(d_reduct(k, kego.gens.spec));
  REQUIRE(lam.size() == 2);
  // the filter {a,1} is hit by one carrier, {1} by the other
  CHECK(lam[0].size() == 1);
  CHECK(lam[1].size() == 1);
  CHECK(lam[0] != lam[1]);
  for (std::size_t f = 0; f < 2; ++f)
    CHECK(kego.omega[lam[f][0]].filter.members == filters[f].members);

  auto dego = ego_of("demorgan4");
  for (const auto& l : lambda_map(alg("demorgan4"), dego)) CHECK(l == std::vector<std::size_t>{0});
}

TEST_CASE("iota and the classification agree") {
  auto dm = iota_check(ego_of("demorgan4"), {alg("demorgan4"), alg("demorgan4")});
  CHECK(dm.surjective);
  CHECK(dm.order_embedding);
  CHECK(dm.image_matches_lambda);

  auto k = iota_check(ego_of("kleene3"), {alg("kleene3"), alg("kleene3")});
  CHECK_FALSE(k.surjective);
  CHECK(k.order_embedding);
  CHECK(k.image_matches_lambda);

  auto c3 = iota_check(ego_of("heyting_chain:3"), {alg("heyting_chain:3"), alg("heyting_chain:3")});
  CHECK(c3.surjective);
  CHECK_FALSE(c3.order_embedding);

  for (const auto& id : {"demorgan4", "kleene3", "heyting_chain:3", "mv_chain:3"}) {
    auto one = iota_check(ego_of(id), {alg(id)});
    CHECK(one.surjective);
    CHECK(one.order_embedding);
  }
}

TEST_CASE("iota factors through Phi") {
  for (const auto& id : {"demorgan4", "kleene3", "heyting_chain:3", "pseudo_b:1", "mv_chain:2"})
    CHECK_MESSAGE(lemma31_check(ego_of(id), {alg(id), alg(id)}), id);
  auto k = alg("kleene3");
  CHECK(lemma31_check(ego_of("demorgan4"), {k, alg("demorgan4")}));
}

TEST_CASE("reflector") {
  auto k = alg("kleene3"), dm = alg("demorgan4");
  auto same = reflector(k, {k});
  CHECK(same.quotient.algebra.size() == 3);
  CHECK_FALSE(same.trivial);
  // a hom 4 -> 3 would send a and b to the fixed point a, and then
  // a meet b = 0 to a; there is none, so the reflection is trivial
  auto r = reflector(dm, {k});
  CHECK(oracle::homs(dm, k).empty());
  CHECK(r.homs == 0);
  CHECK(r.trivial);
  CHECK(r.quotient.algebra.size() == 1);

  auto native = coproduct(ego_of("kleene3"), {k, k});
  auto via_dm = coproduct(ego_of("demorgan4"), {k, k});
  CHECK(isomorphic(native.algebra, reflector(via_dm.algebra, {k}).quotient.algebra).has_value());
}

TEST_CASE("free-product witness: injections are one-to-one when E holds") {
  for (const auto& id : {"demorgan4", "heyting_chain:3", "pseudo_b:1", "pseudo_b:2", "pre_moisil_L0:2"}) {
    auto cp = coproduct(ego_of(id), {alg(id), alg(id)});
    for (const auto& inj : cp.injections) {
      std::set<Element> img(inj.map.begin(), inj.map.end());
      CHECK_MESSAGE(img.size() == inj.map.size(), id);
    }
  }
}

TEST_CASE("caps") {
  Caps tiny;
  tiny.structure_points = 3;
  auto dm = ego_of("demorgan4");
  CHECK_THROWS_AS(coproduct(dm, {alg("demorgan4"), alg("demorgan4")}, tiny), CapExceeded);
  Caps nodes;
  nodes.e_search_nodes = 2;
  CHECK_THROWS_AS(coproduct(dm, {alg("demorgan4"), alg("demorgan4")}, nodes), CapExceeded);
}

}  // TEST_SUITE
