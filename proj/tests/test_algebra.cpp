#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "support.hpp"

using namespace coprod;
using namespace support;

TEST_SUITE("algebra") {

TEST_CASE("terms evaluate on the Kleene and MV chains") {
  auto k = alg("kleene3");
  Element a = el(k, "a");
  CHECK(eval_term(k, Term::parse("(neg x0)"), std::vector<Element>{a}) == a);
  CHECK(eval_term(k, Term::parse("x0"), std::vector<Element>{2}) == 2);

  auto l2 = alg("mv_chain:2");
  auto join = Term::parse("(oplus (neg (oplus (neg x0) x1)) x1)");
  CHECK(eval_term(l2, join, std::vector<Element>{2, 1}) == 2);
  // the join term agrees with max everywhere
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) CHECK(eval_term(l2, join, std::vector<Element>{x, y}) == std::max(x, y));
}

TEST_CASE("term errors") {
  auto k = alg("kleene3");
  CHECK_THROWS_AS(eval_term(k, Term::parse("(imp x0 x1)"), std::vector<Element>{0, 0}), InputError);
  CHECK_THROWS_AS(eval_term(k, Term::parse("(neg x0 x1)"), std::vector<Element>{0, 0}), InputError);
  CHECK_THROWS_AS(Term::parse("(meet x0"), InputError);
  CHECK(Term::parse("(meet x0 (neg x1))").to_string() == "(meet x0 (neg x1))");
}

TEST_CASE("endomorphisms of 4 and 3") {
  auto dm = alg("demorgan4");
  auto ends = hom_enumerate(dm, dm);
  REQUIRE(ends.size() == 2);
  CHECK(ends[0].map == std::vector<Element>{0, 1, 2, 3});
  CHECK(ends[1].map == std::vector<Element>{0, 2, 1, 3});
  CHECK(hom_enumerate(alg("kleene3"), alg("kleene3")).size() == 1);
}

TEST_CASE("hom_enumerate equals the brute-force filter") {
  auto ids = small_catalog();
  std::size_t checked = 0;
  for (const auto& i : ids)
    for (const auto& j : ids) {
      auto a = make_entry(i).algebra, b = make_entry(j).algebra;
      if (!same_signature(a, b)) continue;
      if (oracle::ipow(static_cast<std::size_t>(b.size()), a.size()) > 1'000'000) continue;
      std::vector<std::vector<Element>> got;
      for (auto& h : hom_enumerate(a, b)) got.push_back(h.map);
      CHECK_MESSAGE(got == oracle::homs(a, b), i << " -> " << j);
      ++checked;
    }
  CHECK(checked > 30);
}

TEST_CASE("identity is always a homomorphism") {
  for (const auto& id : small_catalog()) {
    auto a = alg(id);
    std::vector<Element> idm(static_cast<std::size_t>(a.size()));
    for (Element e = 0; e < a.size(); ++e) idm[static_cast<std::size_t>(e)] = e;
    auto hs = hom_enumerate(a, a);
    CHECK(std::find(hs.begin(), hs.end(), Homomorphism{idm}) != hs.end());
  }
}

TEST_CASE("subuniverse closure") {
  auto dm = alg("demorgan4");
  CHECK(subuniverse_closure(dm, ElementSet(4)) == set_of(dm, {"0", "1"}));
  auto k = alg("kleene3");
  CHECK(subuniverse_closure(k, set_of(k, {"a"})) == ElementSet::full(3));
  auto c3 = alg("heyting_chain:3");
  CHECK(subuniverse_closure(c3, set_of(c3, {"d"})) == ElementSet::full(3));
}

TEST_CASE("closure is idempotent and matches the subset oracle") {
  std::mt19937 rng(7);
  for (const auto& id : small_catalog()) {
    auto a = alg(id);
    if (a.size() > 12) continue;
    auto subs = oracle::subuniverses(a);
    std::vector<std::uint64_t> got;
    for (const auto& s : all_subuniverses(a)) got.push_back(mask(s));
    std::sort(got.begin(), got.end());
    CHECK_MESSAGE(got == subs, id);
    for (int trial = 0; trial < 20; ++trial) {
      auto seed = from_mask(rng() & ((std::uint64_t{1} << a.size()) - 1), a.size());
      auto c = subuniverse_closure(a, seed);
      CHECK(subuniverse_closure(a, c) == c);
      CHECK(seed.is_subset_of(c));
      // least closed superset
      for (auto s : subs)
        if ((s & mask(seed)) == mask(seed)) CHECK((s & mask(c)) == mask(c));
    }
  }
}

TEST_CASE("direct products") {
  auto k = alg("kleene3"), dm = alg("demorgan4");
  CHECK(direct_product({k, k}).algebra.size() == 9);
  auto unit = direct_product({});
  CHECK(unit.algebra.size() == 1);
  auto dm_k = direct_product({dm, k});
  std::vector<Element> c{el(dm, "a"), el(k, "1")};
  Element x = dm_k.encode(c);
  auto neg = *dm_k.algebra.signature().find("neg");
  auto image = dm_k.decode(dm_k.algebra.apply(neg, {x}));
  CHECK(image == std::vector<Element>{el(dm, "a"), el(k, "0")});
  Caps tiny;
  tiny.product_elements = 10;
  CHECK_THROWS_AS(direct_product({dm, dm, dm}, tiny), CapExceeded);
}

TEST_CASE("quotients") {
  auto k = alg("kleene3");
  auto id = quotient(k, Congruence::identity(3));
  CHECK(isomorphic(id.algebra, k).has_value());
  CHECK(quotient(k, Congruence::all(3)).algebra.size() == 1);
  auto glue = Congruence::from_blocks({0, 1, 1});
  CHECK_FALSE(is_compatible(k, glue));
  CHECK_THROWS_AS(quotient(k, glue), InputError);
}

TEST_CASE("generated congruences") {
  auto c3 = alg("heyting_chain:3");
  CHECK(congruence_generated(c3, {}).is_identity());
  CHECK(congruence_generated(c3, {{el(c3, "d"), el(c3, "1")}}) == Congruence::from_blocks({0, 1, 1}));
  for (const auto& id : small_catalog()) {
    auto a = alg(id);
    auto l = make_entry(id).spec;
    auto bot = eval_term(a, l.bot, std::vector<Element>{}), top = eval_term(a, l.top, std::vector<Element>{});
    CHECK_MESSAGE(congruence_generated(a, {{bot, top}}).num_blocks() == 1, id);
  }
}

TEST_CASE("generated congruence is the least compatible partition containing the pairs") {
  std::mt19937 rng(11);
  for (const auto& id : small_catalog()) {
    auto a = alg(id);
    if (a.size() > 5) continue;
    auto cons = oracle::congruences(a);
    for (int trial = 0; trial < 15; ++trial) {
      std::vector<std::pair<Element, Element>> pairs;
      for (int k = static_cast<int>(rng() % 3); k > 0; --k)
        pairs.push_back({static_cast<Element>(rng() % static_cast<unsigned>(a.size())),
                         static_cast<Element>(rng() % static_cast<unsigned>(a.size()))});
      auto got = congruence_generated(a, pairs);
      // brute-force: intersection of all compatible partitions containing the pairs
      std::vector<int> best;
      std::size_t best_blocks = 0;
      for (const auto& c : cons) {
        bool contains = true;
        for (auto [x, y] : pairs) contains = contains && c[static_cast<std::size_t>(x)] == c[static_cast<std::size_t>(y)];
        if (!contains) continue;
        auto blocks = static_cast<std::size_t>(*std::max_element(c.begin(), c.end()) + 1);
        if (blocks > best_blocks) {
          best_blocks = blocks;
          best = c;
        }
      }
      CHECK_MESSAGE(got == Congruence::from_blocks(best), id);
    }
  }
}

TEST_CASE("relative congruences, ISP and subdirect irreducibility") {
  auto k = alg("kleene3"), dm = alg("demorgan4");
  auto rk = relative_congruences(k, {k});
  REQUIRE(rk.size() == 2);
  CHECK(std::find(rk.begin(), rk.end(), Congruence::identity(3)) != rk.end());
  CHECK(std::find(rk.begin(), rk.end(), Congruence::all(3)) != rk.end());
  auto rdm = relative_congruences(dm, {k});
  CHECK(std::find(rdm.begin(), rdm.end(), Congruence::identity(4)) == rdm.end());

  CHECK(in_isp(k, {k}));
  CHECK_FALSE(in_isp(dm, {k}));
  CHECK(in_isp(k, {dm}));

  CHECK(is_rel_subdirectly_irreducible(k, {k}));
  CHECK(is_rel_subdirectly_irreducible(alg("bool2"), {alg("bool2")}));
  CHECK_FALSE(is_rel_subdirectly_irreducible(direct_product({k, k}).algebra, {k}));
}

TEST_CASE("in ISP iff the identity congruence is relative") {
  std::vector<std::string> ids{"demorgan4", "kleene3", "bool2", "mv_chain:2", "mv_chain:3", "mv_chain:4"};
  for (const auto& i : ids)
    for (const auto& j : ids) {
      auto a = alg(i), m = alg(j);
      if (!same_signature(a, m)) continue;
      auto rc = relative_congruences(a, {m});
      bool has_delta = std::find(rc.begin(), rc.end(), Congruence::identity(a.size())) != rc.end();
      CHECK_MESSAGE(in_isp(a, {m}) == has_delta, i << " in ISP(" << j << ")");
    }
}

TEST_CASE("relative congruences are congruences") {
  for (const auto& id : {"kleene3", "demorgan4", "heyting_chain:4", "pseudo_b:1"}) {
    auto a = alg(id);
    auto cons = oracle::congruences(a);
    for (const auto& c : relative_congruences(a, {a}))
      CHECK(std::find(cons.begin(), cons.end(), c.blocks()) != cons.end());
  }
}

TEST_CASE("isomorphism") {
  auto dm = alg("demorgan4");
  auto self = isomorphic(dm, dm);
  REQUIRE(self);
  CHECK(self->map == std::vector<Element>{0, 1, 2, 3});
  CHECK_FALSE(isomorphic(alg("kleene3"), alg("heyting_chain:3")));
  auto renamed = dm.relabeled({"0", "b", "a", "1"});
  CHECK(isomorphic(dm, renamed).has_value());
  for (const auto& i : {"kleene3", "mv_chain:2", "heyting_chain:3", "pseudo_b:1"})
    for (const auto& j : {"kleene3", "mv_chain:2", "heyting_chain:3", "pseudo_b:1"}) {
      auto a = alg(i), b = alg(j);
      CHECK(isomorphic(a, b).has_value() == oracle::isomorphic(a, b));
    }
}

TEST_CASE("MV chains embed iff the index divides") {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      auto a = alg("mv_chain:" + std::to_string(m)), b = alg("mv_chain:" + std::to_string(n));
      CHECK_MESSAGE(find_embedding(a, b).has_value() == (n % m == 0), m << " into " << n);
    }
}

TEST_CASE("free algebras") {
  auto k = alg("kleene3"), dm = alg("demorgan4");
  CHECK(free_algebra({k}, 0).algebra.size() == 2);
  CHECK(free_algebra({k}, 1).algebra.size() == oracle::free_size({k}, 1));
  CHECK(free_algebra({dm}, 1).algebra.size() == oracle::free_size({dm}, 1));
  CHECK(free_algebra({k}, 2).algebra.size() == oracle::free_size({k}, 2));
  for (const auto& id : {"demorgan4", "kleene3", "heyting_chain:3"})
    CHECK(free_algebra({alg(id)}, 0).algebra.size() == 2);
  CHECK(free_algebra({k, alg("bool2")}, 1).algebra.size() == oracle::free_size({k, alg("bool2")}, 1));
}

TEST_CASE("free algebra universal property") {
  for (const auto& id : {"kleene3", "demorgan4", "bool2", "heyting_chain:3", "mv_chain:2"}) {
    auto m = alg(id);
    for (int n = 0; n <= 2; ++n) {
      auto f = free_algebra({m}, n);
      auto homs = hom_enumerate(f.algebra, m);
      // each assignment of the generators extends uniquely
      std::set<std::vector<Element>> restrictions;
      for (const auto& h : homs) {
        std::vector<Element> r;
        for (Element g : f.generators) r.push_back(h.map[static_cast<std::size_t>(g)]);
        restrictions.insert(r);
      }
      CHECK(restrictions.size() == homs.size());
      CHECK(homs.size() == oracle::ipow(static_cast<std::size_t>(m.size()), n));
    }
    CHECK(hom_enumerate(free_algebra({m}, 1).algebra, m).size() == static_cast<std::size_t>(m.size()));
  }
}

}  // TEST_SUITE
