#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"

using namespace coprod;
using namespace support;

namespace {

FinitePoset antichain(int n) {
  std::vector<char> m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] = 1;
  return FinitePoset(n, m);
}

FinitePoset chain(int n) {
  std::vector<char> m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m[static_cast<std::size_t>(i * n + j)] = 1;
  return FinitePoset(n, m);
}

// Boolean lattice 2^k on subsets of k atoms.
DistLatticeReduct boolean_lattice(int k) {
  const int n = 1 << k;
  std::vector<Element> meet, join;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      meet.push_back(x & y);
      join.push_back(x | y);
    }
  return DistLatticeReduct(n, meet, join, 0, n - 1);
}

}  // namespace

TEST_SUITE("distlat") {

TEST_CASE("De Morgan reduct is the diamond") {
  auto e = make_entry("demorgan4");
  auto l = d_reduct(e.algebra, e.spec);
  Element a = el(e.algebra, "a"), b = el(e.algebra, "b");
  CHECK_FALSE(l.leq(a, b));
  CHECK_FALSE(l.leq(b, a));
  CHECK(l.leq(l.bot(), a));
  CHECK(l.leq(b, l.top()));
}

TEST_CASE("MV term reduct of the three-element chain is a chain") {
  auto e = make_entry("mv_chain:2");
  CHECK_FALSE(e.spec.is_literal());
  auto l = d_reduct(e.algebra, e.spec);
  for (Element x = 0; x < 3; ++x)
    for (Element y = 0; y < 3; ++y) CHECK(l.leq(x, y) == (x <= y));
}

TEST_CASE("degenerate reduct is rejected") {
  Signature sig({{"f", 2}, {"c", 0}, {"d", 0}});
  FiniteAlgebra a("T", 2, sig, {{0, 0, 1, 1}, {0}, {1}});
  DReductSpec spec{Term::parse("x0"), Term::parse("x0"), Term::parse("c"), Term::parse("d")};
  CHECK_THROWS_AS(d_reduct(a, spec), InputError);
}

TEST_CASE("prime filters") {
  auto dm = make_entry("demorgan4");
  auto fs = prime_filters(d_reduct(dm.algebra, dm.spec));
  REQUIRE(fs.size() == 2);
  std::set<std::uint64_t> got{mask(fs[0].members), mask(fs[1].members)};
  CHECK(got == oracle::prime_filters(d_reduct(dm.algebra, dm.spec)));
  CHECK(got == std::set<std::uint64_t>{mask(set_of(dm.algebra, {"a", "1"})), mask(set_of(dm.algebra, {"b", "1"}))});

  for (int n = 2; n <= 6; ++n) {
    auto c = make_entry("heyting_chain:" + std::to_string(n));
    auto l = d_reduct(c.algebra, c.spec);
    auto pf = prime_filters(l);
    CHECK(pf.size() == static_cast<std::size_t>(n - 1));
    auto h = priestley_dual(l);
    for (int i = 0; i < h.size(); ++i)
      for (int j = 0; j < h.size(); ++j) CHECK((h.leq(i, j) || h.leq(j, i)));
  }
  DistLatticeReduct one(1, {0}, {0}, 0, 0);
  CHECK(prime_filters(one).empty());
}

TEST_CASE("prime filters match the subset oracle and count join-irreducibles") {
  for (const auto& id : small_catalog()) {
    auto e = make_entry(id);
    auto l = d_reduct(e.algebra, e.spec);
    std::set<std::uint64_t> got;
    for (const auto& f : prime_filters(l)) got.insert(mask(f.members));
    CHECK_MESSAGE(got == oracle::prime_filters(l), id);
    std::size_t ji = 0;
    for (Element x = 0; x < l.size(); ++x) ji += l.is_join_irreducible(x);
    CHECK_MESSAGE(got.size() == ji, id);
  }
}

TEST_CASE("dual of a Boolean lattice is an antichain") {
  auto l = boolean_lattice(4);
  auto h = priestley_dual(l);
  CHECK(h.size() == 4);
  CHECK(h.is_antichain());
  CHECK(poset_isomorphic(antichain(4), h).has_value());
}

TEST_CASE("duals of homomorphisms") {
  auto e = make_entry("demorgan4");
  auto l = d_reduct(e.algebra, e.spec);
  std::vector<Element> idm{0, 1, 2, 3};
  auto hid = dual_of_hom(l, l, idm);
  CHECK(hid == std::vector<int>{0, 1});

  // 2 = {0,1} included in U(4)
  DistLatticeReduct two(2, {0, 0, 0, 1}, {0, 1, 1, 1}, 0, 1);
  auto h = dual_of_hom(two, l, {0, 3});
  CHECK(h == std::vector<int>{0, 0});
  CHECK_THROWS_AS(dual_of_hom(two, l, {0, 1}), InputError);
}

TEST_CASE("injective maps dualise to surjections, surjective maps to order embeddings") {
  for (const auto& [i, j] : std::vector<std::pair<std::string, std::string>>{
           {"kleene3", "demorgan4"}, {"demorgan4", "demorgan4"}, {"heyting_chain:3", "heyting_chain:4"},
           {"mv_chain:2", "mv_chain:4"}, {"pseudo_b:1", "pseudo_b:2"}, {"bool2", "bool2"}}) {
    auto a = make_entry(i), b = make_entry(j);
    auto la = d_reduct(a.algebra, a.spec), lb = d_reduct(b.algebra, b.spec);
    for (auto& f : hom_enumerate(a.algebra, b.algebra)) {
      auto hf = dual_of_hom(la, lb, f.map);
      std::set<Element> img(f.map.begin(), f.map.end());
      std::set<int> himg(hf.begin(), hf.end());
      if (img.size() == f.map.size()) CHECK(himg.size() == prime_filters(la).size());
      if (static_cast<int>(img.size()) == b.algebra.size())
        CHECK(is_order_embedding(priestley_dual(lb), priestley_dual(la), hf));
    }
    // same checks from the other side
    for (auto& f : hom_enumerate(b.algebra, a.algebra)) {
      auto hf = dual_of_hom(lb, la, f.map);
      std::set<Element> img(f.map.begin(), f.map.end());
      if (static_cast<int>(img.size()) == a.algebra.size())
        CHECK(is_order_embedding(priestley_dual(la), priestley_dual(lb), hf));
    }
  }
}

TEST_CASE("up-set lattices") {
  auto d = upset_lattice(antichain(2));
  CHECK(d.lattice.size() == 4);
  CHECK(poset_isomorphic(d.lattice.order(), boolean_lattice(2).order()).has_value());
  auto c = upset_lattice(chain(2));
  CHECK(c.lattice.size() == 3);
  CHECK(poset_isomorphic(c.lattice.order(), chain(3)).has_value());
  CHECK(c.upsets.front().empty());
}

TEST_CASE("K(H(L)) is L for catalog reducts") {
  for (const auto& id : small_catalog()) {
    auto e = make_entry(id);
    auto l = d_reduct(e.algebra, e.spec);
    if (l.size() > 32) continue;
    auto k = upset_lattice(priestley_dual(l));
    CHECK_MESSAGE(poset_isomorphic(k.lattice.order(), l.order()).has_value(), id);
  }
}

TEST_CASE("poset isomorphism") {
  auto c = chain(3);
  auto self = poset_isomorphic(c, c);
  REQUIRE(self);
  CHECK(*self == std::vector<int>{0, 1, 2});
  CHECK_FALSE(poset_isomorphic(chain(2), antichain(2)));
}

TEST_CASE("H turns lattice coproducts into products") {
  std::vector<DistLatticeReduct> ls;
  for (const auto& id : {"bool2", "demorgan4", "kleene3", "heyting_chain:4", "pseudo_b:2", "mv_chain:3"}) {
    auto e = make_entry(id);
    ls.push_back(d_reduct(e.algebra, e.spec));
  }
  for (const auto& l1 : ls)
    for (const auto& l2 : ls) {
      auto h1 = priestley_dual(l1), h2 = priestley_dual(l2);
      if (h1.size() * h2.size() > 64) continue;
      auto cp = lattice_coproduct({l1, l2});
      CHECK(poset_isomorphic(priestley_dual(cp.lattice), poset_product({h1, h2})).has_value());
    }
}

TEST_CASE("DOT output lists covers") {
  auto dot = poset_to_dot(chain(3), "C");
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);
  CHECK(dot.find("n0 -> n2") == std::string::npos);
}

}  // TEST_SUITE
