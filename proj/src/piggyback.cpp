#include <algorithm>
#include <unordered_set>

#include "coprod/piggyback.hpp"

namespace coprod {

GeneratorSet GeneratorSet::make(std::vector<FiniteAlgebra> algebras, DReductSpec spec) {
  if (algebras.empty()) throw InputError("generator set is empty");
  for (std::size_t i = 1; i < algebras.size(); ++i) require_same_signature(algebras[0], algebras[i]);
  GeneratorSet g;
  g.algebras = std::move(algebras);
  g.spec = std::move(spec);
  for (const auto& m : g.algebras) {
    g.reducts.push_back(d_reduct(m, g.spec));
    g.filters.push_back(prime_filters(g.reducts.back()));
  }
  const auto n = g.algebras.size();
  g.homs.assign(n, std::vector<std::vector<Homomorphism>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.homs[i][j] = hom_enumerate(g.algebras[i], g.algebras[j]);
  return g;
}

std::vector<CarrierMap> all_carriers(const GeneratorSet& g) {
  std::vector<CarrierMap> out;
  for (std::size_t s = 0; s < g.num_sorts(); ++s)
    for (const auto& f : g.filters[s]) out.push_back(CarrierMap{s, f});
  return out;
}

SepResult sep_condition(const GeneratorSet& g, const std::vector<CarrierMap>& omega) {
  for (const auto& w : omega)
    if (w.sort >= g.num_sorts()) throw InputError("carrier refers to an unknown sort");
  for (std::size_t i = 0; i < g.num_sorts(); ++i) {
    const int n = g.algebras[i].size();
    // Each element's profile: the value of w o u for every applicable (w, u).
    std::vector<std::vector<char>> profile(static_cast<std::size_t>(n));
    for (const auto& w : omega)
      for (const auto& u : g.homs[i][w.sort])
        for (Element a = 0; a < n; ++a)
          profile[static_cast<std::size_t>(a)].push_back(w.value(u.map[static_cast<std::size_t>(a)]));
    for (Element a = 0; a < n; ++a)
      for (Element b = a + 1; b < n; ++b)
        if (profile[static_cast<std::size_t>(a)] == profile[static_cast<std::size_t>(b)])
          return SepResult{false, i, a, b};
  }
  return {};
}

OmegaChoice minimal_omega(const GeneratorSet& g) {
  const auto all = all_carriers(g);
  const std::size_t k = all.size();
  for (std::size_t size = 0; size <= k; ++size) {
    OmegaChoice choice;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      std::vector<CarrierMap> omega;
      for (auto i : pick) omega.push_back(all[i]);
      if (sep_condition(g, omega).holds) {
        if (choice.alternatives == 0) choice.omega = omega;
        ++choice.alternatives;
      }
      // next combination in lexicographic order
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == k - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (choice.alternatives > 0) return choice;
  }
  auto fail = sep_condition(g, all);
  throw InputError("no carrier set separates '" + g.algebras[fail.sort].name() + "' (elements " +
                   g.algebras[fail.sort].label(fail.a) + ", " + g.algebras[fail.sort].label(fail.b) +
                   "); the generators do not lie in their own quasivariety");
}

ElementSet leq_sublattice(const GeneratorSet& g, const CarrierMap& w1, const CarrierMap& w2) {
  const int n1 = g.algebras[w1.sort].size();
  const int n2 = g.algebras[w2.sort].size();
  ElementSet out(static_cast<std::size_t>(n1 * n2));
  for (Element a = 0; a < n1; ++a)
    for (Element b = 0; b < n2; ++b)
      if (!w1.value(a) || w2.value(b)) out.insert(static_cast<std::size_t>(a * n2 + b));
  return out;
}

namespace {

class MaximalSearch {
 public:
  MaximalSearch(const FiniteAlgebra& p, const Caps& caps) : p_(p), caps_(caps) {
    for (std::size_t s = 0; s < p.signature().size(); ++s)
      if (p.signature()[s].arity == 0) constants_.push_back(p.table(s)[0]);
  }

  std::vector<ElementSet> run(const ElementSet& bound) {
    explore(bound);
    std::vector<ElementSet> out;
    for (const auto& s : found_) {
      bool dominated = false;
      for (const auto& t : found_)
        if (s != t && s.is_subset_of(t)) dominated = true;
      if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
      if (a.count() != b.count()) return a.count() > b.count();
      return a < b;
    });
    return out;
  }

 private:
  // Inputs of the first operation instance (symbol order, then
  // lexicographic argument tuple over s) whose output leaves s.
  std::optional<std::vector<Element>> violation(const ElementSet& s) const {
    const auto elems = s.elements();
    const auto m = elems.size();
    const auto& sig = p_.signature();
    std::vector<std::size_t> idx;
    std::vector<Element> args;
    for (std::size_t sym = 0; sym < sig.size(); ++sym) {
      const auto k = static_cast<std::size_t>(sig[sym].arity);
      if (k == 0 || m == 0) continue;
      idx.assign(k, 0);
      args.assign(k, 0);
      for (;;) {
        for (std::size_t i = 0; i < k; ++i) args[i] = elems[idx[i]];
        if (!s.contains(static_cast<std::size_t>(p_.apply(sym, args)))) return args;
        std::size_t i = k;
        while (i > 0) {
          if (++idx[i - 1] < m) break;
          idx[i - 1] = 0;
          --i;
        }
        if (i == 0) break;
      }
    }
    return std::nullopt;
  }

  void explore(const ElementSet& s) {
    if (!visited_.insert(s).second) return;
    if (visited_.size() > caps_.e_search_nodes)
      throw CapExceeded("maximal subuniverse search nodes", visited_.size(), caps_.e_search_nodes);
    for (Element c : constants_)
      if (!s.contains(static_cast<std::size_t>(c))) return;
    // Anything below an emitted subuniverse is not maximal.
    for (const auto& f : found_)
      if (s.is_subset_of(f)) return;
    auto v = violation(s);
    if (!v) {
      found_.push_back(s);
      return;
    }
    std::sort(v->begin(), v->end());
    v->erase(std::unique(v->begin(), v->end()), v->end());
    for (Element x : *v) {
      ElementSet next = s;
      next.erase(static_cast<std::size_t>(x));
      explore(next);
    }
  }

  const FiniteAlgebra& p_;
  const Caps& caps_;
  std::vector<Element> constants_;
  std::unordered_set<ElementSet, ElementSetHash> visited_;
  std::vector<ElementSet> found_;
};

}  // namespace

std::vector<ElementSet> maximal_subuniverses_in(const FiniteAlgebra& p, const ElementSet& bound,
                                                const Caps& caps) {
  if (bound.universe() != static_cast<std::size_t>(p.size()))
    throw InputError("maximal_subuniverses_in: bound has the wrong universe");
  // Every subuniverse inside the bound lies in the union of the one-generated
  // ones that fit; when that union is closed it is the only maximal one.
  ElementSet u(bound.universe());
  for (int x : bound.elements()) {
    if (u.contains(static_cast<std::size_t>(x))) continue;
    ElementSet seed(bound.universe());
    seed.insert(static_cast<std::size_t>(x));
    auto c = subuniverse_closure(p, seed);
    if (c.is_subset_of(bound)) u |= c;
  }
  if (!u.empty() && subuniverse_closure(p, u) == u) return {u};
  return MaximalSearch(p, caps).run(bound);
}

bool SortedRelation::contains(Element a, Element b) const {
  return std::binary_search(pairs.begin(), pairs.end(), std::pair{a, b});
}

std::vector<const SortedRelation*> AlterEgo::relations_for(std::size_t w1, std::size_t w2) const {
  std::vector<const SortedRelation*> out;
  for (const auto& r : relations)
    if (r.omega1 == w1 && r.omega2 == w2) out.push_back(&r);
  return out;
}

std::vector<SortedRelation> maximal_relations(const GeneratorSet& g, const CarrierMap& w1,
                                              const CarrierMap& w2, const Caps& caps) {
  const auto& m1 = g.algebras[w1.sort];
  const auto& m2 = g.algebras[w2.sort];
  auto prod = direct_product({m1, m2}, caps);
  std::vector<SortedRelation> out;
  for (const auto& s : maximal_subuniverses_in(prod.algebra, leq_sublattice(g, w1, w2), caps)) {
    SortedRelation r{w1.sort, w2.sort, 0, 0, {}};
    for (int e : s.elements()) r.pairs.emplace_back(e / m2.size(), e % m2.size());
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

std::vector<Homomorphism> carrier_automorphisms(const GeneratorSet& g, const CarrierMap& w) {
  std::vector<Homomorphism> out;
  for (const auto& h : g.homs[w.sort][w.sort]) {
    std::vector<Element> sorted = h.map;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
    bool keeps = true;
    for (Element x = 0; x < g.algebras[w.sort].size() && keeps; ++x)
      keeps = w.value(x) == w.value(h.map[static_cast<std::size_t>(x)]);
    if (keeps) out.push_back(h);
  }
  return out;
}

}  // namespace

std::vector<std::size_t> relation_orbits(const GeneratorSet& g, const CarrierMap& w1,
                                         const CarrierMap& w2,
                                         const std::vector<SortedRelation>& rs) {
  auto auts1 = carrier_automorphisms(g, w1);
  auto auts2 = carrier_automorphisms(g, w2);
  constexpr auto none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> orbit(rs.size(), none);
  std::size_t next = 0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (orbit[i] != none) continue;
    orbit[i] = next;
    for (const auto& a : auts1)
      for (const auto& b : auts2) {
        std::vector<std::pair<Element, Element>> img;
        for (auto [x, y] : rs[i].pairs)
          img.emplace_back(a.map[static_cast<std::size_t>(x)], b.map[static_cast<std::size_t>(y)]);
        std::sort(img.begin(), img.end());
        for (std::size_t j = i + 1; j < rs.size(); ++j)
          if (orbit[j] == none && rs[j].pairs == img) orbit[j] = next;
      }
    ++next;
  }
  return orbit;
}

AlterEgo build_alter_ego(const GeneratorSet& g, const std::vector<CarrierMap>& omega,
                         const Caps& caps) {
  auto sep = sep_condition(g, omega);
  if (!sep.holds) {
    const auto& m = g.algebras[sep.sort];
    throw InputError("separation fails on '" + m.name() + "' for " + m.label(sep.a) + ", " +
                     m.label(sep.b));
  }
  AlterEgo ego{g, omega, {}, {}};
  for (std::size_t i = 0; i < omega.size(); ++i)
    for (std::size_t j = 0; j < omega.size(); ++j)
      for (auto& r : maximal_relations(g, omega[i], omega[j], caps)) {
        r.omega1 = i;
        r.omega2 = j;
        ego.relations.push_back(std::move(r));
      }
  for (std::size_t i = 0; i < g.num_sorts(); ++i)
    for (std::size_t j = 0; j < g.num_sorts(); ++j)
      for (const auto& h : g.homs[i][j]) ego.operations.push_back({i, j, h});
  return ego;
}

namespace {

bool literal_symbol(const Term& t, std::size_t arity, std::string& name) {
  if (t.is_var() || t.args().size() != arity) return false;
  for (std::size_t i = 0; i < arity; ++i)
    if (!t.args()[i].is_var() || t.args()[i].var_index() != static_cast<int>(i)) return false;
  name = t.symbol();
  return true;
}

}  // namespace

bool unique_max_applicable(const FiniteAlgebra& a, const DReductSpec& spec) {
  auto l = d_reduct(a, spec);
  std::vector<std::string> lattice_syms;
  std::string name;
  if (literal_symbol(spec.meet, 2, name)) lattice_syms.push_back(name);
  if (literal_symbol(spec.join, 2, name)) lattice_syms.push_back(name);
  if (literal_symbol(spec.bot, 0, name)) lattice_syms.push_back(name);
  if (literal_symbol(spec.top, 0, name)) lattice_syms.push_back(name);
  const auto& sig = a.signature();
  const int n = a.size();
  for (std::size_t s = 0; s < sig.size(); ++s) {
    if (std::find(lattice_syms.begin(), lattice_syms.end(), sig[s].name) != lattice_syms.end())
      continue;
    if (sig[s].arity != 1) return false;
    std::vector<Element> f(static_cast<std::size_t>(n));
    for (Element x = 0; x < n; ++x) f[static_cast<std::size_t>(x)] = a.apply(s, {x});
    if (is_lattice_hom(l, l, f)) continue;
    // dual endomorphism: a lattice hom into the order dual
    auto at = [&](Element x) { return f[static_cast<std::size_t>(x)]; };
    bool dual = at(l.bot()) == l.top() && at(l.top()) == l.bot();
    for (Element x = 0; x < n && dual; ++x)
      for (Element y = 0; y < n && dual; ++y)
        dual = at(l.meet(x, y)) == l.join(at(x), at(y)) && at(l.join(x, y)) == l.meet(at(x), at(y));
    if (!dual) return false;
  }
  return true;
}

bool constants_are_bounds(const FiniteAlgebra& a, const DReductSpec& spec) {
  auto l = d_reduct(a, spec);
  for (std::size_t s = 0; s < a.signature().size(); ++s)
    if (a.signature()[s].arity == 0) {
      Element c = a.table(s)[0];
      if (c != l.bot() && c != l.top()) return false;
    }
  return true;
}

std::string relation_to_string(const FiniteAlgebra& m1, const FiniteAlgebra& m2,
                               const std::vector<std::pair<Element, Element>>& pairs) {
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i)
    out += (i ? "," : "") + std::string("(") + m1.label(pairs[i].first) + "," +
           m2.label(pairs[i].second) + ")";
  return out + "}";
}

}  // namespace coprod
