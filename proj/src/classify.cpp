#include <algorithm>

#include "coprod/classify.hpp"
#include "coprod/duality.hpp"

namespace coprod {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::No: return "no";
    case Tri::Yes: return "yes";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

void require_small(const FiniteAlgebra& a, const Caps& caps) {
  if (static_cast<std::size_t>(a.size()) > caps.subalgebra_source_size)
    throw CapExceeded("subalgebra enumeration source size", static_cast<std::size_t>(a.size()),
                      caps.subalgebra_source_size);
}

// Subalgebras of members up to isomorphism, ascending by size (stable).
std::vector<FiniteAlgebra> subalgebras_up_to_iso(const std::vector<FiniteAlgebra>& gens,
                                                 const Caps& caps) {
  std::vector<FiniteAlgebra> out;
  for (const auto& m : gens) {
    require_small(m, caps);
    for (const auto& u : all_subuniverses(m)) {
      if (u.empty()) continue;
      auto s = static_cast<int>(u.count()) == m.size() ? m : subalgebra(m, u).algebra;
      bool seen = false;
      for (const auto& o : out)
        if (o.size() == s.size() && isomorphic(o, s)) {
          seen = true;
          break;
        }
      if (!seen) out.push_back(std::move(s));
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const FiniteAlgebra& a, const FiniteAlgebra& b) { return a.size() < b.size(); });
  return out;
}

bool generates_all(const FiniteAlgebra& m, const std::vector<FiniteAlgebra>& gens) {
  for (const auto& n : gens)
    if (!in_isp(n, {m})) return false;
  return true;
}

bool injective(const Homomorphism& h) {
  auto v = h.map;
  std::sort(v.begin(), v.end());
  return std::adjacent_find(v.begin(), v.end()) == v.end();
}

}  // namespace

std::vector<FiniteAlgebra> simplify_generators(const std::vector<FiniteAlgebra>& gens,
                                               const Caps& caps) {
  if (gens.empty()) throw InputError("empty generating set");
  for (std::size_t i = 1; i < gens.size(); ++i) require_same_signature(gens[0], gens[i]);
  std::vector<FiniteAlgebra> kept;
  for (auto& s : subalgebras_up_to_iso(gens, caps))
    if (is_rel_subdirectly_irreducible(s, gens)) kept.push_back(std::move(s));

  for (std::size_t i = 0; i < kept.size();) {
    std::vector<FiniteAlgebra> rest;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) rest.push_back(kept[j]);
    if (!rest.empty() && in_isp(kept[i], rest))
      kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(i));
    else
      ++i;
  }
  if (kept.empty()) throw InputError("the generated quasivariety is trivial");
  for (const auto& g : gens)
    if (!in_isp(g, kept)) throw Error("simplification lost '" + g.name() + "'");
  return kept;
}

SingleGenerator find_single_generator(const std::vector<FiniteAlgebra>& simplified,
                                      const DReductSpec& spec, const Caps& caps) {
  if (simplified.size() == 1) return {Tri::Yes, simplified[0], "member"};
  try {
    for (const auto& s : subalgebras_up_to_iso(simplified, caps))
      if (generates_all(s, simplified)) return {Tri::Yes, s, "subalgebra"};
  } catch (const CapExceeded&) {
  }

  try {
    auto p = direct_product(simplified, caps).algebra;
    if (generates_all(p, simplified)) return {Tri::Yes, p, "product"};
  } catch (const CapExceeded& e) {
    return {Tri::Unknown, std::nullopt, e.what()};
  }

  // A single finite generator exists iff every coproduct injection of the
  // members is one-to-one, in which case the coproduct itself is one.
  try {
    auto g = GeneratorSet::make(simplified, spec);
    auto ego = build_alter_ego(g, minimal_omega(g).omega, caps);
    auto cp = coproduct(ego, simplified, caps);
    for (const auto& eps : cp.injections)
      if (!injective(eps)) return {Tri::No, std::nullopt, "coproduct injection not one-to-one"};
    return {Tri::Yes, cp.algebra, "coproduct"};
  } catch (const CapExceeded& e) {
    return {Tri::Unknown, std::nullopt, e.what()};
  } catch (const InputError& e) {
    return {Tri::Unknown, std::nullopt, e.what()};
  }
}

namespace {

std::size_t count_orbits(const std::vector<std::size_t>& orbit) {
  std::size_t k = 0;
  for (auto o : orbit) k = std::max(k, o + 1);
  return k;
}

}  // namespace

ClassificationReport flowchart_classify(const std::vector<FiniteAlgebra>& gens,
                                        const DReductSpec& spec, const Caps& caps) {
  ClassificationReport r;
  r.input = gens;
  r.simplified = simplify_generators(gens, caps);
  r.single = find_single_generator(r.simplified, spec, caps);
  if (r.single.status == Tri::Yes)
    r.working = GeneratorSet::make({*r.single.algebra}, spec);
  else
    r.working = GeneratorSet::make(r.simplified, spec);

  auto oc = minimal_omega(r.working);
  r.omega = oc.omega;
  r.omega_alternatives = oc.alternatives;
  bool all_le1 = true;
  for (std::size_t i = 0; i < r.omega.size(); ++i)
    for (std::size_t j = 0; j < r.omega.size(); ++j) {
      RelationSizes rs{i, j, maximal_relations(r.working, r.omega[i], r.omega[j], caps), 0};
      for (auto& rel : rs.relations) {
        rel.omega1 = i;
        rel.omega2 = j;
      }
      rs.orbits = count_orbits(relation_orbits(r.working, r.omega[i], r.omega[j], rs.relations));
      all_le1 = all_le1 && rs.relations.size() <= 1;
      r.relations.push_back(std::move(rs));
    }
  r.lattice_lemma = true;
  for (const auto& a : r.working.algebras)
    r.lattice_lemma = r.lattice_lemma && unique_max_applicable(a, spec) && constants_are_bounds(a, spec);

  std::string q1 = to_string(r.single.status);
  if (r.single.status == Tri::Yes) q1 += " (" + r.single.how + ")";
  r.route.push_back({"single generator?", q1});
  r.verdict_S = all_le1;
  if (r.single.status == Tri::Yes && r.omega.size() == 1) {
    r.route.push_back({"|Omega| = 1?", "yes"});
    r.route.push_back({"|R(w,w)| = 1?", r.relations[0].relations.size() == 1 ? "yes" : "no"});
    r.verdict_E = Tri::Yes;
  } else {
    if (r.single.status == Tri::Yes) r.route.push_back({"|Omega| = 1?", "no"});
    r.route.push_back({"all |R| <= 1?", all_le1 ? "yes" : "no"});
    r.verdict_E = r.single.status == Tri::Unknown && r.omega.size() == 1 ? Tri::Unknown : Tri::No;
  }
  if (!r.verdict_S || r.verdict_E == Tri::No)
    r.preserves_coproducts = Tri::No;
  else
    r.preserves_coproducts = r.verdict_E;
  return r;
}

ConditionC check_condition_C(const FiniteAlgebra& m, const PrimeFilter& omega,
                             const std::vector<FiniteAlgebra>& ambient, const DReductSpec& spec,
                             const Caps& caps) {
  ConditionC c;
  c.embeds_si = true;
  for (const auto& s : subalgebras_up_to_iso(ambient, caps))
    if (is_rel_subdirectly_irreducible(s, ambient) && !find_embedding(s, m)) {
      c.embeds_si = false;
      break;
    }
  auto g = GeneratorSet::make({m}, spec);
  CarrierMap w{0, omega};
  c.separates = sep_condition(g, {w}).holds;
  c.unique_max = maximal_relations(g, w, w, caps).size() == 1;
  return c;
}

ConditionCScan decide_by_condition_C(const std::vector<FiniteAlgebra>& gens, const DReductSpec& spec,
                                     const Caps& caps) {
  auto candidates = subalgebras_up_to_iso(gens, caps);
  if (gens.size() > 1) candidates.push_back(direct_product(gens, caps).algebra);
  ConditionCScan scan;
  for (const auto& m : candidates) {
    for (const auto& f : prime_filters(d_reduct(m, spec))) {
      ++scan.pairs_checked;
      if (check_condition_C(m, f, gens, spec, caps).all()) {
        scan.found = true;
        scan.algebra = m;
        scan.omega = f;
        return scan;
      }
    }
  }
  return scan;
}

}  // namespace coprod
