#pragma once

// Carrier maps, the separation condition, maximal algebraic relations inside
// (w1,w2)^{-1}(<=), and assembly of the multisorted alter ego.

#include <cstddef>
#include <optional>
#include <vector>

#include "coprod/algebra.hpp"
#include "coprod/distlat.hpp"

namespace coprod {

/// A finite generating set together with everything the dual side needs:
/// lattice reducts, the canonical carriers of each sort and all homs
/// between sorts.
struct GeneratorSet {
  std::vector<FiniteAlgebra> algebras;
  DReductSpec spec;
  std::vector<DistLatticeReduct> reducts;
  std::vector<std::vector<PrimeFilter>> filters;  ///< per sort, canonical order
  /// homs[i][j] = Hom(M_i, M_j)
  std::vector<std::vector<std::vector<Homomorphism>>> homs;

  static GeneratorSet make(std::vector<FiniteAlgebra> algebras, DReductSpec spec);
  std::size_t num_sorts() const noexcept { return algebras.size(); }
};

/// A bounded lattice hom U(M) -> 2, given by its prime filter.
struct CarrierMap {
  std::size_t sort = 0;
  PrimeFilter filter;

  bool value(Element e) const { return filter.contains(e); }
  friend bool operator==(const CarrierMap& a, const CarrierMap& b) {
    return a.sort == b.sort && a.filter == b.filter;
  }
};

/// All carriers, sorts in order and filters by generator within a sort.
std::vector<CarrierMap> all_carriers(const GeneratorSet& g);

struct SepResult {
  bool holds = true;
  /// First unseparated pair when the condition fails.
  std::size_t sort = 0;
  Element a = 0, b = 0;
};

SepResult sep_condition(const GeneratorSet& g, const std::vector<CarrierMap>& omega);

struct OmegaChoice {
  std::vector<CarrierMap> omega;
  /// Number of minimum-size carrier sets that satisfy separation (the chosen
  /// one included).
  std::size_t alternatives = 0;
};

/// Smallest Ω satisfying separation; ties broken lexicographically over
/// all_carriers order. Throws InputError if even all carriers fail (some
/// generator is not in ISP of the set).
OmegaChoice minimal_omega(const GeneratorSet& g);

/// {(a,b) | w1(a) <= w2(b)} as a subset of M1 x M2, element a*|M2| + b.
ElementSet leq_sublattice(const GeneratorSet& g, const CarrierMap& w1, const CarrierMap& w2);

/// All maximal subuniverses of `p` contained in `bound`, sorted by size
/// (descending) and then lexicographically.
std::vector<ElementSet> maximal_subuniverses_in(const FiniteAlgebra& p, const ElementSet& bound,
                                                const Caps& caps = {});

struct SortedRelation {
  std::size_t source = 0, target = 0;  ///< sorts
  std::size_t omega1 = 0, omega2 = 0;  ///< indices into the alter ego's Ω
  std::vector<std::pair<Element, Element>> pairs;
  bool contains(Element a, Element b) const;
};

struct SortedOperation {
  std::size_t source = 0, target = 0;
  Homomorphism map;
};

struct AlterEgo {
  GeneratorSet gens;
  std::vector<CarrierMap> omega;
  std::vector<SortedRelation> relations;
  std::vector<SortedOperation> operations;

  /// Relations labelled (w1, w2), in order.
  std::vector<const SortedRelation*> relations_for(std::size_t w1, std::size_t w2) const;
};

/// R_{w1,w2} as sorted relations (labels left at 0).
std::vector<SortedRelation> maximal_relations(const GeneratorSet& g, const CarrierMap& w1,
                                              const CarrierMap& w2, const Caps& caps = {});

/// Groups `rs` (all with sorts w1.sort, w2.sort) into orbits under the
/// pairs of automorphisms (α, β) with w1∘α = w1 and w2∘β = w2, acting by
/// r ↦ (α×β)(r). Returns the orbit index of each relation.
std::vector<std::size_t> relation_orbits(const GeneratorSet& g, const CarrierMap& w1,
                                         const CarrierMap& w2,
                                         const std::vector<SortedRelation>& rs);

/// Throws InputError if separation fails.
AlterEgo build_alter_ego(const GeneratorSet& g, const std::vector<CarrierMap>& omega,
                         const Caps& caps = {});

/// Every basic operation that is not one of the lattice operations is a
/// unary lattice endomorphism or dual endomorphism of U(A).
bool unique_max_applicable(const FiniteAlgebra& a, const DReductSpec& spec);

/// Every nullary operation evaluates to the lattice bottom or top.
bool constants_are_bounds(const FiniteAlgebra& a, const DReductSpec& spec);

std::string relation_to_string(const FiniteAlgebra& m1, const FiniteAlgebra& m2,
                               const std::vector<std::pair<Element, Element>>& pairs);

}  // namespace coprod
