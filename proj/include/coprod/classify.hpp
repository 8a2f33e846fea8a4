#pragma once

// The E/S classification: simplify the generating set, look for a single
// generator, choose a minimal separating carrier set and inspect the
// maximal relations. Also the direct test of the coproduct-preservation
// conditions (i)-(iii) on a single generator and carrier.

#include <optional>
#include <string>
#include <vector>

#include "coprod/algebra.hpp"
#include "coprod/distlat.hpp"
#include "coprod/piggyback.hpp"

namespace coprod {

enum class Tri { No, Yes, Unknown };

std::string to_string(Tri t);

/// Relatively subdirectly irreducible subalgebras of members of `gens` (up to
/// isomorphism), with ISP-redundant ones dropped greedily in ascending size
/// order. Throws CapExceeded for members above caps.subalgebra_source_size.
std::vector<FiniteAlgebra> simplify_generators(const std::vector<FiniteAlgebra>& gens,
                                               const Caps& caps = {});

struct SingleGenerator {
  Tri status = Tri::Unknown;
  std::optional<FiniteAlgebra> algebra;
  std::string how;  ///< "member", "subalgebra", "product" or a reason
};

/// Some M0 with ISP(M0) = ISP(gens), searched among the members, their
/// subalgebras, the product of all members and finally their coproduct
/// (computed through `spec`). A "no" is only reported after the coproduct.
SingleGenerator find_single_generator(const std::vector<FiniteAlgebra>& simplified,
                                      const DReductSpec& spec, const Caps& caps = {});

struct RouteStep {
  std::string question;
  std::string answer;
};

struct RelationSizes {
  std::size_t omega1 = 0, omega2 = 0;  ///< indices into ClassificationReport::omega
  std::vector<SortedRelation> relations;
  std::size_t orbits = 0;  ///< up to carrier-preserving automorphisms
};

struct ClassificationReport {
  std::vector<FiniteAlgebra> input;
  std::vector<FiniteAlgebra> simplified;
  SingleGenerator single;
  /// Generators the carriers and relations refer to: the single generator
  /// when there is one, the simplified set otherwise.
  GeneratorSet working;
  std::vector<CarrierMap> omega;
  std::size_t omega_alternatives = 0;
  std::vector<RelationSizes> relations;
  bool lattice_lemma = false;  ///< unique_max_applicable and bounded constants
  Tri verdict_E = Tri::Unknown;
  bool verdict_S = false;
  Tri preserves_coproducts = Tri::Unknown;
  std::vector<RouteStep> route;
};

ClassificationReport flowchart_classify(const std::vector<FiniteAlgebra>& gens,
                                        const DReductSpec& spec, const Caps& caps = {});

struct ConditionC {
  bool embeds_si = false;     ///< (i)
  bool separates = false;     ///< (ii)
  bool unique_max = false;    ///< (iii)
  bool all() const { return embeds_si && separates && unique_max; }
};

/// `ambient` is the generating set of the quasivariety (M must lie in it).
ConditionC check_condition_C(const FiniteAlgebra& m, const PrimeFilter& omega,
                             const std::vector<FiniteAlgebra>& ambient, const DReductSpec& spec,
                             const Caps& caps = {});

struct ConditionCScan {
  bool found = false;
  std::optional<FiniteAlgebra> algebra;
  std::optional<PrimeFilter> omega;
  std::size_t pairs_checked = 0;
};

/// Exhaustive search over candidate generators M (subalgebras of members up
/// to isomorphism, then the product of members) and all carriers of M.
ConditionCScan decide_by_condition_C(const std::vector<FiniteAlgebra>& gens, const DReductSpec& spec,
                                     const Caps& caps = {});

}  // namespace coprod
