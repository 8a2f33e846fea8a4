#pragma once

// The hom-functors D and E of a piggyback alter ego at finite scale,
// coproducts computed on the dual side, the reconstruction of the Priestley
// dual from the natural dual, and the ι / Λ checks.

#include <optional>
#include <string>
#include <vector>

#include "coprod/algebra.hpp"
#include "coprod/distlat.hpp"
#include "coprod/piggyback.hpp"

namespace coprod {

/// A structure in the signature of an alter ego: a point set per sort,
/// each relation lifted to a boolean matrix and each operation to a map.
struct MultisortedStructure {
  std::vector<int> sort_sizes;
  /// For natural duals: per sort, per point, the homomorphism A -> M.
  std::vector<std::vector<std::vector<Element>>> point_maps;
  /// For products: per sort, per point, the component point indices.
  std::vector<std::vector<std::vector<int>>> point_tuples;
  /// Per ego relation, row-major over (source point, target point).
  std::vector<std::vector<char>> relations;
  /// Per ego operation, point of the source sort -> point of the target.
  std::vector<std::vector<int>> operations;

  bool related(std::size_t rel, int x, int y, int target_size) const {
    return relations[rel][static_cast<std::size_t>(x) * static_cast<std::size_t>(target_size) +
                          static_cast<std::size_t>(y)] != 0;
  }
};

/// D(A). Throws InputError if A is not in ISP of the sorts.
MultisortedStructure natural_dual(const FiniteAlgebra& a, const AlterEgo& ego);

MultisortedStructure structure_product(const std::vector<MultisortedStructure>& xs,
                                       const AlterEgo& ego, const Caps& caps = {});

struct EResult {
  FiniteAlgebra algebra;
  /// Element i: per sort, per point, the value in that sort.
  std::vector<std::vector<std::vector<Element>>> morphisms;
  std::size_t nodes = 0;  ///< search nodes visited
};

/// E(X): all morphisms X -> ego, with pointwise operations, sorted
/// lexicographically by their value vectors.
EResult e_functor(const MultisortedStructure& x, const AlterEgo& ego, const Caps& caps = {});

struct CoproductResult {
  FiniteAlgebra algebra;
  std::vector<Homomorphism> injections;  ///< ε_B, one per family member
  MultisortedStructure dual;            ///< ∏ D(B)
  std::vector<MultisortedStructure> factor_duals;
  /// Hom(C, M) -> ∏_B Hom(B, M), h ↦ (h ∘ ε_B), is a bijection for every
  /// sort M.
  bool universal_property = false;
};

CoproductResult coproduct(const AlterEgo& ego, const std::vector<FiniteAlgebra>& family,
                          const Caps& caps = {});

struct RevEngResult {
  struct Point {
    std::size_t sort;
    int point;
    std::size_t omega;  ///< index into the ego's Ω
  };
  std::vector<Point> y;
  std::vector<char> preceq;  ///< |Y| x |Y|
  bool is_preorder = false;
  std::vector<int> class_of;  ///< Y -> Y/≈
  FinitePoset quotient;
  /// Φ(x, ω) = ω ∘ x as an index into prime_filters(U(A)).
  std::vector<int> phi;
  /// Y/≈ -> H(U(A)) induced by Φ is a well-defined order isomorphism.
  bool phi_isomorphism = false;
  /// poset_isomorphic(quotient, priestley_dual(U(A))) succeeded.
  bool abstract_isomorphism = false;
};

RevEngResult reveng_priestley(const FiniteAlgebra& a, const AlterEgo& ego);

/// Λ_B(f) for every prime filter f of U(B) (in prime_filters order): the
/// carriers ω (indices into the ego's Ω) with f = ω ∘ x for some x ∈ D(B).
std::vector<std::vector<std::size_t>> lambda_map(const FiniteAlgebra& b, const AlterEgo& ego);

struct IotaCheck {
  CoproductResult coproduct;
  /// ι(F) for each prime filter F of U(∐K): per member, a prime filter index.
  std::vector<std::vector<int>> iota;
  bool surjective = false;
  bool order_embedding = false;
  /// Tuples of prime filters (y_B) with ⋂ Λ_B(y_B) non-empty.
  std::vector<std::vector<int>> lambda_image;
  bool image_matches_lambda = false;
};

IotaCheck iota_check(const AlterEgo& ego, const std::vector<FiniteAlgebra>& family,
                     const Caps& caps = {});

/// Two routes from Y_{∐K} to ∏ H U(B): through Φ and ι, and directly via
/// the components of the product points. True when they agree everywhere.
bool lemma31_check(const AlterEgo& ego, const std::vector<FiniteAlgebra>& family,
                   const Caps& caps = {});

struct ReflectorResult {
  QuotientAlgebra quotient;
  bool trivial = false;  ///< θ is the all-relation
  std::size_t homs = 0;
};

/// A/θ with θ the meet of the kernels of all homs A -> M' (M' in `target`).
ReflectorResult reflector(const FiniteAlgebra& a, const std::vector<FiniteAlgebra>& target);

}  // namespace coprod
