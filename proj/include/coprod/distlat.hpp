#pragma once

// Bounded distributive lattice reducts of finite algebras and finite
// Priestley duality: prime filters, dual posets, up-set lattices.

#include <optional>
#include <string>
#include <vector>

#include "coprod/algebra.hpp"

namespace coprod {

/// Terms defining meet, join and the bounds of a lattice reduct.
struct DReductSpec {
  Term meet, join, bot, top;

  /// meet=(meet x0 x1) join=(join x0 x1) bot=bot top=top
  static DReductSpec standard();
  /// True if each term is a single basic operation applied to distinct
  /// variables in order (x0 x1 for meet/join).
  bool is_literal() const;
};

class FinitePoset {
 public:
  FinitePoset() = default;
  /// Validates the order axioms unless `validate` is false.
  FinitePoset(int size, std::vector<char> leq, std::vector<std::string> labels = {},
              bool validate = true);

  int size() const noexcept { return size_; }
  bool leq(int x, int y) const { return leq_[static_cast<std::size_t>(x * size_ + y)] != 0; }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  std::string label(int x) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Covering pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;
  bool is_antichain() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.size_ == b.size_ && a.leq_ == b.leq_;
  }

 private:
  int size_ = 0;
  std::vector<char> leq_;
  std::vector<std::string> labels_;
};

/// Validated lattice reduct, stored as plain tables on the carrier's
/// universe.
class DistLatticeReduct {
 public:
  DistLatticeReduct() = default;
  DistLatticeReduct(int size, std::vector<Element> meet, std::vector<Element> join, Element bot,
                    Element top, std::vector<std::string> labels = {});

  int size() const noexcept { return size_; }
  Element meet(Element x, Element y) const { return meet_[idx(x, y)]; }
  Element join(Element x, Element y) const { return join_[idx(x, y)]; }
  Element bot() const noexcept { return bot_; }
  Element top() const noexcept { return top_; }
  bool leq(Element x, Element y) const { return meet(x, y) == x; }
  std::string label(Element x) const;

  bool is_join_irreducible(Element x) const;
  FinitePoset order() const;
  /// The reduct as an algebra with signature meet, join, bot, top.
  FiniteAlgebra to_algebra(const std::string& name = "L") const;

 private:
  std::size_t idx(Element x, Element y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(y);
  }
  int size_ = 0;
  std::vector<Element> meet_, join_;
  Element bot_ = 0, top_ = 0;
  std::vector<std::string> labels_;
};

/// Extracts and validates the reduct; throws InputError naming the failing
/// identity and a witness tuple.
DistLatticeReduct d_reduct(const FiniteAlgebra& a, const DReductSpec& spec);

struct PrimeFilter {
  Element generator;  ///< the join-irreducible j with filter = up-set of j
  ElementSet members;
  bool contains(Element e) const { return members.contains(static_cast<std::size_t>(e)); }
  friend bool operator==(const PrimeFilter& a, const PrimeFilter& b) {
    return a.generator == b.generator && a.members == b.members;
  }
};

/// One filter per join-irreducible, ordered by generator.
std::vector<PrimeFilter> prime_filters(const DistLatticeReduct& l);

/// H(L): prime filters ordered by inclusion.
FinitePoset priestley_dual(const DistLatticeReduct& l);

bool is_lattice_hom(const DistLatticeReduct& from, const DistLatticeReduct& to,
                    const std::vector<Element>& f);

/// H(f): H(to) -> H(from), F |-> f^{-1}(F), as indices into the respective
/// prime_filters lists. Throws if f is not a bounded lattice homomorphism.
std::vector<int> dual_of_hom(const DistLatticeReduct& from, const DistLatticeReduct& to,
                             const std::vector<Element>& f);

struct UpsetLattice {
  DistLatticeReduct lattice;
  std::vector<ElementSet> upsets;  ///< element i of the lattice
};

/// K(P): up-sets under intersection and union, sorted by size then
/// lexicographically (so the empty set is 0 and P is last).
UpsetLattice upset_lattice(const FinitePoset& p, const Caps& caps = {});

std::optional<std::vector<int>> poset_isomorphic(const FinitePoset& p, const FinitePoset& q);

bool is_order_embedding(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& f);

/// Cartesian product with the componentwise order; point index is
/// mixed-radix with the first factor most significant.
FinitePoset poset_product(const std::vector<FinitePoset>& factors, const Caps& caps = {});

/// Coproduct in bounded distributive lattices: K of the product of duals.
UpsetLattice lattice_coproduct(const std::vector<DistLatticeReduct>& ls, const Caps& caps = {});

std::string poset_to_dot(const FinitePoset& p, const std::string& name);

}  // namespace coprod
