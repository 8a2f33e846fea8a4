#pragma once

// Finite algebras given by operation tables, and the machinery built on them:
// term evaluation, homomorphisms, subuniverses, congruences, products,
// quotients, free algebras and quasivariety membership.

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coprod/element_set.hpp"
#include "coprod/errors.hpp"

namespace coprod {

using Element = int;

struct Symbol {
  std::string name;
  int arity = 0;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  std::optional<std::size_t> find(const std::string& name) const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  std::vector<Symbol> symbols_;
};

/// A term over some signature: either a variable x<i> or a symbol applied to
/// subterms. Symbols are referenced by name and resolved on evaluation.
class Term {
 public:
  static Term var(int index);
  static Term apply(std::string symbol, std::vector<Term> args = {});

  /// Parses the prefix notation used in .alg files: `x0`, `bot`, `(bot)`,
  /// `(neg (oplus x0 x1))`.
  static Term parse(const std::string& text);

  bool is_var() const noexcept { return var_ >= 0; }
  int var_index() const noexcept { return var_; }
  const std::string& symbol() const noexcept { return symbol_; }
  const std::vector<Term>& args() const noexcept { return args_; }

  /// One more than the largest variable index (0 for ground terms).
  int num_vars() const;
  std::string to_string() const;

  friend bool operator==(const Term&, const Term&) = default;

 private:
  int var_ = -1;
  std::string symbol_;
  std::vector<Term> args_;
};

class FiniteAlgebra {
 public:
  /// Function used to build a table: receives the argument tuple.
  using OpFn = std::function<Element(std::span<const Element>)>;

  FiniteAlgebra() = default;
  /// Tables are row-major over lexicographically ordered argument tuples.
  FiniteAlgebra(std::string name, int size, Signature sig,
                std::vector<std::vector<Element>> tables,
                std::vector<std::string> labels = {});

  static FiniteAlgebra from_functions(std::string name, int size, Signature sig,
                                      const std::vector<OpFn>& ops,
                                      std::vector<std::string> labels = {});

  const std::string& name() const noexcept { return name_; }
  int size() const noexcept { return size_; }
  const Signature& signature() const noexcept { return sig_; }
  const std::vector<Element>& table(std::size_t sym) const { return tables_[sym]; }
  const std::vector<std::vector<Element>>& tables() const noexcept { return tables_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Element e) const;
  std::optional<Element> find_label(const std::string& label) const;

  Element apply(std::size_t sym, std::span<const Element> args) const;
  Element apply(std::size_t sym, std::initializer_list<Element> args) const {
    return apply(sym, std::span<const Element>(args.begin(), args.size()));
  }
  Element apply(const std::string& sym, std::initializer_list<Element> args) const;

  FiniteAlgebra renamed(std::string name) const;
  FiniteAlgebra relabeled(std::vector<std::string> labels) const;

  /// Tables, size and signature equal; names and labels are ignored.
  bool same_structure(const FiniteAlgebra& o) const {
    return size_ == o.size_ && sig_ == o.sig_ && tables_ == o.tables_;
  }

 private:
  std::string name_;
  int size_ = 0;
  Signature sig_;
  std::vector<std::vector<Element>> tables_;
  std::vector<std::string> labels_;
};

/// Mixed-radix index of a tuple, leftmost coordinate most significant.
std::size_t tuple_index(std::span<const Element> args, std::size_t radix);

/// Iterates over all tuples of the given arity over 0..n-1 in lexicographic
/// order.
void for_each_tuple(int n, int arity, const std::function<void(std::span<const Element>)>& fn);

struct Homomorphism {
  std::vector<Element> map;
  friend bool operator==(const Homomorphism&, const Homomorphism&) = default;
  friend auto operator<=>(const Homomorphism&, const Homomorphism&) = default;
};

/// Partition of 0..n-1 stored as canonical block indices: blocks are
/// numbered in order of their smallest element.
class Congruence {
 public:
  Congruence() = default;
  static Congruence from_blocks(const std::vector<int>& blocks);
  static Congruence identity(int n);
  static Congruence all(int n);
  static Congruence kernel(const std::vector<Element>& map);

  int size() const noexcept { return static_cast<int>(block_.size()); }
  int num_blocks() const noexcept { return num_blocks_; }
  int block(Element e) const { return block_[static_cast<std::size_t>(e)]; }
  const std::vector<int>& blocks() const noexcept { return block_; }
  bool related(Element a, Element b) const { return block(a) == block(b); }
  bool is_identity() const noexcept { return num_blocks_ == size(); }

  Congruence meet(const Congruence& o) const;
  bool refines(const Congruence& o) const;

  friend bool operator==(const Congruence& a, const Congruence& b) { return a.block_ == b.block_; }
  friend bool operator<(const Congruence& a, const Congruence& b) { return a.block_ < b.block_; }

 private:
  std::vector<int> block_;
  int num_blocks_ = 0;
};

// ---------------------------------------------------------------------------
// Operations

Element eval_term(const FiniteAlgebra& a, const Term& t, std::span<const Element> args);

/// Table of a term function of `arity` variables, row-major like operation
/// tables.
std::vector<Element> term_table(const FiniteAlgebra& a, const Term& t, int arity);

bool same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b);
void require_same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b);

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b, std::span<const Element> map);

/// All homomorphisms a -> b, sorted lexicographically by map vector.
std::vector<Homomorphism> hom_enumerate(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// Least subuniverse containing `seed` (and all constants).
ElementSet subuniverse_closure(const FiniteAlgebra& a, const ElementSet& seed);

/// A small generating set, chosen greedily in element order.
std::vector<Element> generating_set(const FiniteAlgebra& a);

/// All subuniverses (including the empty one when there are no constants),
/// sorted by size then lexicographically.
std::vector<ElementSet> all_subuniverses(const FiniteAlgebra& a);

struct Subalgebra {
  FiniteAlgebra algebra;
  std::vector<Element> embedding;  ///< new element i -> old element
};

Subalgebra subalgebra(const FiniteAlgebra& a, const ElementSet& universe);

struct ProductAlgebra {
  FiniteAlgebra algebra;
  std::vector<int> radices;

  std::vector<Element> decode(Element e) const;
  Element encode(std::span<const Element> coords) const;
};

ProductAlgebra direct_product(const std::vector<FiniteAlgebra>& factors, const Caps& caps = {});

struct QuotientAlgebra {
  FiniteAlgebra algebra;
  Congruence theta;
  Homomorphism surjection;  ///< element -> block
};

bool is_compatible(const FiniteAlgebra& a, const Congruence& theta);
QuotientAlgebra quotient(const FiniteAlgebra& a, const Congruence& theta);

Congruence congruence_generated(const FiniteAlgebra& a,
                                const std::vector<std::pair<Element, Element>>& pairs);

/// Con_Q(A) for Q = ISP(gens): hom kernels closed under meets, plus the
/// all-relation, canonically sorted.
std::vector<Congruence> relative_congruences(const FiniteAlgebra& a,
                                             const std::vector<FiniteAlgebra>& gens);

bool in_isp(const FiniteAlgebra& a, const std::vector<FiniteAlgebra>& gens);

/// Requires a in ISP(gens).
bool is_rel_subdirectly_irreducible(const FiniteAlgebra& a, const std::vector<FiniteAlgebra>& gens);

std::optional<Homomorphism> isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

/// An injective homomorphism a -> b, if any.
std::optional<Homomorphism> find_embedding(const FiniteAlgebra& a, const FiniteAlgebra& b);

struct FreeAlgebra {
  FiniteAlgebra algebra;
  std::vector<Element> generators;
  /// Coordinates of each element: for every generator M (in order) and every
  /// assignment of the free generators into M, the value in M.
  std::vector<std::vector<Element>> coordinates;
};

FreeAlgebra free_algebra(const std::vector<FiniteAlgebra>& gens, int n, const Caps& caps = {});

}  // namespace coprod
