#pragma once

// Named finite algebras: De Morgan, Kleene, Heyting chains, pseudocomplemented
// B_n, MV chains, (pre-)Moisil algebras.

#include <optional>
#include <string>
#include <vector>

#include "coprod/algebra.hpp"
#include "coprod/distlat.hpp"

namespace coprod {

struct ExpectedVerdict {
  bool E = false;
  bool S = false;
};

struct CatalogEntry {
  std::string id;  ///< "name" or "name:param"
  FiniteAlgebra algebra;
  DReductSpec spec;
  /// Generators (join-irreducibles) of the prime filters that serve as a
  /// known separating carrier set; empty when none is documented.
  std::vector<Element> documented_carriers;
  std::optional<ExpectedVerdict> expected;
  std::string note;
};

/// Accepts "demorgan4", "heyting_chain:3", "mv_chain:6", ...
CatalogEntry make_entry(const std::string& id, const Caps& caps = {});
CatalogEntry make_entry(const std::string& name, std::optional<int> param, const Caps& caps = {});

/// Known constructor names, and whether each takes a parameter.
std::vector<std::pair<std::string, bool>> catalog_names();

struct Table1Case {
  std::string id;
  ExpectedVerdict expected;
};

/// The parametrised instances used to reproduce the classification table.
/// Rows for Q-lattices and for non-singly generated Heyting varieties are
/// not included: their generators are not constructed here.
std::vector<Table1Case> table1_suite();

}  // namespace coprod
