#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coprod/catalog.hpp"
#include "coprod/piggyback.hpp"

namespace support {

using namespace coprod;

inline FiniteAlgebra alg(const std::string& id) { return make_entry(id).algebra; }

inline AlterEgo ego_of(const std::string& id) {
  auto e = make_entry(id);
  auto g = GeneratorSet::make({e.algebra}, e.spec);
  return build_alter_ego(g, minimal_omega(g).omega);
}

inline Element el(const FiniteAlgebra& a, const std::string& label) { return *a.find_label(label); }

inline ElementSet set_of(const FiniteAlgebra& a, const std::vector<std::string>& labels) {
  ElementSet s(static_cast<std::size_t>(a.size()));
  for (const auto& l : labels) s.insert(static_cast<std::size_t>(el(a, l)));
  return s;
}

inline std::uint64_t mask(const ElementSet& s) {
  std::uint64_t m = 0;
  for (int e : s.elements()) m |= std::uint64_t{1} << e;
  return m;
}

inline ElementSet from_mask(std::uint64_t m, int n) {
  ElementSet s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    if ((m >> i) & 1u) s.insert(static_cast<std::size_t>(i));
  return s;
}

using Pairs = std::vector<std::pair<Element, Element>>;

inline Pairs pairs_of(const FiniteAlgebra& m1, const FiniteAlgebra& m2,
                      const std::vector<std::pair<std::string, std::string>>& ls) {
  Pairs out;
  for (const auto& [a, b] : ls) out.push_back({el(m1, a), el(m2, b)});
  std::sort(out.begin(), out.end());
  return out;
}

inline Pairs sorted(Pairs p) {
  std::sort(p.begin(), p.end());
  return p;
}

/// Catalog ids small enough for exhaustive checks.
inline std::vector<std::string> small_catalog() {
  return {"bool2",           "demorgan4",       "kleene3",        "heyting_chain:2", "heyting_chain:3",
          "heyting_chain:4", "pseudo_b:0",      "pseudo_b:1",     "pseudo_b:2",      "mv_chain:1",
          "mv_chain:2",      "mv_chain:3",      "mv_chain:4",     "mv_chain:6",      "moisil_L:3",
          "moisil_M:3",      "moisil_L:4",      "pre_moisil_L0:2", "pre_moisil_L0:3", "pre_moisil_M0:2"};
}

}  // namespace support
