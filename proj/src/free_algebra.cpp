#include <map>

#include "coprod/algebra.hpp"
#include "saturate.hpp"

namespace coprod {

// Elements are represented by their coordinate vectors: the values of the
// term function at every assignment of the free generators into every
// generating algebra. Operations act coordinatewise.
FreeAlgebra free_algebra(const std::vector<FiniteAlgebra>& gens, int n, const Caps& caps) {
  if (gens.empty()) throw InputError("free algebra needs at least one generating algebra");
  if (n < 0) throw InputError("negative number of free generators");
  for (std::size_t i = 1; i < gens.size(); ++i) require_same_signature(gens[0], gens[i]);
  const auto& sig = gens[0].signature();

  // Coordinate layout: per algebra, all assignments 0..|M|^n - 1 (lex order).
  struct Block {
    std::size_t offset, count;
  };
  std::vector<Block> layout;
  std::size_t width = 0;
  for (const auto& m : gens) {
    std::size_t count = 1;
    for (int i = 0; i < n; ++i) {
      if (count > caps.product_elements / static_cast<std::size_t>(m.size()))
        throw CapExceeded("free algebra coordinates", caps.product_elements + 1,
                          caps.product_elements);
      count *= static_cast<std::size_t>(m.size());
    }
    layout.push_back({width, count});
    width += count;
  }

  std::vector<std::vector<Element>> elems;
  std::map<std::vector<Element>, Element> index;
  std::vector<Element> list;
  auto intern = [&](std::vector<Element> coords) {
    auto [it, inserted] = index.emplace(coords, static_cast<Element>(elems.size()));
    if (inserted) {
      if (elems.size() >= caps.product_elements)
        throw CapExceeded("free algebra size", elems.size() + 1, caps.product_elements);
      elems.push_back(std::move(coords));
      list.push_back(it->second);
    }
    return it->second;
  };

  std::vector<Element> generators;
  for (int j = 0; j < n; ++j) {
    std::vector<Element> coords(width);
    for (std::size_t m = 0; m < gens.size(); ++m) {
      for (std::size_t asg = 0; asg < layout[m].count; ++asg) {
        // digit j of asg in base |M|, leftmost most significant
        std::size_t v = asg;
        for (int k = n - 1; k > j; --k) v /= static_cast<std::size_t>(gens[m].size());
        coords[layout[m].offset + asg] = static_cast<Element>(v % static_cast<std::size_t>(gens[m].size()));
      }
    }
    generators.push_back(intern(std::move(coords)));
  }

  auto pointwise = [&](std::size_t s, std::span<const Element> args) {
    std::vector<Element> coords(width);
    std::vector<Element> comp(args.size());
    for (std::size_t m = 0; m < gens.size(); ++m)
      for (std::size_t asg = 0; asg < layout[m].count; ++asg) {
        std::size_t c = layout[m].offset + asg;
        for (std::size_t i = 0; i < args.size(); ++i)
          comp[i] = elems[static_cast<std::size_t>(args[i])][c];
        coords[c] = gens[m].apply(s, comp);
      }
    return coords;
  };

  for (std::size_t s = 0; s < sig.size(); ++s)
    if (sig[s].arity == 0) intern(pointwise(s, {}));
  if (list.empty()) throw InputError("free algebra on 0 generators is empty (no constants)");

  std::size_t processed = 0;
  detail::saturate(gens[0], list, processed, [&](std::size_t s, std::span<const Element> args) {
    intern(pointwise(s, args));
    return true;
  });

  // Discovery order may not match the saturation order of the table fill;
  // tables are rebuilt from the finished element list.
  const int size = static_cast<int>(elems.size());
  std::vector<std::vector<Element>> tables(sig.size());
  for (std::size_t s = 0; s < sig.size(); ++s) {
    std::size_t entries = 1;
    for (int i = 0; i < sig[s].arity; ++i) {
      if (entries > caps.table_entries / static_cast<std::size_t>(size))
        throw CapExceeded("free algebra table entries", caps.table_entries + 1, caps.table_entries);
      entries *= static_cast<std::size_t>(size);
    }
    tables[s].reserve(entries);
    for_each_tuple(size, sig[s].arity, [&](std::span<const Element> args) {
      tables[s].push_back(index.at(pointwise(s, args)));
    });
  }

  std::vector<std::string> labels(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) labels[i] = "t" + std::to_string(i);
  for (int j = n - 1; j >= 0; --j) labels[static_cast<std::size_t>(generators[static_cast<std::size_t>(j)])] = "x" + std::to_string(j);

  std::string name = "F(" + std::to_string(n) + ")";
  return {FiniteAlgebra(name, size, sig, std::move(tables), std::move(labels)), generators,
          std::move(elems)};
}

}  // namespace coprod
