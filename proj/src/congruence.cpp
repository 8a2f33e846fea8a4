#include <map>
#include <numeric>

#include "coprod/algebra.hpp"

namespace coprod {

Congruence Congruence::from_blocks(const std::vector<int>& blocks) {
  Congruence c;
  std::map<int, int> renumber;
  c.block_.reserve(blocks.size());
  for (int b : blocks) {
    auto [it, inserted] = renumber.emplace(b, static_cast<int>(renumber.size()));
    c.block_.push_back(it->second);
  }
  c.num_blocks_ = static_cast<int>(renumber.size());
  return c;
}

Congruence Congruence::identity(int n) {
  std::vector<int> b(static_cast<std::size_t>(n));
  std::iota(b.begin(), b.end(), 0);
  return from_blocks(b);
}

Congruence Congruence::all(int n) { return from_blocks(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Congruence Congruence::kernel(const std::vector<Element>& map) { return from_blocks(map); }

Congruence Congruence::meet(const Congruence& o) const {
  if (o.size() != size()) throw InputError("meet of partitions on different sets");
  std::vector<int> key(block_.size());
  for (std::size_t i = 0; i < block_.size(); ++i) key[i] = block_[i] * o.num_blocks_ + o.block_[i];
  return from_blocks(key);
}

bool Congruence::refines(const Congruence& o) const {
  if (o.size() != size()) return false;
  std::vector<int> target(static_cast<std::size_t>(num_blocks_), -1);
  for (std::size_t i = 0; i < block_.size(); ++i) {
    int& t = target[static_cast<std::size_t>(block_[i])];
    if (t == -1)
      t = o.block_[i];
    else if (t != o.block_[i])
      return false;
  }
  return true;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x < y) std::swap(x, y);
    parent[static_cast<std::size_t>(x)] = y;
    return true;
  }
};

}  // namespace

Congruence congruence_generated(const FiniteAlgebra& a,
                                const std::vector<std::pair<Element, Element>>& pairs) {
  UnionFind uf(a.size());
  for (auto [x, y] : pairs) {
    if (x < 0 || y < 0 || x >= a.size() || y >= a.size())
      throw InputError("congruence_generated: element out of range");
    uf.unite(x, y);
  }
  // A partition is compatible iff replacing any single argument by its block
  // representative keeps the result in the same block.
  const auto& sig = a.signature();
  std::vector<Element> moved;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < sig.size(); ++s) {
      if (sig[s].arity == 0) continue;
      for_each_tuple(a.size(), sig[s].arity, [&](std::span<const Element> args) {
        Element base = a.apply(s, args);
        moved.assign(args.begin(), args.end());
        for (std::size_t i = 0; i < args.size(); ++i) {
          int r = uf.find(args[i]);
          if (r == args[i]) continue;
          moved[i] = r;
          if (uf.unite(base, a.apply(s, moved))) changed = true;
          moved[i] = args[i];
        }
      });
    }
  }
  std::vector<int> blocks(static_cast<std::size_t>(a.size()));
  for (Element e = 0; e < a.size(); ++e) blocks[static_cast<std::size_t>(e)] = uf.find(e);
  return Congruence::from_blocks(blocks);
}

}  // namespace coprod
