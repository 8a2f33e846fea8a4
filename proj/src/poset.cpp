#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "coprod/distlat.hpp"

namespace coprod {

FinitePoset::FinitePoset(int size, std::vector<char> leq, std::vector<std::string> labels,
                         bool validate)
    : size_(size), leq_(std::move(leq)), labels_(std::move(labels)) {
  if (leq_.size() != static_cast<std::size_t>(size_ * size_))
    throw InputError("poset: order matrix has wrong size");
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(size_))
    throw InputError("poset: wrong number of labels");
  if (!validate) return;
  for (int x = 0; x < size_; ++x) {
    if (!this->leq(x, x)) throw InputError("poset: order is not reflexive");
    for (int y = 0; y < size_; ++y) {
      if (x != y && this->leq(x, y) && this->leq(y, x)) throw InputError("poset: order is not antisymmetric");
      for (int z = 0; z < size_; ++z)
        if (this->leq(x, y) && this->leq(y, z) && !this->leq(x, z)) throw InputError("poset: order is not transitive");
    }
  }
}

std::string FinitePoset::label(int x) const {
  if (labels_.empty()) return std::to_string(x);
  return labels_[static_cast<std::size_t>(x)];
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size_; ++x)
    for (int y = 0; y < size_; ++y) {
      if (!less(x, y)) continue;
      bool between = false;
      for (int z = 0; z < size_ && !between; ++z) between = less(x, z) && less(z, y);
      if (!between) out.emplace_back(x, y);
    }
  return out;
}

bool FinitePoset::is_antichain() const {
  for (int x = 0; x < size_; ++x)
    for (int y = 0; y < size_; ++y)
      if (less(x, y)) return false;
  return true;
}

UpsetLattice upset_lattice(const FinitePoset& p, const Caps& caps) {
  const int n = p.size();
  // Decide points from the top down; a point may join the up-set only when
  // everything above it already has.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  auto above = [&](int x) {
    int c = 0;
    for (int y = 0; y < n; ++y) c += p.less(x, y);
    return c;
  };
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return above(x) < above(y); });

  std::vector<ElementSet> ups;
  ElementSet cur(static_cast<std::size_t>(n));
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) {
      if (ups.size() >= caps.upsets) throw CapExceeded("up-set count", ups.size() + 1, caps.upsets);
      ups.push_back(cur);
      return;
    }
    int x = order[i];
    rec(i + 1);
    for (int y = 0; y < n; ++y)
      if (p.less(x, y) && !cur.contains(static_cast<std::size_t>(y))) return;
    cur.insert(static_cast<std::size_t>(x));
    rec(i + 1);
    cur.erase(static_cast<std::size_t>(x));
  };
  rec(0);
  std::sort(ups.begin(), ups.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });

  const auto k = ups.size();
  if (k > 0 && k > caps.table_entries / k)
    throw CapExceeded("up-set lattice table entries", k * k, caps.table_entries);
  std::unordered_map<ElementSet, Element, ElementSetHash> index;
  for (std::size_t i = 0; i < k; ++i) index.emplace(ups[i], static_cast<Element>(i));
  std::vector<Element> meet(k * k), join(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      meet[i * k + j] = index.at(ups[i] & ups[j]);
      join[i * k + j] = index.at(ups[i] | ups[j]);
    }
  std::vector<std::string> labels;
  for (const auto& u : ups) {
    std::string l = "{";
    bool first = true;
    for (int e : u.elements()) {
      l += (first ? "" : ",") + p.label(e);
      first = false;
    }
    labels.push_back(l + "}");
  }
  return {DistLatticeReduct(static_cast<int>(k), std::move(meet), std::move(join), 0,
                            static_cast<Element>(k - 1), std::move(labels)),
          std::move(ups)};
}

bool is_order_embedding(const FinitePoset& p, const FinitePoset& q, const std::vector<int>& f) {
  if (f.size() != static_cast<std::size_t>(p.size())) return false;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != q.leq(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)]))
        return false;
  return true;
}

std::optional<std::vector<int>> poset_isomorphic(const FinitePoset& p, const FinitePoset& q) {
  const int n = p.size();
  if (n != q.size()) return std::nullopt;
  auto profile = [](const FinitePoset& r, int x) {
    int up = 0, down = 0;
    for (int y = 0; y < r.size(); ++y) {
      up += r.less(x, y);
      down += r.less(y, x);
    }
    return std::pair{up, down};
  };
  std::vector<std::pair<int, int>> pp, qp;
  for (int x = 0; x < n; ++x) {
    pp.push_back(profile(p, x));
    qp.push_back(profile(q, x));
  }
  {
    auto a = pp, b = qp;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<int> f(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> rec = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[static_cast<std::size_t>(y)] || pp[static_cast<std::size_t>(x)] != qp[static_cast<std::size_t>(y)]) continue;
      bool ok = true;
      for (int z = 0; z < x && ok; ++z) {
        int fz = f[static_cast<std::size_t>(z)];
        ok = p.leq(x, z) == q.leq(y, fz) && p.leq(z, x) == q.leq(fz, y);
      }
      if (!ok) continue;
      f[static_cast<std::size_t>(x)] = y;
      used[static_cast<std::size_t>(y)] = 1;
      if (rec(x + 1)) return true;
      used[static_cast<std::size_t>(y)] = 0;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return f;
}

FinitePoset poset_product(const std::vector<FinitePoset>& factors, const Caps& caps) {
  std::size_t size = 1;
  for (const auto& f : factors) {
    auto r = static_cast<std::size_t>(f.size());
    if (r != 0 && size > caps.structure_points / r)
      throw CapExceeded("poset product size", size * r, caps.structure_points);
    size *= r;
  }
  const int n = static_cast<int>(size);
  auto decode = [&](int e) {
    std::vector<int> c(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      c[i] = e % factors[i].size();
      e /= factors[i].size();
    }
    return c;
  };
  std::vector<std::vector<int>> coords;
  for (int e = 0; e < n; ++e) coords.push_back(decode(e));
  std::vector<char> m(size * size);
  std::vector<std::string> labels;
  for (int x = 0; x < n; ++x) {
    std::string l = "(";
    for (std::size_t i = 0; i < factors.size(); ++i)
      l += (i ? "," : "") + factors[i].label(coords[static_cast<std::size_t>(x)][i]);
    labels.push_back(l + ")");
    for (int y = 0; y < n; ++y) {
      bool le = true;
      for (std::size_t i = 0; i < factors.size() && le; ++i)
        le = factors[i].leq(coords[static_cast<std::size_t>(x)][i], coords[static_cast<std::size_t>(y)][i]);
      m[static_cast<std::size_t>(x) * size + static_cast<std::size_t>(y)] = le;
    }
  }
  // componentwise order of posets is a poset
  return FinitePoset(n, std::move(m), std::move(labels), false);
}

std::string poset_to_dot(const FinitePoset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int x = 0; x < p.size(); ++x) {
    std::string l = p.label(x);
    std::string esc;
    for (char c : l) {
      if (c == '"' || c == '\\') esc += '\\';
      esc += c;
    }
    os << "  n" << x << " [label=\"" << esc << "\"];\n";
  }
  for (auto [x, y] : p.covers()) os << "  n" << x << " -> n" << y << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace coprod
