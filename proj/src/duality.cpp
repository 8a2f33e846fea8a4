#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <unordered_map>

#include "coprod/duality.hpp"

namespace coprod {

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Element>& v) const noexcept {
    std::size_t h = v.size();
    for (Element e : v) h = h * 1000003u ^ static_cast<std::size_t>(e);
    return h;
  }
};

using VecIndex = std::unordered_map<std::vector<Element>, int, VecHash>;

// r as a boolean matrix over M1 x M2.
std::vector<char> relation_matrix(const SortedRelation& r, int n2, int n1) {
  std::vector<char> m(static_cast<std::size_t>(n1 * n2), 0);
  for (auto [a, b] : r.pairs) m[static_cast<std::size_t>(a * n2 + b)] = 1;
  return m;
}

int find_point(const std::vector<std::vector<Element>>& points, const std::vector<Element>& map) {
  auto it = std::lower_bound(points.begin(), points.end(), map);
  if (it == points.end() || *it != map) return -1;
  return static_cast<int>(it - points.begin());
}

int sort_size(const AlterEgo& ego, std::size_t s) { return ego.gens.algebras[s].size(); }

}  // namespace

MultisortedStructure natural_dual(const FiniteAlgebra& a, const AlterEgo& ego) {
  const auto& sorts = ego.gens.algebras;
  if (!in_isp(a, sorts))
    throw InputError("'" + a.name() + "' is not in the quasivariety generated by the sorts");
  MultisortedStructure x;
  for (const auto& m : sorts) {
    std::vector<std::vector<Element>> pts;
    for (auto& h : hom_enumerate(a, m)) pts.push_back(std::move(h.map));
    x.sort_sizes.push_back(static_cast<int>(pts.size()));
    x.point_maps.push_back(std::move(pts));
  }
  for (const auto& r : ego.relations) {
    const int n1 = x.sort_sizes[r.source], n2 = x.sort_sizes[r.target];
    const int m2 = sort_size(ego, r.target);
    auto rm = relation_matrix(r, m2, sort_size(ego, r.source));
    std::vector<char> lifted(static_cast<std::size_t>(n1 * n2), 0);
    for (int p = 0; p < n1; ++p)
      for (int q = 0; q < n2; ++q) {
        const auto& xp = x.point_maps[r.source][static_cast<std::size_t>(p)];
        const auto& xq = x.point_maps[r.target][static_cast<std::size_t>(q)];
        bool ok = true;
        for (std::size_t e = 0; e < xp.size() && ok; ++e)
          ok = rm[static_cast<std::size_t>(xp[e] * m2 + xq[e])] != 0;
        lifted[static_cast<std::size_t>(p * n2 + q)] = ok;
      }
    x.relations.push_back(std::move(lifted));
  }
  for (const auto& op : ego.operations) {
    std::vector<int> img;
    for (const auto& xp : x.point_maps[op.source]) {
      std::vector<Element> comp(xp.size());
      for (std::size_t e = 0; e < xp.size(); ++e)
        comp[e] = op.map.map[static_cast<std::size_t>(xp[e])];
      img.push_back(find_point(x.point_maps[op.target], comp));
    }
    x.operations.push_back(std::move(img));
  }
  return x;
}

MultisortedStructure structure_product(const std::vector<MultisortedStructure>& xs,
                                       const AlterEgo& ego, const Caps& caps) {
  const auto nsorts = ego.gens.num_sorts();
  MultisortedStructure p;
  for (std::size_t s = 0; s < nsorts; ++s) {
    std::size_t size = 1;
    for (const auto& x : xs) {
      auto r = static_cast<std::size_t>(x.sort_sizes[s]);
      if (r != 0 && size > caps.structure_points / r)
        throw CapExceeded("product structure points in sort " + std::to_string(s), size * r,
                          caps.structure_points);
      size *= r;
    }
    p.sort_sizes.push_back(static_cast<int>(size));
    std::vector<std::vector<int>> tuples(size, std::vector<int>(xs.size()));
    for (std::size_t e = 0; e < size; ++e) {
      std::size_t v = e;
      for (std::size_t i = xs.size(); i-- > 0;) {
        auto r = static_cast<std::size_t>(xs[i].sort_sizes[s]);
        tuples[e][i] = static_cast<int>(v % r);
        v /= r;
      }
    }
    p.point_tuples.push_back(std::move(tuples));
  }
  auto encode = [&](std::size_t s, const std::vector<int>& comps) {
    std::size_t v = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      v = v * static_cast<std::size_t>(xs[i].sort_sizes[s]) + static_cast<std::size_t>(comps[i]);
    return static_cast<int>(v);
  };
  for (std::size_t r = 0; r < ego.relations.size(); ++r) {
    const auto s1 = ego.relations[r].source, s2 = ego.relations[r].target;
    const int n1 = p.sort_sizes[s1], n2 = p.sort_sizes[s2];
    std::vector<char> lifted(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n2), 0);
    for (int a = 0; a < n1; ++a)
      for (int b = 0; b < n2; ++b) {
        bool ok = true;
        for (std::size_t i = 0; i < xs.size() && ok; ++i)
          ok = xs[i].related(r, p.point_tuples[s1][static_cast<std::size_t>(a)][i],
                             p.point_tuples[s2][static_cast<std::size_t>(b)][i], xs[i].sort_sizes[s2]);
        lifted[static_cast<std::size_t>(a) * static_cast<std::size_t>(n2) + static_cast<std::size_t>(b)] = ok;
      }
    p.relations.push_back(std::move(lifted));
  }
  for (std::size_t o = 0; o < ego.operations.size(); ++o) {
    const auto s1 = ego.operations[o].source, s2 = ego.operations[o].target;
    std::vector<int> img;
    for (const auto& comps : p.point_tuples[s1]) {
      std::vector<int> out(xs.size());
      for (std::size_t i = 0; i < xs.size(); ++i)
        out[i] = xs[i].operations[o][static_cast<std::size_t>(comps[i])];
      img.push_back(encode(s2, out));
    }
    p.operations.push_back(std::move(img));
  }
  return p;
}

// ---------------------------------------------------------------------------
// E(X): constraint search over one variable per (sort, point), domains as
// 64-bit masks over the sort's elements.

namespace {

class MorphismSearch {
 public:
  MorphismSearch(const MultisortedStructure& x, const AlterEgo& ego, const Caps& caps)
      : x_(x), ego_(ego), caps_(caps) {
    const auto nsorts = ego.gens.num_sorts();
    for (std::size_t s = 0; s < nsorts; ++s) {
      if (sort_size(ego, s) > 64)
        throw CapExceeded("sort size for morphism search", static_cast<std::size_t>(sort_size(ego, s)), 64);
      offset_.push_back(static_cast<int>(var_sort_.size()));
      for (int p = 0; p < x.sort_sizes[s]; ++p) var_sort_.push_back(s);
    }
    adj_.resize(var_sort_.size());
    // Relations: succ/pred masks per element.
    for (std::size_t r = 0; r < ego.relations.size(); ++r) {
      const auto& rel = ego.relations[r];
      std::vector<std::uint64_t> succ(static_cast<std::size_t>(sort_size(ego, rel.source)), 0);
      std::vector<std::uint64_t> pred(static_cast<std::size_t>(sort_size(ego, rel.target)), 0);
      for (auto [a, b] : rel.pairs) {
        succ[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        pred[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
      }
      const auto t = tables_.size();
      tables_.push_back({std::move(succ), std::move(pred)});
      const int n2 = x.sort_sizes[rel.target];
      for (int p = 0; p < x.sort_sizes[rel.source]; ++p)
        for (int q = 0; q < n2; ++q)
          if (x.related(r, p, q, n2)) add_constraint(offset_[rel.source] + p, offset_[rel.target] + q, t);
    }
    // Operations: y = h(x) as a relation given by the graph of h.
    for (std::size_t o = 0; o < ego.operations.size(); ++o) {
      const auto& op = ego.operations[o];
      std::vector<std::uint64_t> succ(static_cast<std::size_t>(sort_size(ego, op.source)), 0);
      std::vector<std::uint64_t> pred(static_cast<std::size_t>(sort_size(ego, op.target)), 0);
      for (Element a = 0; a < sort_size(ego, op.source); ++a) {
        Element b = op.map.map[static_cast<std::size_t>(a)];
        succ[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
        pred[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
      }
      const auto t = tables_.size();
      tables_.push_back({std::move(succ), std::move(pred)});
      for (int p = 0; p < x.sort_sizes[op.source]; ++p)
        add_constraint(offset_[op.source] + p, offset_[op.target] + x.operations[o][static_cast<std::size_t>(p)], t);
    }
  }

  std::vector<std::vector<Element>> run() {
    std::vector<std::uint64_t> dom(var_sort_.size());
    for (std::size_t v = 0; v < dom.size(); ++v) {
      const int n = sort_size(ego_, var_sort_[v]);
      dom[v] = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }
    std::vector<int> all(var_sort_.size());
    for (std::size_t v = 0; v < all.size(); ++v) all[v] = static_cast<int>(v);
    if (propagate(dom, all)) search(dom);
    std::sort(solutions_.begin(), solutions_.end());
    return solutions_;
  }

  std::size_t nodes() const { return nodes_; }
  const std::vector<int>& offsets() const { return offset_; }

 private:
  struct Table {
    std::vector<std::uint64_t> succ, pred;
  };
  struct Constraint {
    int x, y;
    std::size_t table;
  };

  void add_constraint(int x, int y, std::size_t t) {
    const auto c = cons_.size();
    cons_.push_back({x, y, t});
    adj_[static_cast<std::size_t>(x)].push_back(c);
    if (y != x) adj_[static_cast<std::size_t>(y)].push_back(c);
  }

  static std::uint64_t image(const std::vector<std::uint64_t>& m, std::uint64_t d) {
    std::uint64_t out = 0;
    while (d) {
      out |= m[static_cast<std::size_t>(std::countr_zero(d))];
      d &= d - 1;
    }
    return out;
  }

  bool propagate(std::vector<std::uint64_t>& dom, std::vector<int> queue) const {
    std::vector<char> queued(dom.size(), 0);
    for (int v : queue) queued[static_cast<std::size_t>(v)] = 1;
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      queued[static_cast<std::size_t>(v)] = 0;
      for (auto ci : adj_[static_cast<std::size_t>(v)]) {
        const auto& c = cons_[ci];
        const auto& t = tables_[c.table];
        auto& dx = dom[static_cast<std::size_t>(c.x)];
        auto& dy = dom[static_cast<std::size_t>(c.y)];
        std::uint64_t ny = dy & image(t.succ, dx);
        if (ny != dy) {
          dy = ny;
          if (!dy) return false;
          if (!queued[static_cast<std::size_t>(c.y)]) {
            queued[static_cast<std::size_t>(c.y)] = 1;
            queue.push_back(c.y);
          }
        }
        std::uint64_t nx = dx & image(t.pred, dy);
        if (nx != dx) {
          dx = nx;
          if (!dx) return false;
          if (!queued[static_cast<std::size_t>(c.x)]) {
            queued[static_cast<std::size_t>(c.x)] = 1;
            queue.push_back(c.x);
          }
        }
      }
    }
    return true;
  }

  void search(const std::vector<std::uint64_t>& dom) {
    std::size_t v = 0;
    while (v < dom.size() && std::popcount(dom[v]) == 1) ++v;
    if (v == dom.size()) {
      std::vector<Element> sol(dom.size());
      for (std::size_t i = 0; i < dom.size(); ++i) sol[i] = std::countr_zero(dom[i]);
      solutions_.push_back(std::move(sol));
      return;
    }
    std::uint64_t d = dom[v];
    while (d) {
      const int e = std::countr_zero(d);
      d &= d - 1;
      if (++nodes_ > caps_.e_search_nodes)
        throw CapExceeded("morphism search nodes", nodes_, caps_.e_search_nodes);
      auto next = dom;
      next[v] = std::uint64_t{1} << e;
      if (propagate(next, {static_cast<int>(v)})) search(next);
    }
  }

  const MultisortedStructure& x_;
  const AlterEgo& ego_;
  const Caps& caps_;
  std::vector<int> offset_;
  std::vector<std::size_t> var_sort_;
  std::vector<Table> tables_;
  std::vector<Constraint> cons_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::vector<Element>> solutions_;
  std::size_t nodes_ = 0;
};

}  // namespace

EResult e_functor(const MultisortedStructure& x, const AlterEgo& ego, const Caps& caps) {
  MorphismSearch search(x, ego, caps);
  auto sols = search.run();
  const auto& offs = search.offsets();
  const auto nsorts = ego.gens.num_sorts();
  const auto& sig = ego.gens.algebras[0].signature();
  if (sols.size() > caps.product_elements)
    throw CapExceeded("E(X) size", sols.size(), caps.product_elements);
  const int n = static_cast<int>(sols.size());

  VecIndex index;
  for (int i = 0; i < n; ++i) index.emplace(sols[static_cast<std::size_t>(i)], i);
  const std::size_t width = sols.empty() ? 0 : sols[0].size();
  std::vector<std::size_t> var_sort;
  for (std::size_t s = 0; s < nsorts; ++s)
    for (int p = 0; p < x.sort_sizes[s]; ++p) var_sort.push_back(s);

  std::vector<std::vector<Element>> tables(sig.size());
  std::vector<Element> out(width), comp;
  for (std::size_t sym = 0; sym < sig.size(); ++sym) {
    std::size_t entries = 1;
    for (int i = 0; i < sig[sym].arity; ++i) {
      if (n > 0 && entries > caps.table_entries / static_cast<std::size_t>(n))
        throw CapExceeded("E(X) table entries", entries * static_cast<std::size_t>(n), caps.table_entries);
      entries *= static_cast<std::size_t>(n);
    }
    tables[sym].reserve(entries);
    for_each_tuple(n, sig[sym].arity, [&](std::span<const Element> args) {
      for (std::size_t v = 0; v < width; ++v) {
        comp.assign(args.size(), 0);
        for (std::size_t i = 0; i < args.size(); ++i) comp[i] = sols[static_cast<std::size_t>(args[i])][v];
        out[v] = ego.gens.algebras[var_sort[v]].apply(sym, comp);
      }
      auto it = index.find(out);
      if (it == index.end()) throw Error("E(X) is not closed under '" + sig[sym].name + "'");
      tables[sym].push_back(it->second);
    });
  }

  EResult r;
  for (const auto& sol : sols) {
    std::vector<std::vector<Element>> per_sort(nsorts);
    for (std::size_t s = 0; s < nsorts; ++s)
      per_sort[s].assign(sol.begin() + offs[s], sol.begin() + offs[s] + x.sort_sizes[s]);
    r.morphisms.push_back(std::move(per_sort));
  }
  if (n == 0) throw Error("E(X) is empty");
  r.algebra = FiniteAlgebra("E(X)", n, sig, std::move(tables));
  r.nodes = search.nodes();
  return r;
}

// ---------------------------------------------------------------------------

CoproductResult coproduct(const AlterEgo& ego, const std::vector<FiniteAlgebra>& family,
                          const Caps& caps) {
  CoproductResult res;
  for (const auto& b : family) {
    require_same_signature(ego.gens.algebras[0], b);
    res.factor_duals.push_back(natural_dual(b, ego));
  }
  res.dual = structure_product(res.factor_duals, ego, caps);
  auto e = e_functor(res.dual, ego, caps);
  const auto nsorts = ego.gens.num_sorts();

  VecIndex index;
  for (std::size_t i = 0; i < e.morphisms.size(); ++i) {
    std::vector<Element> flat;
    for (const auto& s : e.morphisms[i]) flat.insert(flat.end(), s.begin(), s.end());
    index.emplace(std::move(flat), static_cast<int>(i));
  }
  std::string name;
  for (const auto& b : family) name += (name.empty() ? "" : "+") + b.name();
  res.algebra = e.algebra.renamed("coprod(" + name + ")");

  for (std::size_t i = 0; i < family.size(); ++i) {
    Homomorphism eps;
    for (Element b = 0; b < family[i].size(); ++b) {
      std::vector<Element> flat;
      for (std::size_t s = 0; s < nsorts; ++s)
        for (const auto& comps : res.dual.point_tuples[s])
          flat.push_back(res.factor_duals[i].point_maps[s][static_cast<std::size_t>(comps[i])][static_cast<std::size_t>(b)]);
      auto it = index.find(flat);
      if (it == index.end()) throw Error("coproduct injection leaves E(X)");
      eps.map.push_back(it->second);
    }
    if (!is_homomorphism(family[i], res.algebra, eps.map))
      throw Error("coproduct injection is not a homomorphism");
    res.injections.push_back(std::move(eps));
  }

  res.universal_property = true;
  for (std::size_t s = 0; s < nsorts && res.universal_property; ++s) {
    const auto& m = ego.gens.algebras[s];
    std::size_t expected = 1;
    for (const auto& b : family) expected *= hom_enumerate(b, m).size();
    std::set<std::vector<Element>> tuples;
    auto homs = hom_enumerate(res.algebra, m);
    for (const auto& h : homs) {
      std::vector<Element> t;
      for (const auto& eps : res.injections)
        for (Element v : eps.map) t.push_back(h.map[static_cast<std::size_t>(v)]);
      tuples.insert(std::move(t));
    }
    res.universal_property = tuples.size() == homs.size() && homs.size() == expected;
  }
  return res;
}

// ---------------------------------------------------------------------------

namespace {

ElementSet filter_of(const CarrierMap& w, const std::vector<Element>& x) {
  ElementSet f(x.size());
  for (std::size_t e = 0; e < x.size(); ++e)
    if (w.value(x[e])) f.insert(e);
  return f;
}

int filter_index(const std::vector<PrimeFilter>& fs, const ElementSet& f) {
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].members == f) return static_cast<int>(i);
  return -1;
}

}  // namespace

RevEngResult reveng_priestley(const FiniteAlgebra& a, const AlterEgo& ego) {
  auto sep = sep_condition(ego.gens, ego.omega);
  if (!sep.holds) throw InputError("separation fails for the alter ego's carriers");
  auto x = natural_dual(a, ego);
  auto l = d_reduct(a, ego.gens.spec);
  auto filters = prime_filters(l);

  RevEngResult r;
  for (std::size_t w = 0; w < ego.omega.size(); ++w) {
    const auto s = ego.omega[w].sort;
    for (int p = 0; p < x.sort_sizes[s]; ++p) r.y.push_back({s, p, w});
  }
  const auto n = r.y.size();
  r.preceq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < ego.relations.size(); ++k) {
        const auto& rel = ego.relations[k];
        if (rel.omega1 != r.y[i].omega || rel.omega2 != r.y[j].omega) continue;
        if (x.related(k, r.y[i].point, r.y[j].point, x.sort_sizes[rel.target])) {
          r.preceq[i * n + j] = 1;
          break;
        }
      }
  auto pre = [&](std::size_t i, std::size_t j) { return r.preceq[i * n + j] != 0; };
  r.is_preorder = true;
  for (std::size_t i = 0; i < n && r.is_preorder; ++i) {
    r.is_preorder = pre(i, i);
    for (std::size_t j = 0; j < n && r.is_preorder; ++j)
      for (std::size_t k = 0; k < n && r.is_preorder; ++k)
        if (pre(i, j) && pre(j, k) && !pre(i, k)) r.is_preorder = false;
  }

  for (const auto& yp : r.y)
    r.phi.push_back(filter_index(
        filters, filter_of(ego.omega[yp.omega], x.point_maps[yp.sort][static_cast<std::size_t>(yp.point)])));
  if (!r.is_preorder) return r;

  std::vector<std::size_t> reps;
  r.class_of.assign(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (r.class_of[i] != -1) continue;
    r.class_of[i] = static_cast<int>(reps.size());
    for (std::size_t j = i + 1; j < n; ++j)
      if (pre(i, j) && pre(j, i)) r.class_of[j] = static_cast<int>(reps.size());
    reps.push_back(i);
  }
  const int q = static_cast<int>(reps.size());
  std::vector<char> m(static_cast<std::size_t>(q * q));
  std::vector<std::string> labels;
  for (int i = 0; i < q; ++i) {
    const auto& yp = r.y[reps[static_cast<std::size_t>(i)]];
    labels.push_back("[x" + std::to_string(yp.point) + ",w" + std::to_string(yp.omega) + "]");
    for (int j = 0; j < q; ++j)
      m[static_cast<std::size_t>(i * q + j)] = pre(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]);
  }
  r.quotient = FinitePoset(q, std::move(m), std::move(labels));

  // Φ: constant on classes, bijective onto H(U(A)), order-preserving and
  // reflecting.
  bool ok = static_cast<int>(filters.size()) == q;
  std::vector<int> class_phi(static_cast<std::size_t>(q), -1);
  for (std::size_t i = 0; i < n && ok; ++i) {
    auto& c = class_phi[static_cast<std::size_t>(r.class_of[i])];
    if (r.phi[i] < 0 || (c != -1 && c != r.phi[i])) ok = false;
    c = r.phi[i];
  }
  if (ok) {
    auto sorted = class_phi;
    std::sort(sorted.begin(), sorted.end());
    ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  }
  for (int i = 0; i < q && ok; ++i)
    for (int j = 0; j < q && ok; ++j)
      ok = r.quotient.leq(i, j) ==
           filters[static_cast<std::size_t>(class_phi[static_cast<std::size_t>(i)])].members.is_subset_of(
               filters[static_cast<std::size_t>(class_phi[static_cast<std::size_t>(j)])].members);
  r.phi_isomorphism = ok;
  r.abstract_isomorphism = poset_isomorphic(r.quotient, priestley_dual(l)).has_value();
  return r;
}

std::vector<std::vector<std::size_t>> lambda_map(const FiniteAlgebra& b, const AlterEgo& ego) {
  auto x = natural_dual(b, ego);
  auto filters = prime_filters(d_reduct(b, ego.gens.spec));
  std::vector<std::vector<std::size_t>> out(filters.size());
  for (std::size_t w = 0; w < ego.omega.size(); ++w) {
    const auto s = ego.omega[w].sort;
    for (const auto& pt : x.point_maps[s]) {
      int f = filter_index(filters, filter_of(ego.omega[w], pt));
      if (f < 0) continue;
      auto& set = out[static_cast<std::size_t>(f)];
      if (std::find(set.begin(), set.end(), w) == set.end()) set.push_back(w);
    }
  }
  for (auto& set : out) std::sort(set.begin(), set.end());
  return out;
}

IotaCheck iota_check(const AlterEgo& ego, const std::vector<FiniteAlgebra>& family,
                     const Caps& caps) {
  IotaCheck r;
  r.coproduct = coproduct(ego, family, caps);
  auto lc = d_reduct(r.coproduct.algebra, ego.gens.spec);
  auto fc = prime_filters(lc);
  std::vector<DistLatticeReduct> lbs;
  std::vector<std::vector<PrimeFilter>> fbs;
  std::vector<std::vector<int>> duals;
  for (std::size_t i = 0; i < family.size(); ++i) {
    lbs.push_back(d_reduct(family[i], ego.gens.spec));
    fbs.push_back(prime_filters(lbs.back()));
    duals.push_back(dual_of_hom(lbs.back(), lc, r.coproduct.injections[i].map));
  }
  for (std::size_t f = 0; f < fc.size(); ++f) {
    std::vector<int> t;
    for (const auto& d : duals) t.push_back(d[f]);
    r.iota.push_back(std::move(t));
  }

  std::size_t total = 1;
  for (const auto& fb : fbs) {
    if (!fb.empty() && total > caps.structure_points / fb.size())
      throw CapExceeded("prime filter tuples", total * fb.size(), caps.structure_points);
    total *= fb.size();
  }
  std::set<std::vector<int>> image(r.iota.begin(), r.iota.end());
  r.surjective = image.size() == total;
  r.order_embedding = true;
  for (std::size_t f = 0; f < fc.size() && r.order_embedding; ++f)
    for (std::size_t g = 0; g < fc.size() && r.order_embedding; ++g) {
      bool below = true;
      for (std::size_t i = 0; i < family.size() && below; ++i)
        below = fbs[i][static_cast<std::size_t>(r.iota[f][i])].members.is_subset_of(
            fbs[i][static_cast<std::size_t>(r.iota[g][i])].members);
      r.order_embedding = fc[f].members.is_subset_of(fc[g].members) == below;
    }

  std::vector<std::vector<std::vector<std::size_t>>> lambdas;
  for (const auto& b : family) lambdas.push_back(lambda_map(b, ego));
  std::vector<int> t(family.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    std::size_t v = k;
    for (std::size_t i = family.size(); i-- > 0;) {
      t[i] = static_cast<int>(v % fbs[i].size());
      v /= fbs[i].size();
    }
    std::vector<std::size_t> common(ego.omega.size());
    for (std::size_t w = 0; w < common.size(); ++w) common[w] = w;
    for (std::size_t i = 0; i < family.size(); ++i) {
      const auto& lam = lambdas[i][static_cast<std::size_t>(t[i])];
      std::vector<std::size_t> next;
      std::set_intersection(common.begin(), common.end(), lam.begin(), lam.end(),
                            std::back_inserter(next));
      common = std::move(next);
    }
    if (!common.empty()) r.lambda_image.push_back(t);
  }
  r.image_matches_lambda =
      std::set<std::vector<int>>(r.lambda_image.begin(), r.lambda_image.end()) == image;
  return r;
}

bool lemma31_check(const AlterEgo& ego, const std::vector<FiniteAlgebra>& family,
                   const Caps& caps) {
  auto cp = coproduct(ego, family, caps);
  auto e = e_functor(cp.dual, ego, caps);  // same element order as cp.algebra
  std::vector<std::vector<PrimeFilter>> fbs;
  for (const auto& b : family) fbs.push_back(prime_filters(d_reduct(b, ego.gens.spec)));
  for (std::size_t w = 0; w < ego.omega.size(); ++w) {
    const auto& om = ego.omega[w];
    const auto s = om.sort;
    for (const auto& x : hom_enumerate(cp.algebra, ego.gens.algebras[s])) {
      // route 1: ι(ω ∘ x) = preimages under each ε_B
      std::vector<int> via_iota;
      for (std::size_t i = 0; i < family.size(); ++i) {
        std::vector<Element> xe;
        for (Element b : cp.injections[i].map) xe.push_back(x.map[static_cast<std::size_t>(b)]);
        via_iota.push_back(filter_index(fbs[i], filter_of(om, xe)));
      }
      // route 2: x is evaluation at a product point p; use its components
      int point = -1;
      for (int p = 0; p < cp.dual.sort_sizes[s] && point < 0; ++p) {
        bool eval = true;
        for (std::size_t c = 0; c < e.morphisms.size() && eval; ++c)
          eval = e.morphisms[c][s][static_cast<std::size_t>(p)] == x.map[c];
        if (eval) point = p;
      }
      if (point < 0) return false;
      std::vector<int> direct;
      for (std::size_t i = 0; i < family.size(); ++i) {
        const int comp = cp.dual.point_tuples[s][static_cast<std::size_t>(point)][i];
        direct.push_back(filter_index(fbs[i], filter_of(om, cp.factor_duals[i].point_maps[s][static_cast<std::size_t>(comp)])));
      }
      if (via_iota != direct) return false;
    }
  }
  return true;
}

ReflectorResult reflector(const FiniteAlgebra& a, const std::vector<FiniteAlgebra>& target) {
  Congruence theta = Congruence::all(a.size());
  std::size_t count = 0;
  for (const auto& m : target) {
    require_same_signature(a, m);
    for (const auto& h : hom_enumerate(a, m)) {
      theta = theta.meet(Congruence::kernel(h.map));
      ++count;
    }
  }
  ReflectorResult r{quotient(a, theta), theta.num_blocks() == 1, count};
  return r;
}

}  // namespace coprod
