#include <algorithm>
#include <set>
#include <unordered_set>

#include "coprod/algebra.hpp"
#include "saturate.hpp"

namespace coprod {

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i].arity < 0) throw InputError("negative arity for '" + symbols_[i].name + "'");
    if (symbols_[i].name.empty()) throw InputError("empty symbol name");
    for (std::size_t j = 0; j < i; ++j)
      if (symbols_[j].name == symbols_[i].name)
        throw InputError("duplicate symbol '" + symbols_[i].name + "'");
  }
}

std::optional<std::size_t> Signature::find(const std::string& name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

std::size_t tuple_index(std::span<const Element> args, std::size_t radix) {
  std::size_t idx = 0;
  for (Element e : args) idx = idx * radix + static_cast<std::size_t>(e);
  return idx;
}

namespace {

std::size_t checked_pow(std::size_t base, int exp, std::size_t cap, const std::string& what) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) throw CapExceeded(what, cap + 1, cap);
    r *= base;
  }
  return r;
}

}  // namespace

void for_each_tuple(int n, int arity, const std::function<void(std::span<const Element>)>& fn) {
  std::vector<Element> t(static_cast<std::size_t>(arity), 0);
  if (arity > 0 && n <= 0) return;
  for (;;) {
    fn(t);
    int i = arity - 1;
    for (; i >= 0; --i) {
      if (++t[i] < n) break;
      t[i] = 0;
    }
    if (i < 0) return;
  }
}

FiniteAlgebra::FiniteAlgebra(std::string name, int size, Signature sig,
                             std::vector<std::vector<Element>> tables,
                             std::vector<std::string> labels)
    : name_(std::move(name)),
      size_(size),
      sig_(std::move(sig)),
      tables_(std::move(tables)),
      labels_(std::move(labels)) {
  if (size_ <= 0) throw InputError("algebra '" + name_ + "' must have positive size");
  if (tables_.size() != sig_.size())
    throw InputError("algebra '" + name_ + "': expected " + std::to_string(sig_.size()) +
                     " tables, got " + std::to_string(tables_.size()));
  for (std::size_t s = 0; s < sig_.size(); ++s) {
    std::size_t expected = 1;
    for (int i = 0; i < sig_[s].arity; ++i) expected *= static_cast<std::size_t>(size_);
    if (tables_[s].size() != expected)
      throw InputError("algebra '" + name_ + "': table '" + sig_[s].name + "' length " +
                       std::to_string(tables_[s].size()) + ", expected " +
                       std::to_string(expected));
    for (Element v : tables_[s])
      if (v < 0 || v >= size_)
        throw InputError("algebra '" + name_ + "': table '" + sig_[s].name + "' entry " +
                         std::to_string(v) + " out of range");
  }
  if (!labels_.empty() && labels_.size() != static_cast<std::size_t>(size_))
    throw InputError("algebra '" + name_ + "': " + std::to_string(labels_.size()) +
                     " labels for " + std::to_string(size_) + " elements");
}

FiniteAlgebra FiniteAlgebra::from_functions(std::string name, int size, Signature sig,
                                            const std::vector<OpFn>& ops,
                                            std::vector<std::string> labels) {
  if (ops.size() != sig.size()) throw InputError("from_functions: one function per symbol");
  std::vector<std::vector<Element>> tables(sig.size());
  for (std::size_t s = 0; s < sig.size(); ++s)
    for_each_tuple(size, sig[s].arity,
                   [&](std::span<const Element> args) { tables[s].push_back(ops[s](args)); });
  return FiniteAlgebra(std::move(name), size, std::move(sig), std::move(tables),
                       std::move(labels));
}

std::string FiniteAlgebra::label(Element e) const {
  if (labels_.empty()) return std::to_string(e);
  return labels_[static_cast<std::size_t>(e)];
}

std::optional<Element> FiniteAlgebra::find_label(const std::string& label) const {
  for (Element e = 0; e < size_; ++e)
    if (this->label(e) == label) return e;
  return std::nullopt;
}

Element FiniteAlgebra::apply(std::size_t sym, std::span<const Element> args) const {
  return tables_[sym][tuple_index(args, static_cast<std::size_t>(size_))];
}

Element FiniteAlgebra::apply(const std::string& sym, std::initializer_list<Element> args) const {
  auto s = sig_.find(sym);
  if (!s) throw InputError("unknown symbol '" + sym + "' in algebra '" + name_ + "'");
  if (static_cast<std::size_t>(sig_[*s].arity) != args.size())
    throw InputError("arity mismatch for '" + sym + "'");
  return apply(*s, args);
}

FiniteAlgebra FiniteAlgebra::renamed(std::string name) const {
  FiniteAlgebra c = *this;
  c.name_ = std::move(name);
  return c;
}

FiniteAlgebra FiniteAlgebra::relabeled(std::vector<std::string> labels) const {
  return FiniteAlgebra(name_, size_, sig_, tables_, std::move(labels));
}

// ---------------------------------------------------------------------------

Element eval_term(const FiniteAlgebra& a, const Term& t, std::span<const Element> args) {
  if (t.is_var()) {
    if (static_cast<std::size_t>(t.var_index()) >= args.size())
      throw InputError("term variable x" + std::to_string(t.var_index()) + " has no argument");
    Element e = args[static_cast<std::size_t>(t.var_index())];
    if (e < 0 || e >= a.size()) throw InputError("term argument out of range");
    return e;
  }
  auto s = a.signature().find(t.symbol());
  if (!s) throw InputError("unknown symbol '" + t.symbol() + "' in term");
  if (static_cast<std::size_t>(a.signature()[*s].arity) != t.args().size())
    throw InputError("symbol '" + t.symbol() + "' applied to " +
                     std::to_string(t.args().size()) + " arguments, arity is " +
                     std::to_string(a.signature()[*s].arity));
  std::vector<Element> vals;
  vals.reserve(t.args().size());
  for (const auto& sub : t.args()) vals.push_back(eval_term(a, sub, args));
  return a.apply(*s, vals);
}

std::vector<Element> term_table(const FiniteAlgebra& a, const Term& t, int arity) {
  if (t.num_vars() > arity)
    throw InputError("term " + t.to_string() + " uses more than " + std::to_string(arity) +
                     " variables");
  std::vector<Element> out;
  for_each_tuple(a.size(), arity,
                 [&](std::span<const Element> args) { out.push_back(eval_term(a, t, args)); });
  return out;
}

bool same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return a.signature() == b.signature();
}

void require_same_signature(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (!same_signature(a, b))
    throw InputError("signature mismatch between '" + a.name() + "' and '" + b.name() + "'");
}

bool is_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                     std::span<const Element> map) {
  if (!same_signature(a, b) || map.size() != static_cast<std::size_t>(a.size())) return false;
  for (Element v : map)
    if (v < 0 || v >= b.size()) return false;
  const auto& sig = a.signature();
  std::vector<Element> img;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    bool ok = true;
    for_each_tuple(a.size(), sig[s].arity, [&](std::span<const Element> args) {
      if (!ok) return;
      img.assign(args.size(), 0);
      for (std::size_t i = 0; i < args.size(); ++i) img[i] = map[static_cast<std::size_t>(args[i])];
      if (map[static_cast<std::size_t>(a.apply(s, args))] != b.apply(s, img)) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Subuniverses

namespace {

std::vector<Element> constants_of(const FiniteAlgebra& a) {
  std::vector<Element> out;
  for (std::size_t s = 0; s < a.signature().size(); ++s)
    if (a.signature()[s].arity == 0) out.push_back(a.table(s)[0]);
  return out;
}

}  // namespace

ElementSet subuniverse_closure(const FiniteAlgebra& a, const ElementSet& seed) {
  ElementSet in(static_cast<std::size_t>(a.size()));
  std::vector<Element> list;
  auto add = [&](Element e) {
    if (!in.contains(static_cast<std::size_t>(e))) {
      in.insert(static_cast<std::size_t>(e));
      list.push_back(e);
    }
  };
  for (Element c : constants_of(a)) add(c);
  for (int e : seed.elements()) add(e);
  std::size_t processed = 0;
  detail::saturate(a, list, processed, [&](std::size_t s, std::span<const Element> args) {
    add(a.apply(s, args));
    return true;
  });
  return in;
}

std::vector<Element> generating_set(const FiniteAlgebra& a) {
  std::vector<Element> gens;
  ElementSet cur = subuniverse_closure(a, ElementSet(static_cast<std::size_t>(a.size())));
  for (Element e = 0; e < a.size(); ++e) {
    if (cur.contains(static_cast<std::size_t>(e))) continue;
    gens.push_back(e);
    cur.insert(static_cast<std::size_t>(e));
    cur = subuniverse_closure(a, cur);
  }
  return gens;
}

std::vector<ElementSet> all_subuniverses(const FiniteAlgebra& a) {
  const auto n = static_cast<std::size_t>(a.size());
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> queue;
  ElementSet bottom = subuniverse_closure(a, ElementSet(n));
  seen.insert(bottom);
  queue.push_back(bottom);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    ElementSet cur = queue[q];
    for (std::size_t e = 0; e < n; ++e) {
      if (cur.contains(e)) continue;
      ElementSet seed = cur;
      seed.insert(e);
      ElementSet next = subuniverse_closure(a, seed);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(queue.begin(), queue.end(), [](const ElementSet& x, const ElementSet& y) {
    if (x.count() != y.count()) return x.count() < y.count();
    return x < y;
  });
  return queue;
}

Subalgebra subalgebra(const FiniteAlgebra& a, const ElementSet& universe) {
  if (universe != subuniverse_closure(a, universe))
    throw InputError("subalgebra: set is not a subuniverse of '" + a.name() + "'");
  std::vector<Element> emb = universe.elements();
  if (emb.empty()) throw InputError("subalgebra: empty subuniverse");
  std::vector<Element> index(static_cast<std::size_t>(a.size()), -1);
  for (std::size_t i = 0; i < emb.size(); ++i) index[static_cast<std::size_t>(emb[i])] = static_cast<Element>(i);
  const auto& sig = a.signature();
  const int m = static_cast<int>(emb.size());
  std::vector<std::vector<Element>> tables(sig.size());
  std::vector<Element> orig;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    for_each_tuple(m, sig[s].arity, [&](std::span<const Element> args) {
      orig.assign(args.size(), 0);
      for (std::size_t i = 0; i < args.size(); ++i) orig[i] = emb[static_cast<std::size_t>(args[i])];
      tables[s].push_back(index[static_cast<std::size_t>(a.apply(s, orig))]);
    });
  }
  std::vector<std::string> labels;
  std::string set_name;
  for (Element e : emb) {
    labels.push_back(a.label(e));
    set_name += (set_name.empty() ? "" : ",") + a.label(e);
  }
  return {FiniteAlgebra(a.name() + "{" + set_name + "}", m, sig, std::move(tables), std::move(labels)),
          emb};
}

// ---------------------------------------------------------------------------
// Products and quotients

std::vector<Element> ProductAlgebra::decode(Element e) const {
  std::vector<Element> coords(radices.size());
  auto v = static_cast<std::size_t>(e);
  for (std::size_t i = radices.size(); i-- > 0;) {
    coords[i] = static_cast<Element>(v % static_cast<std::size_t>(radices[i]));
    v /= static_cast<std::size_t>(radices[i]);
  }
  return coords;
}

Element ProductAlgebra::encode(std::span<const Element> coords) const {
  std::size_t v = 0;
  for (std::size_t i = 0; i < radices.size(); ++i)
    v = v * static_cast<std::size_t>(radices[i]) + static_cast<std::size_t>(coords[i]);
  return static_cast<Element>(v);
}

ProductAlgebra direct_product(const std::vector<FiniteAlgebra>& factors, const Caps& caps) {
  for (std::size_t i = 1; i < factors.size(); ++i) require_same_signature(factors[0], factors[i]);
  ProductAlgebra p;
  std::size_t size = 1;
  for (const auto& f : factors) {
    auto r = static_cast<std::size_t>(f.size());
    if (size > caps.product_elements / r) {
      // report the full required size (saturating)
      long double req = 1;
      for (const auto& g : factors) req *= static_cast<long double>(g.size());
      throw CapExceeded("direct product size", static_cast<std::size_t>(std::min<long double>(
                                                   req, static_cast<long double>(SIZE_MAX))),
                        caps.product_elements);
    }
    size *= r;
    p.radices.push_back(f.size());
  }
  Signature sig = factors.empty() ? Signature() : factors[0].signature();
  const int n = static_cast<int>(size);
  std::vector<std::vector<Element>> coords(size);
  for (Element e = 0; e < n; ++e) coords[static_cast<std::size_t>(e)] = p.decode(e);

  std::vector<std::vector<Element>> tables(sig.size());
  std::vector<Element> comp, out(factors.size());
  for (std::size_t s = 0; s < sig.size(); ++s) {
    const int k = sig[s].arity;
    std::size_t entries = checked_pow(size, k, caps.table_entries, "product table entries");
    tables[s].reserve(entries);
    for_each_tuple(n, k, [&](std::span<const Element> args) {
      for (std::size_t f = 0; f < factors.size(); ++f) {
        comp.assign(args.size(), 0);
        for (std::size_t i = 0; i < args.size(); ++i)
          comp[i] = coords[static_cast<std::size_t>(args[i])][f];
        out[f] = factors[f].apply(s, comp);
      }
      tables[s].push_back(p.encode(out));
    });
  }
  std::vector<std::string> labels;
  std::string name;
  for (const auto& f : factors) name += (name.empty() ? "" : "x") + f.name();
  if (factors.empty()) name = "1";
  for (Element e = 0; e < n; ++e) {
    std::string l = "(";
    for (std::size_t f = 0; f < factors.size(); ++f)
      l += (f ? "," : "") + factors[f].label(coords[static_cast<std::size_t>(e)][f]);
    labels.push_back(l + ")");
  }
  p.algebra = FiniteAlgebra(name, n, std::move(sig), std::move(tables), std::move(labels));
  return p;
}

namespace {

// Builds the quotient tables; returns nullopt if theta is not compatible.
std::optional<std::vector<std::vector<Element>>> quotient_tables(const FiniteAlgebra& a,
                                                                 const Congruence& theta) {
  const auto& sig = a.signature();
  const int nb = theta.num_blocks();
  std::vector<std::vector<Element>> tables(sig.size());
  std::vector<Element> bt;
  for (std::size_t s = 0; s < sig.size(); ++s) {
    std::size_t entries = 1;
    for (int i = 0; i < sig[s].arity; ++i) entries *= static_cast<std::size_t>(nb);
    tables[s].assign(entries, -1);
    bool ok = true;
    for_each_tuple(a.size(), sig[s].arity, [&](std::span<const Element> args) {
      if (!ok) return;
      bt.assign(args.size(), 0);
      for (std::size_t i = 0; i < args.size(); ++i) bt[i] = theta.block(args[i]);
      auto& slot = tables[s][tuple_index(bt, static_cast<std::size_t>(nb))];
      Element r = theta.block(a.apply(s, args));
      if (slot == -1)
        slot = r;
      else if (slot != r)
        ok = false;
    });
    if (!ok) return std::nullopt;
  }
  return tables;
}

}  // namespace

bool is_compatible(const FiniteAlgebra& a, const Congruence& theta) {
  if (theta.size() != a.size()) return false;
  return quotient_tables(a, theta).has_value();
}

QuotientAlgebra quotient(const FiniteAlgebra& a, const Congruence& theta) {
  if (theta.size() != a.size())
    throw InputError("quotient: partition size does not match algebra '" + a.name() + "'");
  auto tables = quotient_tables(a, theta);
  if (!tables) throw InputError("quotient: partition is not compatible with '" + a.name() + "'");
  std::vector<std::string> labels(static_cast<std::size_t>(theta.num_blocks()));
  for (Element e = 0; e < a.size(); ++e) {
    auto& l = labels[static_cast<std::size_t>(theta.block(e))];
    l += (l.empty() ? "[" : ",") + a.label(e);
  }
  for (auto& l : labels) l += "]";
  QuotientAlgebra q{FiniteAlgebra(a.name() + "/theta", theta.num_blocks(), a.signature(),
                                  std::move(*tables), std::move(labels)),
                    theta, Homomorphism{theta.blocks()}};
  return q;
}

}  // namespace coprod
