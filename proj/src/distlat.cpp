#include <algorithm>

#include "coprod/distlat.hpp"

namespace coprod {

DReductSpec DReductSpec::standard() {
  return {Term::apply("meet", {Term::var(0), Term::var(1)}),
          Term::apply("join", {Term::var(0), Term::var(1)}), Term::apply("bot"),
          Term::apply("top")};
}

namespace {

bool literal_app(const Term& t, std::size_t arity) {
  if (t.is_var() || t.args().size() != arity) return false;
  for (std::size_t i = 0; i < arity; ++i)
    if (!t.args()[i].is_var() || t.args()[i].var_index() != static_cast<int>(i)) return false;
  return true;
}

}  // namespace

bool DReductSpec::is_literal() const {
  return literal_app(meet, 2) && literal_app(join, 2) && literal_app(bot, 0) &&
         literal_app(top, 0);
}

DistLatticeReduct::DistLatticeReduct(int size, std::vector<Element> meet, std::vector<Element> join,
                                     Element bot, Element top, std::vector<std::string> labels)
    : size_(size),
      meet_(std::move(meet)),
      join_(std::move(join)),
      bot_(bot),
      top_(top),
      labels_(std::move(labels)) {}

std::string DistLatticeReduct::label(Element x) const {
  if (labels_.empty()) return std::to_string(x);
  return labels_[static_cast<std::size_t>(x)];
}

bool DistLatticeReduct::is_join_irreducible(Element x) const {
  if (x == bot_) return false;
  // x is join-irreducible iff the join of everything strictly below it is
  // strictly below it.
  Element below = bot_;
  for (Element y = 0; y < size_; ++y)
    if (y != x && leq(y, x)) below = join(below, y);
  return below != x;
}

FinitePoset DistLatticeReduct::order() const {
  std::vector<char> m(static_cast<std::size_t>(size_ * size_));
  for (Element x = 0; x < size_; ++x)
    for (Element y = 0; y < size_; ++y) m[idx(x, y)] = leq(x, y);
  return FinitePoset(size_, std::move(m), labels_);
}

FiniteAlgebra DistLatticeReduct::to_algebra(const std::string& name) const {
  Signature sig({{"meet", 2}, {"join", 2}, {"bot", 0}, {"top", 0}});
  return FiniteAlgebra(name, size_, sig, {meet_, join_, {bot_}, {top_}}, labels_);
}

DistLatticeReduct d_reduct(const FiniteAlgebra& a, const DReductSpec& spec) {
  if (spec.meet.num_vars() > 2 || spec.join.num_vars() > 2)
    throw InputError("d_reduct: meet/join terms may only use x0, x1");
  if (spec.bot.num_vars() > 0 || spec.top.num_vars() > 0)
    throw InputError("d_reduct: bound terms must be ground");
  const int n = a.size();
  std::vector<Element> m = term_table(a, spec.meet, 2);
  std::vector<Element> j = term_table(a, spec.join, 2);
  Element bot = eval_term(a, spec.bot, {});
  Element top = eval_term(a, spec.top, {});
  DistLatticeReduct l(n, m, j, bot, top, a.labels());

  auto fail = [&](const std::string& law, std::initializer_list<Element> w) {
    std::string msg = "d_reduct: '" + a.name() + "' violates " + law + " at (";
    bool first = true;
    for (Element e : w) {
      msg += (first ? "" : ",") + a.label(e);
      first = false;
    }
    throw InputError(msg + ")");
  };
  for (Element x = 0; x < n; ++x) {
    if (l.meet(x, x) != x) fail("meet idempotence", {x});
    if (l.join(x, x) != x) fail("join idempotence", {x});
    if (l.meet(x, bot) != bot) fail("x meet bot = bot", {x});
    if (l.join(x, top) != top) fail("x join top = top", {x});
    for (Element y = 0; y < n; ++y) {
      if (l.meet(x, y) != l.meet(y, x)) fail("meet commutativity", {x, y});
      if (l.join(x, y) != l.join(y, x)) fail("join commutativity", {x, y});
      if (l.meet(x, l.join(x, y)) != x) fail("absorption x meet (x join y) = x", {x, y});
      if (l.join(x, l.meet(x, y)) != x) fail("absorption x join (x meet y) = x", {x, y});
      for (Element z = 0; z < n; ++z) {
        if (l.meet(x, l.meet(y, z)) != l.meet(l.meet(x, y), z)) fail("meet associativity", {x, y, z});
        if (l.join(x, l.join(y, z)) != l.join(l.join(x, y), z)) fail("join associativity", {x, y, z});
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          fail("distributivity", {x, y, z});
      }
    }
  }
  return l;
}

std::vector<PrimeFilter> prime_filters(const DistLatticeReduct& l) {
  std::vector<PrimeFilter> out;
  for (Element j = 0; j < l.size(); ++j) {
    if (!l.is_join_irreducible(j)) continue;
    PrimeFilter f{j, ElementSet(static_cast<std::size_t>(l.size()))};
    for (Element x = 0; x < l.size(); ++x)
      if (l.leq(j, x)) f.members.insert(static_cast<std::size_t>(x));
    out.push_back(std::move(f));
  }
  return out;
}

FinitePoset priestley_dual(const DistLatticeReduct& l) {
  auto fs = prime_filters(l);
  const int k = static_cast<int>(fs.size());
  std::vector<char> m(static_cast<std::size_t>(k * k));
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    labels.push_back("^" + l.label(fs[static_cast<std::size_t>(i)].generator));
    for (int j = 0; j < k; ++j)
      m[static_cast<std::size_t>(i * k + j)] =
          fs[static_cast<std::size_t>(i)].members.is_subset_of(fs[static_cast<std::size_t>(j)].members);
  }
  return FinitePoset(k, std::move(m), std::move(labels));
}

bool is_lattice_hom(const DistLatticeReduct& from, const DistLatticeReduct& to,
                    const std::vector<Element>& f) {
  if (f.size() != static_cast<std::size_t>(from.size())) return false;
  for (Element v : f)
    if (v < 0 || v >= to.size()) return false;
  auto at = [&](Element x) { return f[static_cast<std::size_t>(x)]; };
  if (at(from.bot()) != to.bot() || at(from.top()) != to.top()) return false;
  for (Element x = 0; x < from.size(); ++x)
    for (Element y = 0; y < from.size(); ++y) {
      if (at(from.meet(x, y)) != to.meet(at(x), at(y))) return false;
      if (at(from.join(x, y)) != to.join(at(x), at(y))) return false;
    }
  return true;
}

std::vector<int> dual_of_hom(const DistLatticeReduct& from, const DistLatticeReduct& to,
                             const std::vector<Element>& f) {
  if (!is_lattice_hom(from, to, f))
    throw InputError("dual_of_hom: map is not a bounded lattice homomorphism");
  auto src = prime_filters(to);
  auto dst = prime_filters(from);
  std::vector<int> out;
  for (const auto& F : src) {
    ElementSet pre(static_cast<std::size_t>(from.size()));
    for (Element x = 0; x < from.size(); ++x)
      if (F.contains(f[static_cast<std::size_t>(x)])) pre.insert(static_cast<std::size_t>(x));
    auto it = std::find_if(dst.begin(), dst.end(),
                           [&](const PrimeFilter& g) { return g.members == pre; });
    // a preimage of a prime filter under a bounded lattice hom is prime
    out.push_back(static_cast<int>(it - dst.begin()));
  }
  return out;
}

UpsetLattice lattice_coproduct(const std::vector<DistLatticeReduct>& ls, const Caps& caps) {
  std::vector<FinitePoset> duals;
  for (const auto& l : ls) duals.push_back(priestley_dual(l));
  return upset_lattice(poset_product(duals, caps), caps);
}

}  // namespace coprod
