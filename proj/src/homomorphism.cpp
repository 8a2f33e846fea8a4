#include <algorithm>

#include "coprod/algebra.hpp"
#include "saturate.hpp"

namespace coprod {

namespace {

// Partial map a -> b closed under the operations applied so far. `list`
// holds the elements of a whose image is fixed, in the order they were fixed.
struct PartialHom {
  std::vector<Element> map;
  std::vector<Element> list;
  std::vector<char> used;  // image already taken (injective search only)
  std::size_t processed = 0;
};

class HomSearch {
 public:
  HomSearch(const FiniteAlgebra& a, const FiniteAlgebra& b, bool injective)
      : a_(a), b_(b), injective_(injective), gens_(generating_set(a)) {}

  template <class Emit>
  void run(Emit&& emit) {
    if (!same_signature(a_, b_)) return;
    if (injective_ && a_.size() > b_.size()) return;
    PartialHom st;
    st.map.assign(static_cast<std::size_t>(a_.size()), -1);
    st.used.assign(static_cast<std::size_t>(b_.size()), 0);
    const auto& sig = a_.signature();
    for (std::size_t s = 0; s < sig.size(); ++s)
      if (sig[s].arity == 0 && !fix(st, a_.table(s)[0], b_.table(s)[0])) return;
    if (!propagate(st)) return;
    search(st, 0, emit);
  }

 private:
  bool fix(PartialHom& st, Element x, Element y) {
    auto& slot = st.map[static_cast<std::size_t>(x)];
    if (slot == y) return true;
    if (slot != -1) return false;
    if (injective_) {
      if (st.used[static_cast<std::size_t>(y)]) return false;
      st.used[static_cast<std::size_t>(y)] = 1;
    }
    slot = y;
    st.list.push_back(x);
    return true;
  }

  bool propagate(PartialHom& st) {
    std::vector<Element> img;
    return detail::saturate(a_, st.list, st.processed,
                            [&](std::size_t s, std::span<const Element> args) {
                              img.resize(args.size());
                              for (std::size_t i = 0; i < args.size(); ++i)
                                img[i] = st.map[static_cast<std::size_t>(args[i])];
                              return fix(st, a_.apply(s, args), b_.apply(s, img));
                            });
  }

  template <class Emit>
  void search(const PartialHom& st, std::size_t g, Emit& emit) {
    while (g < gens_.size() && st.map[static_cast<std::size_t>(gens_[g])] != -1) ++g;
    if (g == gens_.size()) {
      emit(st.map);
      return;
    }
    for (Element y = 0; y < b_.size(); ++y) {
      if (injective_ && st.used[static_cast<std::size_t>(y)]) continue;
      PartialHom next = st;
      if (!fix(next, gens_[g], y) || !propagate(next)) continue;
      search(next, g + 1, emit);
      if (stop_) return;
    }
  }

 public:
  bool stop_ = false;

 private:
  const FiniteAlgebra& a_;
  const FiniteAlgebra& b_;
  bool injective_;
  std::vector<Element> gens_;
};

}  // namespace

std::vector<Homomorphism> hom_enumerate(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::vector<Homomorphism> out;
  HomSearch search(a, b, false);
  search.run([&](const std::vector<Element>& m) { out.push_back(Homomorphism{m}); });
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Homomorphism> find_embedding(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  std::optional<Homomorphism> found;
  HomSearch search(a, b, true);
  search.run([&](const std::vector<Element>& m) {
    if (!found) found = Homomorphism{m};
    search.stop_ = true;
  });
  return found;
}

std::optional<Homomorphism> isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  if (a.size() != b.size() || !same_signature(a, b)) return std::nullopt;
  // Cheap invariant: number of fixed points of each unary operation and
  // idempotent diagonal entries of each binary one.
  const auto& sig = a.signature();
  for (std::size_t s = 0; s < sig.size(); ++s) {
    if (sig[s].arity != 1 && sig[s].arity != 2) continue;
    int fa = 0, fb = 0;
    for (Element x = 0; x < a.size(); ++x) {
      if (sig[s].arity == 1) {
        fa += a.apply(s, {x}) == x;
        fb += b.apply(s, {x}) == x;
      } else {
        fa += a.apply(s, {x, x}) == x;
        fb += b.apply(s, {x, x}) == x;
      }
    }
    if (fa != fb) return std::nullopt;
  }
  return find_embedding(a, b);
}

// ---------------------------------------------------------------------------

std::vector<Congruence> relative_congruences(const FiniteAlgebra& a,
                                             const std::vector<FiniteAlgebra>& gens) {
  std::vector<Congruence> out;
  auto add = [&](const Congruence& c) {
    if (std::find(out.begin(), out.end(), c) == out.end()) {
      out.push_back(c);
      return true;
    }
    return false;
  };
  add(Congruence::all(a.size()));
  for (const auto& m : gens)
    for (const auto& h : hom_enumerate(a, m)) add(Congruence::kernel(h.map));
  for (std::size_t i = 0; i < out.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(out[i].meet(out[j]));
  std::sort(out.begin(), out.end());
  return out;
}

bool in_isp(const FiniteAlgebra& a, const std::vector<FiniteAlgebra>& gens) {
  Congruence meet = Congruence::all(a.size());
  for (const auto& m : gens) {
    for (const auto& h : hom_enumerate(a, m)) {
      meet = meet.meet(Congruence::kernel(h.map));
      if (meet.is_identity()) return true;
    }
  }
  return meet.is_identity();
}

bool is_rel_subdirectly_irreducible(const FiniteAlgebra& a,
                                    const std::vector<FiniteAlgebra>& gens) {
  if (a.size() <= 1) return false;
  Congruence meet = Congruence::all(a.size());
  for (const auto& c : relative_congruences(a, gens))
    if (!c.is_identity()) meet = meet.meet(c);
  return !meet.is_identity();
}

}  // namespace coprod
