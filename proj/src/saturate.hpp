#pragma once

#include <vector>

#include "coprod/algebra.hpp"

namespace coprod::detail {

/// Semi-naive saturation over a worklist. Elements list[processed..] are
/// taken in order; for each one, `visit(sym, args)` is called once for every
/// operation instance (arity >= 1) whose arguments all lie in the processed
/// prefix and include the new element. `visit` may append to `list`;
/// returning false aborts and makes the call return false.
template <class Visit>
bool saturate(const FiniteAlgebra& a, std::vector<Element>& list, std::size_t& processed,
              Visit&& visit) {
  const auto& sig = a.signature();
  std::vector<std::size_t> idx;
  std::vector<std::size_t> limit;
  std::vector<Element> args;
  while (processed < list.size()) {
    const std::size_t t = processed++;
    for (std::size_t s = 0; s < sig.size(); ++s) {
      const int k = sig[s].arity;
      if (k == 0) continue;
      idx.assign(static_cast<std::size_t>(k), 0);
      limit.assign(static_cast<std::size_t>(k), 0);
      args.assign(static_cast<std::size_t>(k), 0);
      for (int p = 0; p < k; ++p) {
        bool empty = false;
        for (int i = 0; i < k; ++i) {
          limit[i] = i < p ? t : (i == p ? 1 : t + 1);
          if (limit[i] == 0) empty = true;
          idx[i] = 0;
        }
        if (empty) continue;
        for (;;) {
          for (int i = 0; i < k; ++i) args[i] = i == p ? list[t] : list[idx[i]];
          if (!visit(s, std::span<const Element>(args))) return false;
          int i = k - 1;
          for (; i >= 0; --i) {
            if (i == p) continue;
            if (++idx[i] < limit[i]) break;
            idx[i] = 0;
          }
          if (i < 0) break;
        }
      }
    }
  }
  return true;
}

}  // namespace coprod::detail
