#include <algorithm>
#include <charconv>

#include "coprod/catalog.hpp"

namespace coprod {

namespace {

using Args = std::span<const Element>;

Signature lattice_sig(std::vector<Symbol> extra) {
  std::vector<Symbol> s{{"meet", 2}, {"join", 2}, {"bot", 0}, {"top", 0}};
  s.insert(s.end(), extra.begin(), extra.end());
  return Signature(std::move(s));
}

// Ops for a lattice given by explicit meet/join functions, followed by
// `extra`.
std::vector<FiniteAlgebra::OpFn> lattice_ops(std::function<Element(Element, Element)> meet,
                                            std::function<Element(Element, Element)> join,
                                            Element bot, Element top,
                                            std::vector<FiniteAlgebra::OpFn> extra) {
  std::vector<FiniteAlgebra::OpFn> ops{
      [meet](Args a) { return meet(a[0], a[1]); }, [join](Args a) { return join(a[0], a[1]); },
      [bot](Args) { return bot; }, [top](Args) { return top; }};
  ops.insert(ops.end(), extra.begin(), extra.end());
  return ops;
}

Element min2(Element x, Element y) { return std::min(x, y); }
Element max2(Element x, Element y) { return std::max(x, y); }

// De Morgan 4: 0,a,b,1 -> 0..3 with the bits (a-part, b-part) ordered so
// that meet/join are bitwise and/or: 0=00, a=01, b=10, 1=11.
Element dm_neg(Element x) {
  static const Element t[4] = {3, 1, 2, 0};
  return t[x];
}

CatalogEntry bool2() {
  auto a = FiniteAlgebra::from_functions(
      "2", 2, lattice_sig({{"neg", 1}}),
      lattice_ops(min2, max2, 0, 1, {[](Args a) { return 1 - a[0]; }}), {"0", "1"});
  return {"bool2", a, DReductSpec::standard(), {1}, ExpectedVerdict{true, true}, "Boolean algebras"};
}

CatalogEntry demorgan4() {
  auto a = FiniteAlgebra::from_functions(
      "4", 4, lattice_sig({{"neg", 1}}),
      lattice_ops([](Element x, Element y) { return x & y; },
                  [](Element x, Element y) { return x | y; }, 0, 3,
                  {[](Args a) { return dm_neg(a[0]); }}),
      {"0", "a", "b", "1"});
  return {"demorgan4", a, DReductSpec::standard(), {1}, ExpectedVerdict{true, true},
          "De Morgan algebras"};
}

CatalogEntry kleene3() {
  static const Element neg[3] = {2, 1, 0};
  auto a = FiniteAlgebra::from_functions(
      "3", 3, lattice_sig({{"neg", 1}}),
      lattice_ops(min2, max2, 0, 2, {[](Args a) { return neg[a[0]]; }}), {"0", "a", "1"});
  return {"kleene3", a, DReductSpec::standard(), {1, 2}, ExpectedVerdict{false, true},
          "Kleene algebras"};
}

CatalogEntry heyting_chain(int n) {
  if (n < 2) throw InputError("heyting_chain needs n >= 2");
  const Element top = n - 1;
  std::vector<std::string> labels{"0"};
  for (int i = 1; i < n - 1; ++i) labels.push_back(n == 3 ? "d" : "d" + std::to_string(i));
  labels.push_back("1");
  auto a = FiniteAlgebra::from_functions(
      "C" + std::to_string(n), n, lattice_sig({{"imp", 2}}),
      lattice_ops(min2, max2, 0, top,
                  {[top](Args a) { return a[0] <= a[1] ? top : a[1]; }}),
      labels);
  ExpectedVerdict ev{true, n == 2};
  return {"heyting_chain:" + std::to_string(n), a, DReductSpec::standard(), {top}, ev,
          n == 2 ? "Goedel chain G_2 (Boolean algebras)" : "Goedel varieties G_n, n >= 3"};
}

CatalogEntry pseudo_b(int n, const Caps& caps) {
  if (n < 0) throw InputError("pseudo_b needs n >= 0");
  if (n > 20 || (std::size_t{1} << n) + 1 > caps.product_elements)
    throw CapExceeded("pseudo_b size", n > 60 ? SIZE_MAX : (std::size_t{1} << n) + 1,
                      caps.product_elements);
  const int full = (1 << n) - 1;
  const int top = 1 << n;
  const int size = top + 1;
  if (static_cast<std::size_t>(size) * static_cast<std::size_t>(size) > caps.table_entries)
    throw CapExceeded("pseudo_b table entries",
                      static_cast<std::size_t>(size) * static_cast<std::size_t>(size),
                      caps.table_entries);
  auto meet = [top](Element x, Element y) {
    if (x == top) return y;
    if (y == top) return x;
    return x & y;
  };
  auto join = [top](Element x, Element y) { return (x == top || y == top) ? top : (x | y); };
  // x* = largest y with x meet y = 0
  auto pc = [=](Args a) {
    Element x = a[0];
    if (x == 0) return top;
    if (x == top) return 0;
    return full & ~x;
  };
  std::vector<std::string> labels;
  for (int m = 0; m < top; ++m) {
    if (m == 0) {
      labels.push_back("0");
    } else if (m == full) {
      labels.push_back("e");
    } else {
      std::string l;
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) l += static_cast<char>('a' + i);
      labels.push_back(l);
    }
  }
  labels.push_back("1");
  auto a = FiniteAlgebra::from_functions("B" + std::to_string(n), size, lattice_sig({{"pc", 1}}),
                                         lattice_ops(meet, join, 0, top, {pc}), labels);
  ExpectedVerdict ev{true, n <= 1};
  std::string note = n == 0 ? "B_0 (Boolean algebras)"
                     : n == 1 ? "B_1 (Stone algebras)"
                              : "pseudocomplemented varieties B_n, n >= 2";
  return {"pseudo_b:" + std::to_string(n), a, DReductSpec::standard(), {}, ev, note};
}

int distinct_prime_factors(int k) {
  int c = 0;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    ++c;
    while (k % p == 0) k /= p;
  }
  return c + (k > 1);
}

CatalogEntry mv_chain(int k) {
  if (k < 1) throw InputError("mv_chain needs k >= 1");
  std::vector<std::string> labels;
  for (int i = 0; i <= k; ++i)
    labels.push_back(i == 0 ? "0" : i == k ? "1" : std::to_string(i) + "/" + std::to_string(k));
  Signature sig({{"oplus", 2}, {"neg", 1}, {"zero", 0}});
  auto a = FiniteAlgebra::from_functions(
      "L" + std::to_string(k), k + 1, sig,
      {[k](Args a) { return std::min(k, a[0] + a[1]); }, [k](Args a) { return k - a[0]; },
       [](Args) { return 0; }},
      labels);
  DReductSpec spec{Term::parse("(neg (oplus (neg (oplus x0 (neg x1))) (neg x1)))"),
                   Term::parse("(oplus (neg (oplus (neg x0) x1)) x1)"), Term::parse("zero"),
                   Term::parse("(neg zero)")};
  const int primes = distinct_prime_factors(k);
  ExpectedVerdict ev{k == 1, primes <= 1};
  std::string note = k == 1 ? "Boolean algebras"
                     : primes == 1 ? "MV variety with no L_pq (k a prime power)"
                                   : "MV variety containing some L_pq";
  return {"mv_chain:" + std::to_string(k), a, spec, {}, ev, note};
}

std::vector<Symbol> indexed(const std::string& base, int n) {
  std::vector<Symbol> out;
  for (int i = 1; i < n; ++i) out.push_back({base + std::to_string(i), 1});
  return out;
}

CatalogEntry moisil(int n, bool with_neg) {
  if (n < 2) throw InputError("moisil algebras need n >= 2");
  const Element top = n - 1;
  std::vector<Symbol> extra;
  std::vector<FiniteAlgebra::OpFn> ops;
  if (with_neg) {
    extra.push_back({"neg", 1});
    ops.push_back([top](Args a) { return top - a[0]; });
  }
  for (auto& s : indexed("d", n)) extra.push_back(s);
  for (int i = 1; i < n; ++i)
    ops.push_back([=](Args a) { return a[0] < n - i ? 0 : top; });
  if (!with_neg) {
    for (auto& s : indexed("dbar", n)) extra.push_back(s);
    for (int i = 1; i < n; ++i)
      ops.push_back([=](Args a) { return a[0] < n - i ? top : 0; });
  }
  auto a = FiniteAlgebra::from_functions((with_neg ? "M" : "L") + std::to_string(n), n,
                                         lattice_sig(extra),
                                         lattice_ops(min2, max2, 0, top, ops));
  std::string id = (with_neg ? "moisil_M:" : "moisil_L:") + std::to_string(n);
  std::string note = with_neg ? "n-valued Moisil algebras" : "n-valued Lukasiewicz-Moisil algebras";
  if (n == 2)
    note += "; for n = 2 the classification table and the discussion of question (2) disagree, "
            "the computed verdict is reported as is";
  return {id, a, DReductSpec::standard(), {}, ExpectedVerdict{false, true}, note};
}

// {first} x {0..n-1}, index j*n + k, product order.
CatalogEntry pre_moisil(int n, bool dm) {
  if (n < 2) throw InputError("pre-Moisil algebras need n >= 2");
  const int w = dm ? 4 : 2;
  const int size = w * n;
  const Element bot = 0;
  const Element top = (w - 1) * n + (n - 1);
  auto meet = [=](Element x, Element y) {
    return (x / n & y / n) * n + std::min(x % n, y % n);
  };
  auto join = [=](Element x, Element y) {
    return (x / n | y / n) * n + std::max(x % n, y % n);
  };
  std::vector<Symbol> extra;
  std::vector<FiniteAlgebra::OpFn> ops;
  if (dm) {
    extra.push_back({"neg", 1});
    ops.push_back([=](Args a) { return dm_neg(a[0] / n) * n + (n - 1 - a[0] % n); });
  }
  for (auto& s : indexed(dm ? "f" : "e", n)) extra.push_back(s);
  for (int i = 1; i < n; ++i)
    ops.push_back([=](Args a) { return a[0] % n < n - i ? bot : top; });
  if (!dm) {
    for (auto& s : indexed("ebar", n)) extra.push_back(s);
    for (int i = 1; i < n; ++i)
      ops.push_back([=](Args a) { return a[0] % n < n - i ? top : bot; });
  }
  static const char* dm_labels[4] = {"0", "a", "b", "1"};
  std::vector<std::string> labels;
  for (Element x = 0; x < size; ++x)
    labels.push_back("(" + std::string(dm ? dm_labels[x / n] : (x / n ? "1" : "0")) + "," +
                     std::to_string(x % n) + ")");
  auto a = FiniteAlgebra::from_functions((dm ? "M0_" : "L0_") + std::to_string(n), size,
                                         lattice_sig(extra),
                                         lattice_ops(meet, join, bot, top, ops), labels);
  // w(x,y) = x, resp. w(x,y) = [x in {a,1}]: the filter generated by (1,0),
  // resp. (a,0); both have index n.
  std::string id = (dm ? "pre_moisil_M0:" : "pre_moisil_L0:") + std::to_string(n);
  return {id, a, DReductSpec::standard(), {n}, ExpectedVerdict{true, true},
          dm ? "n-valued pre-Moisil algebras" : "n-valued pre-Lukasiewicz-Moisil algebras"};
}

std::optional<int> parse_int(const std::string& s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

std::vector<std::pair<std::string, bool>> catalog_names() {
  return {{"bool2", false},         {"demorgan4", false},     {"kleene3", false},
          {"heyting_chain", true},  {"pseudo_b", true},       {"mv_chain", true},
          {"moisil_L", true},       {"moisil_M", true},       {"pre_moisil_L0", true},
          {"pre_moisil_M0", true}};
}

CatalogEntry make_entry(const std::string& name, std::optional<int> param, const Caps& caps) {
  auto names = catalog_names();
  auto it = std::find_if(names.begin(), names.end(), [&](const auto& p) { return p.first == name; });
  if (it == names.end()) throw InputError("unknown catalog id '" + name + "'");
  if (it->second && !param) throw InputError("catalog id '" + name + "' needs a parameter, e.g. " + name + ":3");
  if (!it->second && param) throw InputError("catalog id '" + name + "' takes no parameter");
  if (name == "bool2") return bool2();
  if (name == "demorgan4") return demorgan4();
  if (name == "kleene3") return kleene3();
  const int p = *param;
  if (name == "heyting_chain") return heyting_chain(p);
  if (name == "pseudo_b") return pseudo_b(p, caps);
  if (name == "mv_chain") return mv_chain(p);
  if (name == "moisil_L") return moisil(p, false);
  if (name == "moisil_M") return moisil(p, true);
  if (name == "pre_moisil_L0") return pre_moisil(p, false);
  return pre_moisil(p, true);
}

CatalogEntry make_entry(const std::string& id, const Caps& caps) {
  auto colon = id.find(':');
  if (colon == std::string::npos) return make_entry(id, std::nullopt, caps);
  auto v = parse_int(id.substr(colon + 1));
  if (!v) throw InputError("bad catalog parameter in '" + id + "'");
  return make_entry(id.substr(0, colon), v, caps);
}

std::vector<Table1Case> table1_suite() {
  const ExpectedVerdict yy{true, true}, yn{true, false}, ny{false, true}, nn{false, false};
  return {{"demorgan4", yy},       {"kleene3", ny},         {"pseudo_b:0", yy},
          {"pseudo_b:1", yy},      {"pseudo_b:2", yn},      {"pseudo_b:3", yn},
          {"heyting_chain:3", yn}, {"heyting_chain:4", yn}, {"mv_chain:1", yy},
          {"mv_chain:2", ny},      {"mv_chain:3", ny},      {"mv_chain:4", ny},
          {"mv_chain:6", nn},      {"moisil_L:3", ny},      {"moisil_M:3", ny},
          {"pre_moisil_L0:2", yy}, {"pre_moisil_L0:3", yy}, {"pre_moisil_M0:2", yy}};
}

}  // namespace coprod
