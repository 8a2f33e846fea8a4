// coprod: command-line front end for the classification and duality tools.
//
// Exit codes: 0 success, 1 unknown (a cap was hit), 2 input error,
// 3 a check ran and failed (reveng-check, table1), 4 internal error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coprod/algfile.hpp"
#include "coprod/catalog.hpp"
#include "coprod/classify.hpp"
#include "coprod/duality.hpp"
#include "coprod/report.hpp"

using namespace coprod;

namespace {

constexpr int kOk = 0, kUnknown = 1, kInput = 2, kCheckFailed = 3, kInternal = 4;

struct Target {
  std::vector<FiniteAlgebra> algebras;
  std::optional<DReductSpec> spec;
  std::vector<CarrierMap> carriers;  ///< declared or documented; sorts index `algebras`
};

Target resolve(const std::string& arg, const Caps& caps) {
  Target t;
  if (std::filesystem::is_regular_file(arg)) {
    auto file = load_algebra_file(arg);
    for (std::size_t i = 0; i < file.algebras.size(); ++i) {
      auto& def = file.algebras[i];
      if (def.spec && !t.spec) t.spec = def.spec;
      t.algebras.push_back(def.algebra);
    }
    // Carriers are checked against the reduct once the reduct terms are known.
    const auto spec = t.spec.value_or(DReductSpec::standard());
    for (std::size_t i = 0; i < file.algebras.size(); ++i)
      for (const auto& members : file.algebras[i].carriers) {
        auto filters = prime_filters(d_reduct(file.algebras[i].algebra, spec));
        auto it = std::find_if(filters.begin(), filters.end(),
                               [&](const PrimeFilter& f) { return f.members == members; });
        if (it == filters.end())
          throw InputError("carrier of '" + file.algebras[i].algebra.name() + "' is not a prime filter");
        t.carriers.push_back({i, *it});
      }
    return t;
  }
  auto e = make_entry(arg, caps);
  t.algebras.push_back(e.algebra);
  t.spec = e.spec;
  auto filters = prime_filters(d_reduct(e.algebra, e.spec));
  for (Element g : e.documented_carriers)
    for (const auto& f : filters)
      if (f.generator == g) t.carriers.push_back({0, f});
  return t;
}

struct Gathered {
  std::vector<FiniteAlgebra> algebras;
  DReductSpec spec;
  std::vector<CarrierMap> carriers;
};

Gathered gather(const std::vector<std::string>& args, const Caps& caps) {
  Gathered g;
  std::optional<DReductSpec> spec;
  for (const auto& a : args) {
    auto t = resolve(a, caps);
    for (auto c : t.carriers) {
      c.sort += g.algebras.size();
      g.carriers.push_back(c);
    }
    g.algebras.insert(g.algebras.end(), t.algebras.begin(), t.algebras.end());
    if (!spec) spec = t.spec;
  }
  g.spec = spec.value_or(DReductSpec::standard());
  return g;
}

// "auto" or a comma-separated list of [SORT:]LABEL naming the generators of
// the chosen prime filters. "auto" prefers declared carriers when they
// separate, and falls back to the minimal choice.
std::vector<CarrierMap> choose_omega(const GeneratorSet& gs, const std::string& spec,
                                     const std::vector<CarrierMap>& declared) {
  if (spec == "auto") {
    if (!declared.empty() && sep_condition(gs, declared).holds) return declared;
    return minimal_omega(gs).omega;
  }
  std::vector<CarrierMap> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t sort = 0;
    std::string label = item;
    if (auto colon = item.find(':'); colon != std::string::npos && gs.num_sorts() > 1) {
      sort = static_cast<std::size_t>(std::stoul(item.substr(0, colon)));
      label = item.substr(colon + 1);
      if (sort >= gs.num_sorts()) throw InputError("--omega: no sort " + std::to_string(sort));
    }
    auto e = gs.algebras[sort].find_label(label);
    if (!e) throw InputError("--omega: unknown element '" + label + "'");
    bool found = false;
    for (const auto& f : gs.filters[sort])
      if (f.generator == *e) {
        out.push_back({sort, f});
        found = true;
      }
    if (!found) throw InputError("--omega: '" + label + "' is not join-irreducible");
  }
  if (out.empty()) throw InputError("--omega: empty list");
  return out;
}

struct Output {
  std::string path;
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
  }
  void write(const Json& j) const { write(j.dump(2) + "\n"); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coproduct preservation and natural dualities for finite D-based algebras.\n"
               "Operation tables are row-major over lexicographically ordered argument tuples,\n"
               "leftmost argument most significant."};
  app.require_subcommand(1);
  app.fallthrough();

  bool json = false;
  std::size_t cap = 0;
  std::string omega = "auto", out_path;
  app.add_flag("--json", json, "machine-readable output");
  app.add_option("--cap", cap, "cap on the number of elements of any constructed algebra (env COPROD_CAP)");
  app.add_option("--omega", omega, "carriers: auto, or a comma-separated list of [SORT:]LABEL");
  app.add_option("--out", out_path, "write output to PATH");

  std::vector<std::string> targets, in_target, member_target;
  int free_n = 1;
  std::string dot_what = "priestley";

  auto* classify = app.add_subcommand("classify", "run the E/S flowchart on FILE or catalog ids");
  classify->add_option("targets", targets, "catalog id or .alg file")->required();
  auto* duality = app.add_subcommand("duality", "print the alter ego: carriers, relations, operations");
  duality->add_option("targets", targets)->required();
  auto* coproduct_cmd = app.add_subcommand("coproduct", "coproduct of the given algebras");
  coproduct_cmd->add_option("targets", targets)->required();
  coproduct_cmd->add_option("--in", in_target, "generators of the ambient quasivariety");
  auto* free_cmd = app.add_subcommand("free", "free algebra on N generators");
  free_cmd->add_option("n", free_n)->required()->check(CLI::NonNegativeNumber);
  free_cmd->add_option("targets", targets)->required();
  auto* reveng = app.add_subcommand("reveng-check", "rebuild the Priestley dual from the natural dual");
  reveng->add_option("targets", targets)->required();
  reveng->add_option("--algebra", member_target, "algebra to dualise (default: the generator)");
  auto* table1 = app.add_subcommand("table1", "run the classification suite");
  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
  dot->add_option("targets", targets)->required();
  dot->add_option("--what", dot_what, "priestley | lattice")->check(CLI::IsMember({"priestley", "lattice"}));
  auto* list = app.add_subcommand("list", "catalog constructors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInput;
  }

  Caps caps;
  if (const char* env = std::getenv("COPROD_CAP")) {
    try {
      caps.product_elements = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "error: COPROD_CAP is not a number\n";
      return kInput;
    }
  }
  if (cap) caps.product_elements = cap;
  Output out{out_path};

  try {
    if (classify->parsed()) {
      // the flowchart's own carrier choice is part of the verdict
      if (omega != "auto") throw InputError("--omega does not apply to classify");
      auto g = gather(targets, caps);
      auto r = flowchart_classify(g.algebras, g.spec, caps);
      if (json) out.write(classify_json(r));
      else out.write(classify_text(r));
      return r.verdict_E == Tri::Unknown ? kUnknown : kOk;
    }
    if (duality->parsed()) {
      auto g = gather(targets, caps);
      auto gs = GeneratorSet::make(g.algebras, g.spec);
      auto ego = build_alter_ego(gs, choose_omega(gs, omega, g.carriers), caps);
      if (json) out.write(alter_ego_json(ego));
      else out.write(alter_ego_text(ego));
      return kOk;
    }
    if (coproduct_cmd->parsed()) {
      auto fam = gather(targets, caps);
      std::vector<FiniteAlgebra> ambient;
      DReductSpec spec = fam.spec;
      std::vector<CarrierMap> declared;
      if (!in_target.empty()) {
        auto amb = gather(in_target, caps);
        ambient = amb.algebras;
        spec = amb.spec;
        declared = amb.carriers;
      } else {
        ambient = simplify_generators(fam.algebras, caps);
      }
      auto gs = GeneratorSet::make(ambient, spec);
      auto ego = build_alter_ego(gs, choose_omega(gs, omega, declared), caps);
      auto c = coproduct(ego, fam.algebras, caps);
      if (json) out.write(coproduct_json(c, fam.algebras, gs));
      else out.write(coproduct_text(c, fam.algebras, gs));
      return kOk;
    }
    if (free_cmd->parsed()) {
      auto g = gather(targets, caps);
      auto f = free_algebra(g.algebras, free_n, caps);
      if (json) out.write(free_json(f));
      else out.write(free_text(f));
      return kOk;
    }
    if (reveng->parsed()) {
      auto g = gather(targets, caps);
      auto gs = GeneratorSet::make(g.algebras, g.spec);
      auto ego = build_alter_ego(gs, choose_omega(gs, omega, g.carriers), caps);
      FiniteAlgebra a = g.algebras[0];
      if (!member_target.empty()) a = gather(member_target, caps).algebras.at(0);
      auto r = reveng_priestley(a, ego);
      if (json) out.write(reveng_json(r, a));
      else out.write(reveng_text(r, a));
      return r.phi_isomorphism && r.abstract_isomorphism ? kOk : kCheckFailed;
    }
    if (table1->parsed()) {
      std::vector<Table1Result> rows;
      for (const auto& c : table1_suite()) rows.push_back(run_table1_case(c, caps));
      if (json) out.write(table1_json(rows));
      else out.write(table1_text(rows));
      bool unknown = false, mismatch = false;
      for (const auto& r : rows) {
        unknown = unknown || r.E == Tri::Unknown;
        mismatch = mismatch || !r.match;
      }
      return unknown ? kUnknown : mismatch ? kCheckFailed : kOk;
    }
    if (dot->parsed()) {
      auto g = gather(targets, caps);
      const auto& a = g.algebras.at(0);
      auto l = d_reduct(a, g.spec);
      auto p = dot_what == "lattice" ? l.order() : priestley_dual(l);
      out.write(poset_to_dot(p, a.name()));
      return kOk;
    }
    if (list->parsed()) {
      std::string text;
      for (const auto& [name, param] : catalog_names()) text += name + (param ? ":N" : "") + "\n";
      out.write(text);
      return kOk;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "unknown: " << e.what() << "\n";
    return kUnknown;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
