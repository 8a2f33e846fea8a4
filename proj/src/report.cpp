#include <sstream>

#include "coprod/report.hpp"

namespace coprod {

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string set_labels(const FiniteAlgebra& a, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    out += (first ? "" : ",") + a.label(e);
    first = false;
  }
  return out + "}";
}

Json pairs_json(const FiniteAlgebra& m1, const FiniteAlgebra& m2,
                const std::vector<std::pair<Element, Element>>& pairs) {
  Json arr = Json::array();
  for (auto [a, b] : pairs) arr.push_back(Json::array({m1.label(a), m2.label(b)}));
  return arr;
}

Json carrier_json(const GeneratorSet& g, const CarrierMap& w) {
  const auto& m = g.algebras[w.sort];
  Json members = Json::array();
  for (int e : w.filter.members.elements()) members.push_back(m.label(e));
  return Json{{"sort", w.sort}, {"generator", m.label(w.filter.generator)}, {"filter", members}};
}

Json names_json(const std::vector<FiniteAlgebra>& as) {
  Json arr = Json::array();
  for (const auto& a : as) arr.push_back(Json{{"name", a.name()}, {"size", a.size()}});
  return arr;
}

std::string names_text(const std::vector<FiniteAlgebra>& as) {
  std::string out;
  for (const auto& a : as) out += (out.empty() ? "" : ", ") + a.name() + " (" + std::to_string(a.size()) + ")";
  return out;
}

Json tri_json(Tri t) {
  if (t == Tri::Unknown) return nullptr;
  return t == Tri::Yes;
}

}  // namespace

std::string carrier_to_string(const GeneratorSet& g, const CarrierMap& w) {
  const auto& m = g.algebras[w.sort];
  std::string s = "^" + m.label(w.filter.generator);
  if (g.num_sorts() > 1) s += " on " + m.name();
  return s;
}

std::string classify_text(const ClassificationReport& r) {
  std::ostringstream out;
  out << "input: " << names_text(r.input) << "\n";
  out << "simplified: " << names_text(r.simplified) << "\n";
  out << "single generator: " << to_string(r.single.status);
  if (r.single.algebra) out << " (" << r.single.how << ", " << r.single.algebra->name() << ", "
                            << r.single.algebra->size() << " elements)";
  else if (!r.single.how.empty()) out << " (" << r.single.how << ")";
  out << "\n";
  out << "carriers:";
  for (const auto& w : r.omega) out << " " << carrier_to_string(r.working, w);
  out << "  [" << r.omega_alternatives << " minimal choice" << (r.omega_alternatives == 1 ? "" : "s") << "]\n";
  for (const auto& rs : r.relations) {
    const auto& w1 = r.omega[rs.omega1];
    const auto& w2 = r.omega[rs.omega2];
    out << "R(" << carrier_to_string(r.working, w1) << ", " << carrier_to_string(r.working, w2)
        << "): " << rs.relations.size() << " maximal, " << rs.orbits << " up to automorphism\n";
    for (const auto& rel : rs.relations)
      out << "  " << relation_to_string(r.working.algebras[w1.sort], r.working.algebras[w2.sort], rel.pairs) << "\n";
  }
  out << "lattice lemma applies: " << yes_no(r.lattice_lemma) << "\n";
  out << "route:\n";
  for (const auto& s : r.route) out << "  " << s.question << " " << s.answer << "\n";
  out << "U preserves coproducts: " << to_string(r.preserves_coproducts) << "\n";
  out << "E: " << to_string(r.verdict_E) << ", S: " << yes_no(r.verdict_S) << "\n";
  return out.str();
}

Json classify_json(const ClassificationReport& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["input"] = names_json(r.input);
  j["simplified"] = names_json(r.simplified);
  Json single{{"status", to_string(r.single.status)}, {"how", r.single.how}};
  if (r.single.algebra) single["algebra"] = Json{{"name", r.single.algebra->name()}, {"size", r.single.algebra->size()}};
  j["single_generator"] = single;
  Json om = Json::array();
  for (const auto& w : r.omega) om.push_back(carrier_json(r.working, w));
  j["omega"] = om;
  j["omega_alternatives"] = r.omega_alternatives;
  Json rels = Json::array();
  for (const auto& rs : r.relations) {
    const auto& w1 = r.omega[rs.omega1];
    const auto& w2 = r.omega[rs.omega2];
    Json list = Json::array();
    for (const auto& rel : rs.relations)
      list.push_back(pairs_json(r.working.algebras[w1.sort], r.working.algebras[w2.sort], rel.pairs));
    rels.push_back(Json{{"omega1", rs.omega1}, {"omega2", rs.omega2}, {"count", rs.relations.size()},
                        {"orbits", rs.orbits}, {"relations", list}});
  }
  j["relations"] = rels;
  j["lattice_lemma"] = r.lattice_lemma;
  Json route = Json::array();
  for (const auto& s : r.route) route.push_back(Json{{"question", s.question}, {"answer", s.answer}});
  j["route"] = route;
  j["E"] = tri_json(r.verdict_E);
  j["S"] = r.verdict_S;
  j["preserves_coproducts"] = tri_json(r.preserves_coproducts);
  return j;
}

std::string alter_ego_text(const AlterEgo& ego) {
  std::ostringstream out;
  const auto& g = ego.gens;
  out << "sorts:";
  for (const auto& m : g.algebras) out << " " << m.name() << " (" << m.size() << ")";
  out << "\nomega:\n";
  for (std::size_t i = 0; i < ego.omega.size(); ++i)
    out << "  w" << i << " = " << carrier_to_string(g, ego.omega[i]) << " "
        << set_labels(g.algebras[ego.omega[i].sort], ego.omega[i].filter.members) << "\n";
  out << "relations:\n";
  for (const auto& r : ego.relations)
    out << "  (w" << r.omega1 << ",w" << r.omega2 << ") "
        << relation_to_string(g.algebras[r.source], g.algebras[r.target], r.pairs) << "\n";
  out << "operations:\n";
  for (const auto& op : ego.operations) {
    out << "  " << g.algebras[op.source].name() << " -> " << g.algebras[op.target].name() << ":";
    for (Element v : op.map.map) out << " " << g.algebras[op.target].label(v);
    out << "\n";
  }
  return out.str();
}

Json alter_ego_json(const AlterEgo& ego) {
  const auto& g = ego.gens;
  Json j;
  j["schema"] = kReportSchema;
  j["sorts"] = names_json(g.algebras);
  Json om = Json::array();
  for (const auto& w : ego.omega) om.push_back(carrier_json(g, w));
  j["omega"] = om;
  Json rels = Json::array();
  for (const auto& r : ego.relations)
    rels.push_back(Json{{"source", r.source}, {"target", r.target}, {"omega1", r.omega1}, {"omega2", r.omega2},
                        {"pairs", pairs_json(g.algebras[r.source], g.algebras[r.target], r.pairs)}});
  j["relations"] = rels;
  Json ops = Json::array();
  for (const auto& op : ego.operations) {
    Json m = Json::array();
    for (Element v : op.map.map) m.push_back(g.algebras[op.target].label(v));
    ops.push_back(Json{{"source", op.source}, {"target", op.target}, {"map", m}});
  }
  j["operations"] = ops;
  return j;
}

std::string algebra_tables_text(const FiniteAlgebra& a) {
  std::ostringstream out;
  const auto& sig = a.signature();
  for (std::size_t s = 0; s < sig.size(); ++s) {
    out << "  " << sig[s].name << " =";
    for (Element v : a.table(s)) out << " " << v;
    out << "\n";
  }
  return out.str();
}

Json algebra_json(const FiniteAlgebra& a) {
  Json tables;
  const auto& sig = a.signature();
  for (std::size_t s = 0; s < sig.size(); ++s) tables[sig[s].name] = a.table(s);
  Json labels = Json::array();
  for (Element e = 0; e < a.size(); ++e) labels.push_back(a.label(e));
  return Json{{"name", a.name()}, {"size", a.size()}, {"labels", labels}, {"tables", tables}};
}

std::string coproduct_text(const CoproductResult& c, const std::vector<FiniteAlgebra>& family,
                           const GeneratorSet& ambient) {
  std::ostringstream out;
  out << "coproduct of " << names_text(family) << " in ISP(" << names_text(ambient.algebras) << ")\n";
  out << "size " << c.algebra.size() << "\n";
  out << "universal property: " << yes_no(c.universal_property) << "\n";
  for (std::size_t i = 0; i < c.injections.size(); ++i) {
    out << "injection " << i << " (" << family[i].name() << "):";
    for (Element b = 0; b < family[i].size(); ++b)
      out << " " << family[i].label(b) << "->" << c.injections[i].map[static_cast<std::size_t>(b)];
    out << "\n";
  }
  out << "tables:\n" << algebra_tables_text(c.algebra);
  return out.str();
}

Json coproduct_json(const CoproductResult& c, const std::vector<FiniteAlgebra>& family,
                    const GeneratorSet& ambient) {
  Json j;
  j["schema"] = kReportSchema;
  j["family"] = names_json(family);
  j["ambient"] = names_json(ambient.algebras);
  j["size"] = c.algebra.size();
  j["universal_property"] = c.universal_property;
  Json inj = Json::array();
  for (const auto& h : c.injections) inj.push_back(h.map);
  j["injections"] = inj;
  j["algebra"] = algebra_json(c.algebra);
  return j;
}

std::string free_text(const FreeAlgebra& f) {
  std::ostringstream out;
  out << f.algebra.name() << "\nsize " << f.algebra.size() << "\ngenerators:";
  for (Element g : f.generators) out << " " << g;
  out << "\ntables:\n" << algebra_tables_text(f.algebra);
  return out.str();
}

Json free_json(const FreeAlgebra& f) {
  Json j;
  j["schema"] = kReportSchema;
  j["size"] = f.algebra.size();
  j["generators"] = f.generators;
  j["algebra"] = algebra_json(f.algebra);
  return j;
}

std::string reveng_text(const RevEngResult& r, const FiniteAlgebra& a) {
  std::ostringstream out;
  out << "algebra: " << a.name() << " (" << a.size() << ")\n";
  out << "|Y| = " << r.y.size() << "\n";
  out << "preorder: " << yes_no(r.is_preorder) << "\n";
  out << "|Y/~| = " << r.quotient.size() << "\n";
  out << "Phi is an order isomorphism onto H(U(A)): " << yes_no(r.phi_isomorphism) << "\n";
  out << "Y/~ isomorphic to the Priestley dual: " << yes_no(r.abstract_isomorphism) << "\n";
  return out.str();
}

Json reveng_json(const RevEngResult& r, const FiniteAlgebra& a) {
  Json j;
  j["schema"] = kReportSchema;
  j["algebra"] = Json{{"name", a.name()}, {"size", a.size()}};
  Json ys = Json::array();
  for (std::size_t i = 0; i < r.y.size(); ++i)
    ys.push_back(Json{{"sort", r.y[i].sort}, {"point", r.y[i].point}, {"omega", r.y[i].omega},
                      {"phi", r.phi[i]}, {"class", r.class_of.empty() ? -1 : r.class_of[i]}});
  j["y"] = ys;
  j["is_preorder"] = r.is_preorder;
  j["quotient_size"] = r.quotient.size();
  j["phi_isomorphism"] = r.phi_isomorphism;
  j["abstract_isomorphism"] = r.abstract_isomorphism;
  return j;
}

Table1Result run_table1_case(const Table1Case& c, const Caps& caps) {
  Table1Result row{c.id, c.expected, Tri::Unknown, false, false, ""};
  try {
    auto e = make_entry(c.id, caps);
    auto rep = flowchart_classify({e.algebra}, e.spec, caps);
    row.E = rep.verdict_E;
    row.S = rep.verdict_S;
    row.match = rep.verdict_E != Tri::Unknown && (rep.verdict_E == Tri::Yes) == c.expected.E &&
                rep.verdict_S == c.expected.S;
    row.note = e.note;
  } catch (const Error& ex) {
    row.note = ex.what();
  }
  return row;
}

std::string table1_text(const std::vector<Table1Result>& rows) {
  std::ostringstream out;
  auto mark = [](bool b) { return b ? "yes" : "no"; };
  for (const auto& r : rows) {
    out << r.id << ": expected E " << mark(r.expected.E) << ", S " << mark(r.expected.S) << "; computed E "
        << to_string(r.E) << ", S " << mark(r.S) << " -> " << (r.match ? "match" : "MISMATCH");
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << "\n";
  }
  return out.str();
}

Json table1_json(const std::vector<Table1Result>& rows) {
  Json j;
  j["schema"] = kReportSchema;
  Json arr = Json::array();
  for (const auto& r : rows)
    arr.push_back(Json{{"id", r.id},
                       {"expected", Json{{"E", r.expected.E}, {"S", r.expected.S}}},
                       {"computed", Json{{"E", tri_json(r.E)}, {"S", r.S}}},
                       {"match", r.match},
                       {"note", r.note}});
  j["cases"] = arr;
  return j;
}

}  // namespace coprod
