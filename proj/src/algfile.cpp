#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "coprod/algfile.hpp"

namespace coprod {

namespace {

struct Token {
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::optional<long> as_int(const std::string& s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) return std::nullopt;
  return v;
}

void check_symbols(const Term& t, const Signature& sig, int line, int col) {
  if (t.is_var()) {
    if (t.var_index() > 1) throw ParseError(line, col, "variable x" + std::to_string(t.var_index()) + " not allowed");
    return;
  }
  auto s = sig.find(t.symbol());
  if (!s) throw ParseError(line, col, "undefined symbol '" + t.symbol() + "'");
  if (sig[*s].arity != static_cast<int>(t.args().size()))
    throw ParseError(line, col, "arity mismatch for '" + t.symbol() + "': expected " +
                                    std::to_string(sig[*s].arity) + ", got " + std::to_string(t.args().size()));
  for (const auto& a : t.args()) check_symbols(a, sig, line, col);
}

class Parser {
 public:
  AlgebraFile run(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      ++lineno_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      auto toks = tokenize(line);
      if (toks.empty()) continue;
      const auto& kw = toks[0].text;
      if (kw == "algebra") {
        finish();
        header(toks);
      } else {
        if (!open_) throw ParseError(lineno_, toks[0].col, "'" + kw + "' before any 'algebra' header");
        if (kw == "elements") elements(toks);
        else if (kw == "op") op(toks);
        else if (kw == "table") table(toks);
        else if (kw == "reduct") reduct(line, toks);
        else if (kw == "carrier") carrier(toks);
        else throw ParseError(lineno_, toks[0].col, "unknown keyword '" + kw + "'");
      }
    }
    finish();
    if (file_.algebras.empty()) throw ParseError(lineno_ + 1, 1, "no algebra definitions");
    return std::move(file_);
  }

 private:
  struct PendingOp {
    Symbol sym;
    int line, col;
    std::optional<std::vector<Element>> table;
  };

  void header(const std::vector<Token>& t) {
    if (t.size() != 4 || t[2].text != "size")
      throw ParseError(lineno_, t[0].col, "expected 'algebra NAME size N'");
    auto n = as_int(t[3].text);
    if (!n || *n < 1) throw ParseError(lineno_, t[3].col, "size must be a positive integer");
    open_ = true;
    name_ = t[1].text;
    size_ = static_cast<int>(*n);
    header_line_ = lineno_;
    labels_.clear();
    ops_.clear();
    spec_.reset();
    carriers_.clear();
    carrier_pos_.clear();
  }

  void elements(const std::vector<Token>& t) {
    if (static_cast<int>(t.size()) - 1 != size_)
      throw ParseError(lineno_, t[0].col, std::to_string(t.size() - 1) + " labels, expected " + std::to_string(size_));
    labels_.clear();
    for (std::size_t i = 1; i < t.size(); ++i) {
      for (std::size_t j = 1; j < i; ++j)
        if (t[j].text == t[i].text) throw ParseError(lineno_, t[i].col, "duplicate label '" + t[i].text + "'");
      labels_.push_back(t[i].text);
    }
  }

  void op(const std::vector<Token>& t) {
    if (t.size() != 3) throw ParseError(lineno_, t[0].col, "expected 'op SYM ARITY'");
    auto a = as_int(t[2].text);
    if (!a || *a < 0) throw ParseError(lineno_, t[2].col, "arity must be a non-negative integer");
    for (const auto& o : ops_)
      if (o.sym.name == t[1].text) throw ParseError(lineno_, t[1].col, "duplicate op '" + t[1].text + "'");
    ops_.push_back({{t[1].text, static_cast<int>(*a)}, lineno_, t[1].col, std::nullopt});
  }

  void table(const std::vector<Token>& t) {
    if (t.size() < 3 || t[2].text != "=") throw ParseError(lineno_, t[0].col, "expected 'table SYM = v0 v1 ...'");
    PendingOp* o = nullptr;
    for (auto& p : ops_)
      if (p.sym.name == t[1].text) o = &p;
    if (!o) throw ParseError(lineno_, t[1].col, "undefined symbol '" + t[1].text + "'");
    if (o->table) throw ParseError(lineno_, t[1].col, "second table for '" + t[1].text + "'");
    std::size_t expected = 1;
    for (int i = 0; i < o->sym.arity; ++i) expected *= static_cast<std::size_t>(size_);
    if (t.size() - 3 != expected)
      throw ParseError(lineno_, t[1].col, "table length " + std::to_string(t.size() - 3) + ", expected " +
                                              std::to_string(expected));
    std::vector<Element> vals;
    for (std::size_t i = 3; i < t.size(); ++i) {
      auto v = as_int(t[i].text);
      if (!v) throw ParseError(lineno_, t[i].col, "expected an element index, got '" + t[i].text + "'");
      if (*v < 0 || *v >= size_) throw ParseError(lineno_, t[i].col, "value " + t[i].text + " out of range");
      vals.push_back(static_cast<Element>(*v));
    }
    o->table = std::move(vals);
  }

  // key=TERM pairs; a TERM starting with '(' runs to its matching ')'.
  void reduct(const std::string& line, const std::vector<Token>& t) {
    std::map<std::string, std::pair<std::string, int>> terms;
    std::size_t i = static_cast<std::size_t>(t[0].col - 1) + t[0].text.size();
    auto skip = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    for (skip(); i < line.size() && line[i] != '#'; skip()) {
      const int col = static_cast<int>(i) + 1;
      auto eq = line.find('=', i);
      if (eq == std::string::npos) throw ParseError(lineno_, col, "expected KEY=TERM");
      std::string key = line.substr(i, eq - i);
      if (key != "meet" && key != "join" && key != "bot" && key != "top")
        throw ParseError(lineno_, col, "unknown reduct key '" + key + "'");
      if (terms.count(key)) throw ParseError(lineno_, col, "duplicate reduct key '" + key + "'");
      i = eq + 1;
      std::size_t start = i;
      if (i < line.size() && line[i] == '(') {
        int depth = 0;
        for (; i < line.size(); ++i) {
          if (line[i] == '(') ++depth;
          if (line[i] == ')' && --depth == 0) {
            ++i;
            break;
          }
        }
        if (depth != 0) throw ParseError(lineno_, static_cast<int>(start) + 1, "unbalanced parentheses");
      } else {
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      }
      terms[key] = {line.substr(start, i - start), static_cast<int>(start) + 1};
    }
    auto get = [&](const char* k) {
      auto it = terms.find(k);
      if (it == terms.end()) throw ParseError(lineno_, t[0].col, std::string("reduct is missing '") + k + "'");
      try {
        return std::make_pair(Term::parse(it->second.first), it->second.second);
      } catch (const InputError& e) {
        throw ParseError(lineno_, it->second.second, e.what());
      }
    };
    auto [m, mc] = get("meet");
    auto [j, jc] = get("join");
    auto [b, bc] = get("bot");
    auto [tp, tc] = get("top");
    spec_ = DReductSpec{m, j, b, tp};
    spec_cols_ = {mc, jc, bc, tc};
    spec_line_ = lineno_;
  }

  void carrier(const std::vector<Token>& t) {
    std::vector<Token> items(t.begin() + 1, t.end());
    if (items.empty() || items.front().text.front() != '{' || items.back().text.back() != '}')
      throw ParseError(lineno_, t[0].col, "expected 'carrier {L ...}'");
    items.front().text.erase(0, 1);
    ++items.front().col;
    items.back().text.pop_back();
    std::vector<Token> labels;
    for (auto& it : items)
      if (!it.text.empty()) labels.push_back(it);
    carriers_.push_back(std::move(labels));
    carrier_pos_.push_back(lineno_);
  }

  void finish() {
    if (!open_) return;
    open_ = false;
    std::vector<Symbol> syms;
    std::vector<std::vector<Element>> tables;
    for (const auto& o : ops_) {
      if (!o.table) throw ParseError(o.line, o.col, "no table for '" + o.sym.name + "'");
      syms.push_back(o.sym);
      tables.push_back(*o.table);
    }
    AlgebraDef def;
    try {
      def.algebra = FiniteAlgebra(name_, size_, Signature(syms), std::move(tables), labels_);
    } catch (const InputError& e) {
      throw ParseError(header_line_, 1, e.what());
    }
    const auto& sig = def.algebra.signature();
    if (spec_) {
      check_symbols(spec_->meet, sig, spec_line_, spec_cols_[0]);
      check_symbols(spec_->join, sig, spec_line_, spec_cols_[1]);
      check_symbols(spec_->bot, sig, spec_line_, spec_cols_[2]);
      check_symbols(spec_->top, sig, spec_line_, spec_cols_[3]);
      def.spec = spec_;
    }
    for (std::size_t c = 0; c < carriers_.size(); ++c) {
      ElementSet s(static_cast<std::size_t>(size_));
      for (const auto& tok : carriers_[c]) {
        auto e = def.algebra.find_label(tok.text);
        if (!e) throw ParseError(carrier_pos_[c], tok.col, "unknown element '" + tok.text + "'");
        s.insert(static_cast<std::size_t>(*e));
      }
      def.carriers.push_back(std::move(s));
    }
    file_.algebras.push_back(std::move(def));
  }

  AlgebraFile file_;
  int lineno_ = 0;
  bool open_ = false;
  std::string name_;
  int size_ = 0;
  int header_line_ = 0;
  std::vector<std::string> labels_;
  std::vector<PendingOp> ops_;
  std::optional<DReductSpec> spec_;
  std::array<int, 4> spec_cols_{};
  int spec_line_ = 0;
  std::vector<std::vector<Token>> carriers_;
  std::vector<int> carrier_pos_;
};

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) { return Parser().run(text); }

AlgebraFile load_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_algebra_file(ss.str());
}

std::string export_algebra(const AlgebraDef& def) {
  const auto& a = def.algebra;
  std::ostringstream out;
  out << "algebra " << a.name() << " size " << a.size() << "\n";
  if (!a.labels().empty()) {
    out << "elements";
    for (Element e = 0; e < a.size(); ++e) out << " " << a.label(e);
    out << "\n";
  }
  const auto& sig = a.signature();
  for (std::size_t s = 0; s < sig.size(); ++s) out << "op " << sig[s].name << " " << sig[s].arity << "\n";
  for (std::size_t s = 0; s < sig.size(); ++s) {
    out << "table " << sig[s].name << " =";
    for (Element v : a.table(s)) out << " " << v;
    out << "\n";
  }
  if (def.spec)
    out << "reduct meet=" << def.spec->meet.to_string() << " join=" << def.spec->join.to_string()
        << " bot=" << def.spec->bot.to_string() << " top=" << def.spec->top.to_string() << "\n";
  for (const auto& c : def.carriers) {
    out << "carrier {";
    bool first = true;
    for (int e : c.elements()) {
      out << (first ? "" : " ") << a.label(e);
      first = false;
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace coprod
