#include <cctype>
#include <sstream>

#include "coprod/algebra.hpp"

namespace coprod {

Term Term::var(int index) {
  if (index < 0) throw InputError("negative variable index");
  Term t;
  t.var_ = index;
  return t;
}

Term Term::apply(std::string symbol, std::vector<Term> args) {
  Term t;
  t.symbol_ = std::move(symbol);
  t.args_ = std::move(args);
  return t;
}

int Term::num_vars() const {
  if (is_var()) return var_ + 1;
  int m = 0;
  for (const auto& a : args_) m = std::max(m, a.num_vars());
  return m;
}

std::string Term::to_string() const {
  if (is_var()) return "x" + std::to_string(var_);
  if (args_.empty()) return symbol_;
  std::string s = "(" + symbol_;
  for (const auto& a : args_) s += " " + a.to_string();
  return s + ")";
}

namespace {

class TermParser {
 public:
  explicit TermParser(const std::string& text) : text_(text) {}

  Term parse_all() {
    Term t = parse_term();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("term parse error at offset " + std::to_string(pos_) + ": " + msg +
                     " in '" + text_ + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string ident() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected identifier");
    return text_.substr(start, pos_ - start);
  }

  static std::optional<int> as_variable(const std::string& id) {
    if (id.size() < 2 || id[0] != 'x') return std::nullopt;
    for (std::size_t i = 1; i < id.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(id[i]))) return std::nullopt;
    return std::stoi(id.substr(1));
  }

  Term parse_term() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of term");
    if (text_[pos_] == ')') fail("unexpected ')'");
    if (text_[pos_] != '(') {
      std::string id = ident();
      if (auto v = as_variable(id)) return Term::var(*v);
      return Term::apply(id);
    }
    ++pos_;
    std::string head = ident();
    if (as_variable(head)) fail("variable in operator position");
    std::vector<Term> args;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) fail("missing ')'");
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      args.push_back(parse_term());
    }
    return Term::apply(head, std::move(args));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term Term::parse(const std::string& text) { return TermParser(text).parse_all(); }

}  // namespace coprod
