#pragma once

// The line-oriented .alg format.
//
//   # comment
//   algebra NAME size N
//   elements L0 L1 ...               (optional)
//   op SYM ARITY
//   table SYM = v0 v1 ...            (row-major, leftmost argument most significant)
//   reduct meet=TERM join=TERM bot=TERM top=TERM   (optional)
//   carrier {L ...}                  (optional, repeatable: members of a prime filter)
//
// TERMs are prefix expressions over the op symbols and x0, x1. Table values
// are element indices; carrier members are element labels.

#include <optional>
#include <string>
#include <vector>

#include "coprod/algebra.hpp"
#include "coprod/distlat.hpp"

namespace coprod {

class ParseError : public InputError {
 public:
  ParseError(int line, int col, const std::string& msg)
      : InputError("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

 private:
  int line_, col_;
};

struct AlgebraDef {
  FiniteAlgebra algebra;
  std::optional<DReductSpec> spec;
  std::vector<ElementSet> carriers;  ///< as declared; not yet checked to be prime filters
};

struct AlgebraFile {
  std::vector<AlgebraDef> algebras;
};

AlgebraFile parse_algebra_file(const std::string& text);
AlgebraFile load_algebra_file(const std::string& path);

std::string export_algebra(const AlgebraDef& def);

}  // namespace coprod
