#pragma once

#include "jc/coeff_matrix.hpp"
#include "jc/poly_map.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jc::io {

/// Syntax or semantic error at a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct MapDocument {
  std::size_t n = 0;
  Domain domain = Domain::rational;
  std::vector<std::string> sources;  // component expressions as written
  PolyMap map;
};

/// Map file grammar:
///   document  := "n" "=" INT ";" component (";" component)* [";"]
///   component := "P" INDEX "=" expr
///   expr      := term (("+"|"-") term)*
///   term      := unary (("*"|"/") unary)*
///   unary     := ("-"|"+") unary | power
///   power     := atom ["^" INT]
///   atom      := INT | "x" INDEX | "i" | "(" expr ")"
/// Whitespace is ignored, "#" starts a comment running to end of line, and
/// division is only allowed by nonzero constants.
MapDocument parse_map(std::string_view text);

/// One expression in n variables.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars);

/// Rows separated by newlines or ";", entries by ",". Entries are constant
/// expressions, so "3/2", "-1" and "1/2 + i" are all accepted.
CoeffMatrix parse_matrix(std::string_view text);

/// Text in the map grammar; parse_map(print_map(f)).map == f.
std::string print_map(const PolyMap& f);
std::string print_matrix(const CoeffMatrix& m);

}  // namespace jc::io
