#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "logdmod/poly.hpp"
#include "logdmod/weyl.hpp"

namespace logdmod {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Grammar (standard precedence, left-associative):
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := ('+' | '-') unary | power
//   power  := atom ('^' integer)?
//   atom   := integer | identifier | '(' expr ')'
// Identifiers are the ring variables and their partials spelled `d<var>`.
// Division is only allowed by nonzero constants; juxtaposition is an error.
WeylOp parse_operator(std::string_view src, const std::vector<std::string>& vars);

// Same grammar with partials rejected.
Poly parse_polynomial(std::string_view src, const std::vector<std::string>& vars);

// "x,y,z" -> {"x","y","z"}; validates identifiers and uniqueness.
std::vector<std::string> parse_variable_list(std::string_view src);

}  // namespace logdmod
