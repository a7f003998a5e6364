#pragma once

#include <string>

#include "cls.hpp"

namespace clsvar {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

// Grammar:  union := term ('+' term)* ; term := factor ('*' factor)* ;
// factor := atom ('^' int)? ; atom := E | Einf | Spin | L(p) | Linf(v)
//         | R(q) | Rinf(w) | 1
// Parsed terms are validated normal forms; unions are reduced to antichains.
IrreducibleCLS parse_irreducible(Series family, const std::string& text);
CLS parse_cls(Series family, const std::string& text);

}  // namespace clsvar
