#include "cls_parse.hpp"

#include <cctype>

namespace clsvar {

namespace {

struct Lexer {
  std::string s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (isalnum((unsigned char)s[pos]))) ++pos;
    return s.substr(start, pos - start);
  }
  int integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
    if (start == pos) throw ParseError("expected an integer", pos);
    return std::stoi(s.substr(start, pos - start));
  }
};

struct TermData {
  int v = 0, w = 0, m = 0;
  std::map<int, int> x, z;
  int spin_count = 0;
  bool top = false;
  int linf_count = 0, rinf_count = 0;
};

void apply_atom(Series family, TermData& t, const std::string& name, int arg, int exponent,
                size_t pos) {
  if (exponent < 0) throw ParseError("negative exponent", pos);
  if (name == "E") {
    t.m += exponent;
  } else if (name == "Einf") {
    if (exponent != 1) throw ParseError("Einf cannot carry an exponent", pos);
    t.top = true;
  } else if (name == "Spin") {
    if (family != Series::SO) throw ParseError("Spin exists only for so", pos);
    t.spin_count += exponent;
  } else if (name == "L") {
    if (arg < 1) throw ParseError("L index must be positive", pos);
    t.x[arg] += exponent;
  } else if (name == "R") {
    if (family != Series::SL) throw ParseError("R-symbols exist only for sl", pos);
    if (arg < 1) throw ParseError("R index must be positive", pos);
    t.z[arg] += exponent;
  } else if (name == "Linf") {
    if (arg < 1) throw ParseError("Linf depth must be positive", pos);
    if (exponent != 1 || ++t.linf_count > 1)
      throw ParseError("a normal form has a single Linf factor", pos);
    t.v = arg;
  } else if (name == "Rinf") {
    if (family != Series::SL) throw ParseError("R-symbols exist only for sl", pos);
    if (arg < 1) throw ParseError("Rinf depth must be positive", pos);
    if (exponent != 1 || ++t.rinf_count > 1)
      throw ParseError("a normal form has a single Rinf factor", pos);
    t.w = arg;
  } else if (name == "1") {
    // identity factor
  } else {
    throw ParseError("unknown symbol '" + name + "'", pos);
  }
}

IrreducibleCLS parse_term(Series family, Lexer& lx) {
  TermData t;
  while (true) {
    size_t at = lx.pos;
    std::string name;
    int arg = -1;
    if (lx.peek() == '1') {
      lx.eat('1');
      name = "1";
    } else {
      name = lx.ident();
      if (name.empty()) throw ParseError("expected a c.l.s. symbol", lx.pos);
      if (lx.peek() == '(') {
        lx.eat('(');
        arg = lx.integer();
        if (!lx.eat(')')) throw ParseError("expected ')'", lx.pos);
      }
    }
    int exponent = 1;
    if (lx.peek() == '^') {
      lx.eat('^');
      exponent = lx.integer();
    }
    apply_atom(family, t, name, arg, exponent, at);
    if (!lx.eat('*')) break;
  }
  if (t.top) {
    if (t.v || t.w || t.m || t.spin_count || !t.x.empty() || !t.z.empty())
      throw ParseError("Einf cannot be combined with other factors", lx.pos);
    return top_cls(family);
  }
  if (t.spin_count > 1) throw ParseError("Spin*Spin has no normal form", lx.pos);
  return validate_normal_form(family, t.v, t.w, std::move(t.x), std::move(t.z), t.m,
                              t.spin_count == 1);
}

}  // namespace

IrreducibleCLS parse_irreducible(Series family, const std::string& text) {
  Lexer lx{text};
  IrreducibleCLS q = parse_term(family, lx);
  lx.skip_ws();
  if (lx.pos != lx.s.size()) throw ParseError("trailing input", lx.pos);
  return q;
}

CLS parse_cls(Series family, const std::string& text) {
  Lexer lx{text};
  std::vector<IrreducibleCLS> parts;
  parts.push_back(parse_term(family, lx));
  while (lx.eat('+')) parts.push_back(parse_term(family, lx));
  lx.skip_ws();
  if (lx.pos != lx.s.size()) throw ParseError("trailing input", lx.pos);
  return reduce_components(family, std::move(parts));
}

}  // namespace clsvar
