#include "mono/expr.hpp"

#include <cctype>

namespace mono {

namespace {

struct Parser {
  const std::string& s;
  const ExprVars& vars;
  size_t pos = 0;

  Parser(const std::string& text, const ExprVars& v) : s(text), vars(v) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
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

  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at offset " + std::to_string(pos) + " in \"" + s + "\"");
  }

  BivarPoly parse() {
    BivarPoly v = expr();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return v;
  }

  BivarPoly expr() {
    BivarPoly v = eat('-') ? -term() : (eat('+'), term());
    while (true) {
      if (eat('+'))
        v = v + term();
      else if (eat('-'))
        v = v - term();
      else
        return v;
    }
  }

  BivarPoly term() {
    BivarPoly v = factor();
    while (true) {
      if (eat('*')) {
        v = v * factor();
      } else if (eat('/')) {
        BivarPoly d = factor();
        if (d.deg_x() > 0) fail("division by an expression containing the main variable");
        if (d.is_zero()) fail("division by zero");
        v = v * (RationalFunction(1) / d.coeff(0));
      } else {
        return v;
      }
    }
  }

  BivarPoly factor() {
    if (eat('-')) return -factor();
    BivarPoly v = primary();
    while (eat('^')) {
      skip_ws();
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        fail("exponent must be a nonnegative integer");
      unsigned long e = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        e = e * 10 + static_cast<unsigned long>(s[pos] - '0');
        if (e > 10000) fail("exponent too large");
        ++pos;
      }
      v = v.pow(static_cast<unsigned>(e));
    }
    return v;
  }

  BivarPoly primary() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      BivarPoly v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return BivarPoly(RationalFunction(Rational(Integer(s.substr(start, pos - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (!vars.main.empty() && name == vars.main) return BivarPoly::var_x();
      if (!vars.param.empty() && name == vars.param)
        return BivarPoly(RationalFunction::variable());
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

}  // namespace

BivarPoly parse_expression(const std::string& text, const ExprVars& vars) {
  Parser p(text, vars);
  return p.parse();
}

RationalFunction parse_rational_function(const std::string& text, const std::string& var) {
  BivarPoly p = parse_expression(text, ExprVars{"", var});
  if (p.deg_x() > 0) throw ParseError("expression is not univariate: " + text);
  return p.coeff(0);
}

}  // namespace mono
