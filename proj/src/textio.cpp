#include "gca/textio.hpp"

#include <cctype>
#include <sstream>

namespace gca {

std::string var_name(VarId v) {
  std::string base;
  switch (v.kind) {
    case VarKind::X: base = "x"; break;
    case VarKind::Y: base = "y"; break;
    case VarKind::Z: base = "z"; break;
    case VarKind::U: base = "u"; break;
  }
  base += std::to_string(v.i);
  if (v.kind == VarKind::Z) base += "_" + std::to_string(v.s);
  return base;
}

VarId parse_var(const std::string& name) {
  if (name.size() < 2) throw ParseError("bad variable name: " + name);
  VarKind kind;
  switch (name[0]) {
    case 'x': kind = VarKind::X; break;
    case 'y': kind = VarKind::Y; break;
    case 'z': kind = VarKind::Z; break;
    case 'u': kind = VarKind::U; break;
    default: throw ParseError("bad variable name: " + name);
  }
  std::size_t us = name.find('_');
  try {
    if (kind == VarKind::Z) {
      if (us == std::string::npos || us == 1 || us + 1 >= name.size())
        throw ParseError("z-variables need two indices: " + name);
      return zvar(std::stoi(name.substr(1, us - 1)), std::stoi(name.substr(us + 1)));
    }
    if (us != std::string::npos) throw ParseError("unexpected '_' in " + name);
    return {kind, std::stoi(name.substr(1)), 0};
  } catch (const std::invalid_argument&) {
    throw ParseError("bad variable index in " + name);
  } catch (const std::out_of_range&) {
    throw ParseError("variable index out of range in " + name);
  }
}

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& [v, e] : m.factors()) {
    if (!out.empty()) out += "*";
    out += var_name(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const LaurentPoly& p, const std::string& plus_sign) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    mpz_class a = c;
    if (out.empty()) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      if (a < 0) {
        out += " - ";
        a = -a;
      } else {
        out += plus_sign;
      }
    }
    if (m.is_one()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += to_string(m);
    }
  }
  return out;
}

std::string to_string(const RatFunc& f) {
  if (f.den().is_one()) return to_string(f.num());
  return "(" + to_string(f.num()) + ") / (" + to_string(f.den()) + ")";
}

std::string to_string(const IntMat& m) {
  std::string out = "[";
  for (int r = 0; r < m.rows(); ++r) {
    out += r ? ",[" : "[";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ",";
      out += std::to_string(m(r, c));
    }
    out += "]";
  }
  return out + "]";
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos{0};

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  char take() {
    char c = peek();
    if (pos < s.size()) ++pos;
    return c;
  }
  bool done() { return peek() == '\0'; }

  mpz_class integer() {
    skip_ws();
    std::string digits;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) digits += s[pos++];
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
    if (digits.empty() || digits == "-" || digits == "+")
      throw ParseError("expected integer at position " + std::to_string(pos) + " in: " + s);
    return mpz_class(digits);
  }

  std::string var_token() {
    skip_ws();
    std::string tok;
    tok += s[pos++];
    while (pos < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      tok += s[pos++];
    return tok;
  }
};

LaurentPoly parse_term(Lexer& lx, bool negative) {
  mpz_class coef = negative ? -1 : 1;
  Monomial::Factors factors;
  bool expect_factor = true;
  while (expect_factor) {
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coef *= lx.integer();
    } else if (c == 'x' || c == 'y' || c == 'z' || c == 'u') {
      VarId v = parse_var(lx.var_token());
      Monomial::Exp e = 1;
      if (lx.peek() == '^') {
        lx.take();
        e = static_cast<Monomial::Exp>(lx.integer().get_si());
      }
      factors.push_back({v, e});
    } else {
      throw ParseError("expected a factor at position " + std::to_string(lx.pos) + " in: " + lx.s);
    }
    if (lx.peek() == '*') {
      lx.take();
    } else {
      expect_factor = false;
    }
  }
  return LaurentPoly::term(Monomial::from_factors(std::move(factors)), coef);
}

LaurentPoly parse_sum(Lexer& lx) {
  LaurentPoly p;
  bool negative = false;
  if (lx.peek() == '-') {
    lx.take();
    negative = true;
  } else if (lx.peek() == '+') {
    lx.take();
  }
  p += parse_term(lx, negative);
  while (!lx.done()) {
    char c = lx.peek();
    if (c == '+') {
      lx.take();
      p += parse_term(lx, false);
    } else if (c == '-') {
      lx.take();
      p += parse_term(lx, true);
    } else {
      break;
    }
  }
  return p;
}

}  // namespace

LaurentPoly parse_poly(const std::string& text) {
  Lexer lx{text};
  LaurentPoly p = parse_sum(lx);
  if (!lx.done())
    throw ParseError("trailing input at position " + std::to_string(lx.pos) + " in: " + text);
  return p;
}

namespace {

std::string strip_parens(std::string s) {
  auto is_ws = [](char c) { return std::isspace(static_cast<unsigned char>(c)); };
  while (!s.empty() && is_ws(s.front())) s.erase(s.begin());
  while (!s.empty() && is_ws(s.back())) s.pop_back();
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
    return s.substr(1, s.size() - 2);
  return s;
}

}  // namespace

RatFunc parse_ratfunc(const std::string& text) {
  // Split on the single '/'; the sum syntax has no nesting, so any slash is
  // top-level.  Each side may be wrapped in one pair of parentheses.
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) return RatFunc(parse_poly(strip_parens(text)));
  return RatFunc(parse_poly(strip_parens(text.substr(0, slash))),
                 parse_poly(strip_parens(text.substr(slash + 1))));
}

}  // namespace gca
