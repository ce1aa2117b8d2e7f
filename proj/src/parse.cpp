// Copyright 2026 The mwk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mwk/parse.hpp"

#include <cctype>
#include <optional>

namespace mwk {
namespace {

struct Token {
  enum Kind { Num, Ident, Sym, End } kind;
  std::string text;
  size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (std::isdigit(c)) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Num, s.substr(i, j - i), i});
      i = j;
    } else if (std::isalpha(c)) {
      size_t j = i;
      while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Ident, s.substr(i, j - i), i});
      i = j;
    } else if (std::string("+-*/^()[]<>,").find(static_cast<char>(c)) != std::string::npos) {
      out.push_back({Token::Sym, std::string(1, static_cast<char>(c)), i});
      ++i;
    } else {
      fail(ErrorCode::ParseError, "unexpected character '" + std::string(1, static_cast<char>(c)) + "' at " +
                                      std::to_string(i));
    }
  }
  out.push_back({Token::End, "", s.size()});
  return out;
}

// A value of F_q(t) (or F_q): kept factored while only products occur.
struct Val {
  bool zero = false;
  bool factored = true;
  RatUnit u;
  Poly num, den;
};

class Parser {
 public:
  Parser(const FiniteField& F, bool rational, const std::string& s)
      : F_(F), rational_(rational), src_(s), toks_(lex(s)) {}

  const Token& peek() const { return toks_[i_]; }
  bool at_sym(const char* s) const { return peek().kind == Token::Sym && peek().text == s; }
  bool at_ident(const char* s) const { return peek().kind == Token::Ident && peek().text == s; }
  Token next() { return toks_[i_++]; }
  void expect(const char* s) {
    if (!at_sym(s)) error(std::string("expected '") + s + "'");
    ++i_;
  }
  void expect_end() {
    if (peek().kind != Token::End) error("trailing input");
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorCode::ParseError, msg + " at position " + std::to_string(peek().pos) + " in \"" + src_ + "\"");
  }

  int64_t parse_int_literal() {
    if (peek().kind != Token::Num) error("expected integer");
    const std::string t = next().text;
    if (t.size() > 17) error("integer literal too large");
    return std::stoll(t);
  }
  int64_t parse_signed_exponent() {
    bool neg = false;
    if (at_sym("-")) {
      neg = true;
      next();
    }
    int64_t v = parse_int_literal();
    return neg ? -v : v;
  }

  // ---- units ----
  Val unit_sum() {
    Val v = unit_term();
    while (at_sym("+") || at_sym("-")) {
      bool minus = next().text == "-";
      Val w = unit_term();
      v = add(v, w, minus);
    }
    return v;
  }
  Val unit_term() {
    Val v = unit_factor();
    while (at_sym("*") || at_sym("/")) {
      bool div = next().text == "/";
      Val w = unit_factor();
      v = div ? divide(v, w) : mul(v, w);
    }
    return v;
  }
  Val unit_factor() {
    if (at_sym("-")) {
      next();
      Val v = unit_factor();
      return mul(v, constant(F_.minus_one()));
    }
    Val v = unit_atom();
    if (at_sym("^")) {
      next();
      v = power(v, parse_signed_exponent());
    }
    return v;
  }
  Val unit_atom() {
    if (peek().kind == Token::Num) {
      int64_t k = parse_int_literal();
      Elem e;
      if (k < F_.q()) e = static_cast<Elem>(k);
      else if (F_.d() == 1) e = F_.from_int(k);
      else error("literal " + std::to_string(k) + " is not an element code of " + F_.name());
      return constant(e);
    }
    if (at_ident("g")) {
      next();
      return constant(F_.generator());
    }
    if (at_ident("t")) {
      if (!rational_) error("variable t is not allowed over a finite field");
      next();
      Val v;
      v.u = RatUnit::t(F_);
      return v;
    }
    if (at_sym("(")) {
      next();
      Val v = unit_sum();
      expect(")");
      return v;
    }
    error("expected a unit");
  }

  Val constant(Elem e) {
    Val v;
    if (e == 0) {
      v.zero = true;
      return v;
    }
    v.u = RatUnit(FFUnit::from_elem(F_, e));
    return v;
  }
  void to_polys(Val& v) {
    if (v.zero || !v.factored) return;
    v.num = v.u.numerator();
    v.den = v.u.denominator();
    v.factored = false;
  }
  void to_factored(Val& v) {
    if (v.zero || v.factored) return;
    v.u = RatUnit::from_polys(v.num, v.den);
    v.factored = true;
  }
  Val mul(Val a, Val b) {
    if (a.zero || b.zero) return constant(0);
    if (a.factored && b.factored) {
      a.u = a.u * b.u;
      return a;
    }
    to_polys(a);
    to_polys(b);
    a.num = a.num * b.num;
    a.den = a.den * b.den;
    return a;
  }
  Val divide(Val a, Val b) {
    if (b.zero) error("division by zero");
    to_factored(b);
    b.u = b.u.inverse();
    return mul(a, b);
  }
  Val power(Val a, int64_t k) {
    if (a.zero) {
      if (k <= 0) error("zero raised to a nonpositive power");
      return a;
    }
    to_factored(a);
    a.u = a.u.pow(k);
    return a;
  }
  Val add(Val a, Val b, bool minus) {
    if (minus) b = mul(b, constant(F_.minus_one()));
    if (b.zero) return a;
    if (a.zero) return b;
    to_polys(a);
    to_polys(b);
    Val r;
    r.factored = false;
    r.num = a.num * b.den + b.num * a.den;
    r.den = a.den * b.den;
    if (r.num.is_zero()) return constant(0);
    return r;
  }
  RatUnit finish_unit(Val v) {
    if (v.zero) error("zero is not a unit");
    to_factored(v);
    return v.u;
  }

  // ---- expressions ----
  template <class U>
  SymExpr<U> expr_sum() {
    SymExpr<U> acc(F_);
    bool first = true;
    while (true) {
      bool minus = false;
      if (at_sym("-")) {
        minus = true;
        next();
      } else if (!first) {
        if (!at_sym("+")) break;
        next();
      }
      SymExpr<U> t = expr_prod<U>();
      acc += minus ? -t : t;
      first = false;
      if (!at_sym("+") && !at_sym("-")) break;
    }
    return acc;
  }
  template <class U>
  SymExpr<U> expr_prod() {
    SymExpr<U> v = expr_factor<U>();
    while (at_sym("*")) {
      next();
      v = v * expr_factor<U>();
    }
    return v;
  }
  template <class U>
  SymExpr<U> expr_factor() {
    SymExpr<U> v = expr_atom<U>();
    if (at_sym("^")) {
      next();
      int64_t k = parse_int_literal();
      v = v.pow(static_cast<int>(k));
    }
    return v;
  }
  template <class U>
  U unit_in_expr();
  template <class U>
  SymExpr<U> expr_atom() {
    using X = SymExpr<U>;
    if (peek().kind == Token::Num) return X::integer(F_, parse_int_literal());
    if (at_ident("eta")) {
      next();
      return X::eta(F_);
    }
    if (at_ident("h")) {
      next();
      return X::h_elem(F_);
    }
    if (at_ident("eps")) {
      next();
      return X::eps_elem(F_);
    }
    if (at_sym("[")) {
      next();
      std::vector<U> units{unit_in_expr<U>()};
      while (at_sym(",")) {
        next();
        units.push_back(unit_in_expr<U>());
      }
      expect("]");
      return X::symbol(F_, std::move(units));
    }
    if (at_sym("<")) {
      next();
      U u = unit_in_expr<U>();
      expect(">");
      return X::angle(u);
    }
    if (at_sym("(")) {
      next();
      X v = expr_sum<U>();
      expect(")");
      return v;
    }
    error("expected an expression");
  }

 private:
  const FiniteField& F_;
  bool rational_;
  std::string src_;
  std::vector<Token> toks_;
  size_t i_ = 0;
};

template <>
FFUnit Parser::unit_in_expr<FFUnit>() {
  RatUnit u = finish_unit(unit_sum());
  return u.constant();
}

template <>
RatUnit Parser::unit_in_expr<RatUnit>() {
  return finish_unit(unit_sum());
}

}  // namespace

std::string FieldSpec::to_string() const {
  return std::to_string(base->q()) + (rational ? "(t)" : "");
}

FieldSpec parse_field(const std::string& s) {
  std::string core = s;
  bool rational = false;
  if (core.size() > 3 && core.substr(core.size() - 3) == "(t)") {
    rational = true;
    core = core.substr(0, core.size() - 3);
  }
  if (core.rfind("F_", 0) == 0) core = core.substr(2);
  if (core.empty() || core.find_first_not_of("0123456789") != std::string::npos)
    fail(ErrorCode::ParseError, "bad field '" + s + "'");
  return {&FiniteField::of_order(std::stoll(core)), rational};
}

FFUnit parse_ff_unit(const FiniteField& F, const std::string& s) {
  Parser p(F, false, s);
  RatUnit u = p.finish_unit(p.unit_sum());
  p.expect_end();
  return u.constant();
}

RatUnit parse_rat_unit(const FiniteField& F, const std::string& s) {
  Parser p(F, true, s);
  RatUnit u = p.finish_unit(p.unit_sum());
  p.expect_end();
  return u;
}

Poly parse_poly(const FiniteField& F, const std::string& s) {
  RatUnit u = parse_rat_unit(F, s);
  if (!u.denominator().coeffs().empty() && u.denominator().degree() != 0)
    fail(ErrorCode::ParseError, "'" + s + "' is not a polynomial");
  return u.numerator();
}

std::string unit_to_string(const FFUnit& u) { return std::to_string(u.elem()); }

std::string unit_to_string(const RatUnit& u) {
  const auto& f = u.factors();
  if (f.empty()) return unit_to_string(u.constant());
  if (u.constant().is_one() && f.size() == 1 && f.begin()->second == 1) return f.begin()->first.to_string();
  std::string out;
  if (!u.constant().is_one()) out = unit_to_string(u.constant());
  for (auto& [g, e] : f) {
    if (!out.empty()) out += "*";
    bool bare = g.degree() == 1 && g.coeff(0) == 0;
    out += bare ? g.to_string() : "(" + g.to_string() + ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

FFExpr parse_ff_expr(const FiniteField& F, const std::string& s) {
  Parser p(F, false, s);
  FFExpr x = p.expr_sum<FFUnit>();
  p.expect_end();
  return x;
}

RatExpr parse_rat_expr(const FiniteField& F, const std::string& s) {
  Parser p(F, true, s);
  RatExpr x = p.expr_sum<RatUnit>();
  p.expect_end();
  return x;
}

template <class U>
std::string expr_to_string(const SymExpr<U>& x) {
  if (x.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : x.terms()) {
    int64_t a = c < 0 ? -c : c;
    if (first) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    first = false;
    std::string body;
    if (m.d == 1) body = "eta";
    else if (m.d > 1) body = "eta^" + std::to_string(m.d);
    if (!m.units.empty()) {
      if (!body.empty()) body += "*";
      body += "[";
      for (size_t i = 0; i < m.units.size(); ++i) {
        if (i) body += ", ";
        body += unit_to_string(m.units[i]);
      }
      body += "]";
    }
    if (body.empty()) out += std::to_string(a);
    else if (a == 1) out += body;
    else out += std::to_string(a) + "*" + body;
  }
  return out;
}

template std::string expr_to_string(const FFExpr&);
template std::string expr_to_string(const RatExpr&);

}  // namespace mwk
