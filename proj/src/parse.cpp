#include "dulab/parse.hpp"

#include <fmt/format.h>

#include <cctype>

namespace dulab {

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(fmt::format("{} at position {}", msg, pos)), pos_(pos) {}

namespace {

using Node = std::unique_ptr<ExprAst>;

Node make_node(ExprAst::Kind k, std::size_t pos) {
  auto n = std::make_unique<ExprAst>();
  n->kind = k;
  n->pos = pos;
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Node parse() {
    Node e = expr();
    skip();
    if (i_ != s_.size()) throw ParseError(fmt::format("unexpected '{}'", s_[i_]), i_);
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) {
      if (i_ >= s_.size()) throw ParseError(fmt::format("expected '{}' but input ended", c), i_);
      throw ParseError(fmt::format("expected '{}'", c), i_);
    }
  }

  Node expr() {
    skip();
    std::size_t start = i_;
    Node lhs;
    if (accept('-')) {
      lhs = make_node(ExprAst::Kind::negate, start);
      lhs->children.push_back(term());
    } else {
      lhs = term();
    }
    for (;;) {
      skip();
      std::size_t at = i_;
      ExprAst::Kind k;
      if (accept('+'))
        k = ExprAst::Kind::sum;
      else if (accept('-'))
        k = ExprAst::Kind::difference;
      else
        break;
      Node n = make_node(k, at);
      n->children.push_back(std::move(lhs));
      n->children.push_back(term());
      lhs = std::move(n);
    }
    return lhs;
  }

  Node term() {
    Node lhs = factor();
    for (;;) {
      skip();
      std::size_t at = i_;
      ExprAst::Kind k;
      if (accept('*'))
        k = ExprAst::Kind::product;
      else if (accept('/'))
        k = ExprAst::Kind::quotient;
      else
        break;
      Node n = make_node(k, at);
      n->children.push_back(std::move(lhs));
      n->children.push_back(factor());
      lhs = std::move(n);
    }
    return lhs;
  }

  Node factor() {
    Node base = atom();
    skip();
    std::size_t at = i_;
    if (!accept('^')) return base;
    bool neg = accept('-');
    skip();
    std::size_t d0 = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (i_ == d0) throw ParseError("expected integer exponent", i_);
    if (i_ - d0 > 6) throw ParseError("exponent too large", d0);
    long e = std::stol(std::string(s_.substr(d0, i_ - d0)));
    Node n = make_node(ExprAst::Kind::power, at);
    n->exponent = neg ? -e : e;
    n->children.push_back(std::move(base));
    return n;
  }

  Node atom() {
    skip();
    std::size_t at = i_;
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      Node n = make_node(ExprAst::Kind::number, at);
      n->number = Integer(std::string(s_.substr(at, i_ - at)));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
      Node n = make_node(ExprAst::Kind::ident, at);
      n->name = std::string(s_.substr(at, i_ - at));
      return n;
    }
    if (accept('(')) {
      Node e = expr();
      expect(')');
      return e;
    }
    if (accept('[')) {
      Node n = make_node(ExprAst::Kind::bracket, at);
      n->children.push_back(expr());
      expect(',');
      n->children.push_back(expr());
      expect(']');
      return n;
    }
    throw ParseError(fmt::format("unexpected '{}'", c), i_);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

std::unique_ptr<ExprAst> parse_expr(std::string_view text) { return Parser(text).parse(); }

ScalarResolver param_resolver(const ParamSet& ps) {
  return [ps](std::string_view name) -> std::optional<RatFunc> {
    if (!ps.contains(name)) return std::nullopt;
    return RatFunc::param(ps, name);
  };
}

namespace {

RatFunc scalar_of(const NcPoly& p, const ExprAst& at, const char* what) {
  if (!p.is_scalar()) throw ParseError(fmt::format("{} of a non-scalar expression", what), at.pos);
  return p.coeff(Word{});
}

}  // namespace

NcPoly lower(const ExprAst& ast, const GenAlphabet& alpha, const ParamSet& ps, const ScalarResolver& scalars) {
  using K = ExprAst::Kind;
  auto sub = [&](std::size_t i) { return lower(*ast.children[i], alpha, ps, scalars); };
  switch (ast.kind) {
    case K::number:
      return NcPoly::constant(alpha, ps, RatFunc(Rational(ast.number)));
    case K::ident: {
      if (alpha.index_of(ast.name)) return NcPoly::gen(alpha, ps, ast.name);
      if (auto v = scalars(ast.name)) return NcPoly::constant(alpha, ps, *v);
      throw ParseError("unknown identifier '" + ast.name + "'", ast.pos);
    }
    case K::sum:
      return sub(0) + sub(1);
    case K::difference:
      return sub(0) - sub(1);
    case K::negate:
      return -sub(0);
    case K::product:
      return sub(0) * sub(1);
    case K::quotient: {
      RatFunc d = scalar_of(sub(1), ast, "division");
      if (d.is_zero()) throw ParseError("division by zero", ast.pos);
      return sub(0).scaled(d.inv());
    }
    case K::power: {
      NcPoly b = sub(0);
      if (ast.exponent >= 0) {
        if (b.is_scalar()) return NcPoly::constant(alpha, ps, b.coeff(Word{}).pow(ast.exponent));
        return b.pow(static_cast<unsigned>(ast.exponent));
      }
      if (!b.is_scalar()) throw ParseError("negative power of a generator expression", ast.pos);
      RatFunc c = b.coeff(Word{});
      if (c.is_zero()) throw ParseError("negative power of zero", ast.pos);
      return NcPoly::constant(alpha, ps, c.pow(ast.exponent));
    }
    case K::bracket:
      return bracket(sub(0), sub(1));
  }
  throw ParseError("bad node", ast.pos);
}

NcPoly lower(const ExprAst& ast, const GenAlphabet& alpha, const ParamSet& ps) {
  return lower(ast, alpha, ps, param_resolver(ps));
}

NcPoly parse_poly(std::string_view text, const GenAlphabet& alpha, const ParamSet& ps) {
  return lower(*parse_expr(text), alpha, ps);
}

NcPoly parse_poly(std::string_view text, const GenAlphabet& alpha, const ParamSet& ps, const ScalarResolver& scalars) {
  return lower(*parse_expr(text), alpha, ps, scalars);
}

RatFunc parse_scalar(std::string_view text, const ParamSet& ps) {
  NcPoly p = parse_poly(text, GenAlphabet(), ps);
  return p.is_zero() ? RatFunc(ps, Rational(0)) : p.coeff(Word{});
}

}  // namespace dulab
