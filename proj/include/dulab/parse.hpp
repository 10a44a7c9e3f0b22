// Expression language for relations and images.
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' ['-'] int)?
//   atom   := int | ident | '[' expr ',' expr ']' | '(' expr ')'
//
// Identifiers resolve first against generators, then scalars. Only scalar
// operands may be divided by or raised to negative powers.
#pragma once

#include "dulab/freealg.hpp"

#include <functional>
#include <memory>

namespace dulab {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t pos);
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

struct ExprAst {
  enum class Kind { number, ident, sum, difference, negate, product, quotient, power, bracket };

  Kind kind = Kind::number;
  Integer number;    // number
  std::string name;  // ident
  long exponent = 0; // power
  std::size_t pos = 0;
  std::vector<std::unique_ptr<ExprAst>> children;
};

std::unique_ptr<ExprAst> parse_expr(std::string_view text);

// Scalar lookup for identifiers that are not generators.
using ScalarResolver = std::function<std::optional<RatFunc>(std::string_view)>;

// Parameters of `ps` as symbols.
ScalarResolver param_resolver(const ParamSet& ps);

NcPoly lower(const ExprAst& ast, const GenAlphabet& alpha, const ParamSet& ps, const ScalarResolver& scalars);
NcPoly lower(const ExprAst& ast, const GenAlphabet& alpha, const ParamSet& ps);

NcPoly parse_poly(std::string_view text, const GenAlphabet& alpha, const ParamSet& ps);
NcPoly parse_poly(std::string_view text, const GenAlphabet& alpha, const ParamSet& ps,
                  const ScalarResolver& scalars);
// Expression without generators.
RatFunc parse_scalar(std::string_view text, const ParamSet& ps);

}  // namespace dulab
