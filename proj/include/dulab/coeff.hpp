// Exact coefficient field: rational functions over Q in a finite set of
// named parameters.
#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dulab {

using Rational = mpq_class;
using Integer = mpz_class;

class CoeffError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PoleError : public CoeffError {
 public:
  using CoeffError::CoeffError;
};

class DivisionByZero : public CoeffError {
 public:
  using CoeffError::CoeffError;
};

class ParamMismatch : public CoeffError {
 public:
  using CoeffError::CoeffError;
};

inline constexpr std::size_t kMaxParams = 10;

// Ordered list of parameter names. Copies share storage.
class ParamSet {
 public:
  ParamSet();
  explicit ParamSet(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  bool empty() const { return names_->empty(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  bool contains(std::string_view name) const { return index_of(name).has_value(); }

  // Names of this set followed by the new names of `other`.
  ParamSet merged(const ParamSet& other) const;

  bool operator==(const ParamSet& o) const;
  bool operator!=(const ParamSet& o) const { return !(*this == o); }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

using Exponents = std::array<std::uint16_t, kMaxParams>;

unsigned total_degree(const Exponents& e);
// Graded lex: total degree first, then lex with parameter 0 most significant.
int grlex_compare(const Exponents& a, const Exponents& b);

struct Term {
  Exponents exp{};
  Rational coef;
};

// Polynomial over Q. Terms sorted by decreasing grlex, no zero coefficients.
class MultiPoly {
 public:
  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);
  static MultiPoly variable(std::size_t idx, unsigned power = 1);
  static MultiPoly monomial(const Exponents& e, const Rational& c);
  static MultiPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  Rational constant_value() const;  // requires is_constant()
  std::size_t size() const { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  unsigned degree_in(std::size_t var) const;
  unsigned min_degree_in(std::size_t var) const;
  bool uses(std::size_t var) const;
  unsigned total_degree() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly shifted(const Exponents& e) const;  // multiply by monomial
  MultiPoly pow(unsigned n) const;

  // Exact division; nullopt when `d` does not divide.
  std::optional<MultiPoly> divide_exact(const MultiPoly& d) const;

  // Evaluate variables listed in `values` (index -> value); others stay.
  MultiPoly substitute(const std::map<std::size_t, Rational>& values) const;
  // Re-index variables: variable i becomes mapping[i].
  MultiPoly reindexed(const std::vector<std::size_t>& mapping) const;

  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  // Lcm of coefficient denominators and gcd of numerators.
  Rational content() const;

 private:
  std::vector<Term> terms_;
};

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

// Rendering with integer coefficients; `names` gives variable names.
std::string render_poly(const MultiPoly& p, const std::vector<std::string>& names);

// Element of Q(params) in canonical form: gcd(num, den) = 1 and den is a
// primitive integer polynomial with positive grlex-leading coefficient.
class RatFunc {
 public:
  RatFunc();
  RatFunc(long v);  // NOLINT: constants convert implicitly
  RatFunc(const Rational& v);  // NOLINT
  RatFunc(ParamSet ps, const Rational& v);
  RatFunc(ParamSet ps, MultiPoly num, MultiPoly den = MultiPoly(Rational(1)));

  static RatFunc param(const ParamSet& ps, std::string_view name);

  const ParamSet& params() const { return ps_; }
  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const;
  Rational constant_value() const;  // requires is_constant()

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc inv() const;
  RatFunc pow(long n) const;

  // Replace parameters by rational values. Throws PoleError when the
  // denominator vanishes.
  RatFunc substitute(const std::map<std::string, Rational>& values) const;
  // Same element viewed over a larger parameter set.
  RatFunc lifted(const ParamSet& target) const;

  bool operator==(const RatFunc& o) const;
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string str() const;
  // Parenthesised unless the rendering is a single signed token.
  std::string str_atom() const;

 private:
  void normalize();
  static ParamSet common(const RatFunc& a, const RatFunc& b);
  RatFunc coerced(const ParamSet& ps) const;

  ParamSet ps_;
  MultiPoly num_;
  MultiPoly den_;
};

std::string render_assignment(const std::map<std::string, Rational>& values);

// Parse "p/q" or "p" into a rational; throws CoeffError otherwise.
Rational parse_rational(std::string_view text);

}  // namespace dulab
