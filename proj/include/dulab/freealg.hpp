// Free associative algebra over Q(params).
#pragma once

#include "dulab/coeff.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dulab {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Gen = std::uint8_t;

// Generator names, optionally with declared inverse partners. Copies share
// storage.
class GenAlphabet {
 public:
  GenAlphabet();
  explicit GenAlphabet(std::vector<std::string> names,
                       std::vector<std::pair<std::string, std::string>> inverse_pairs = {});

  std::size_t size() const { return data_->names.size(); }
  const std::string& name(Gen g) const { return data_->names[g]; }
  const std::vector<std::string>& names() const { return data_->names; }
  std::optional<Gen> index_of(std::string_view name) const;
  std::optional<Gen> inverse_of(Gen g) const;
  // Pairs (g, g^-1) with g declared before its partner.
  std::vector<std::pair<Gen, Gen>> inverse_pairs() const;

  bool operator==(const GenAlphabet& o) const;
  bool operator!=(const GenAlphabet& o) const { return !(*this == o); }

 private:
  struct Data {
    std::vector<std::string> names;
    std::vector<int> inverse;
  };
  std::shared_ptr<const Data> data_;
};

// Finite sequence of generator indices.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Gen> gens);
  explicit Word(std::string raw) : s_(std::move(raw)) {}

  std::size_t size() const { return s_.size(); }
  bool empty() const { return s_.empty(); }
  Gen operator[](std::size_t i) const { return static_cast<Gen>(s_[i]); }
  void push_back(Gen g) { s_.push_back(static_cast<char>(g)); }
  Word sub(std::size_t pos, std::size_t len = std::string::npos) const { return Word(s_.substr(pos, len)); }
  Word reversed() const;
  // Position of the first occurrence of `w` at or after `from`.
  std::optional<std::size_t> find(const Word& w, std::size_t from = 0) const;
  bool contains(const Word& w) const { return find(w).has_value(); }
  bool matches_at(const Word& w, std::size_t pos) const {
    return pos + w.size() <= s_.size() && s_.compare(pos, w.size(), w.s_) == 0;
  }
  const std::string& raw() const { return s_; }

  Word operator+(const Word& o) const { return Word(s_ + o.s_); }
  Word& operator+=(const Word& o) {
    s_ += o.s_;
    return *this;
  }
  bool operator==(const Word& o) const { return s_ == o.s_; }
  bool operator!=(const Word& o) const { return s_ != o.s_; }
  // Shortlex on raw indices; only for container ordering.
  bool operator<(const Word& o) const {
    return s_.size() != o.s_.size() ? s_.size() < o.s_.size() : s_ < o.s_;
  }

  std::string str(const GenAlphabet& a) const;

 private:
  std::string s_;
};

// Weighted degree-lexicographic order: total weight first, then
// lexicographic by generator precedence.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  // Declaration order, unit weights.
  explicit MonomialOrder(std::size_t ngens);
  MonomialOrder(std::vector<Gen> precedence, std::vector<unsigned> weights = {});

  static MonomialOrder from_names(const GenAlphabet& a, const std::vector<std::string>& precedence,
                                  const std::map<std::string, unsigned>& weights = {});

  int compare(const Word& a, const Word& b) const;
  bool less(const Word& a, const Word& b) const { return compare(a, b) < 0; }
  unsigned weight(const Word& w) const;
  // Byte string whose lexicographic order agrees with compare().
  std::string sort_key(const Word& w) const;

  const std::vector<Gen>& precedence() const { return precedence_; }
  const std::vector<unsigned>& weights() const { return weights_; }
  std::size_t ngens() const { return rank_.size(); }
  bool unit_weights() const;

 private:
  std::vector<Gen> precedence_;
  std::vector<unsigned> rank_;
  std::vector<unsigned> weights_;
};

// Linear combination of words with coefficients in Q(params).
class NcPoly {
 public:
  using TermMap = std::map<Word, RatFunc>;

  NcPoly() = default;
  NcPoly(GenAlphabet a, ParamSet ps) : alpha_(std::move(a)), ps_(std::move(ps)) {}

  static NcPoly constant(GenAlphabet a, ParamSet ps, const RatFunc& c);
  static NcPoly word(GenAlphabet a, ParamSet ps, const Word& w, const RatFunc& c = RatFunc(1));
  static NcPoly gen(GenAlphabet a, ParamSet ps, std::string_view name);

  const GenAlphabet& alphabet() const { return alpha_; }
  const ParamSet& params() const { return ps_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  unsigned degree() const;
  RatFunc coeff(const Word& w) const;
  bool is_scalar() const;

  void add_term(const Word& w, const RatFunc& c);

  NcPoly operator-() const;
  NcPoly operator+(const NcPoly& o) const;
  NcPoly operator-(const NcPoly& o) const;
  NcPoly operator*(const NcPoly& o) const;
  NcPoly& operator+=(const NcPoly& o);
  NcPoly& operator-=(const NcPoly& o);
  NcPoly scaled(const RatFunc& c) const;
  NcPoly pow(unsigned n) const;
  // Every word reversed.
  NcPoly reversed() const;
  NcPoly substitute_params(const std::map<std::string, Rational>& values) const;
  NcPoly lifted(const ParamSet& target) const;

  bool operator==(const NcPoly& o) const;
  bool operator!=(const NcPoly& o) const { return !(*this == o); }

  // Parseable rendering in the expression grammar.
  std::string str() const;
  // Rendering with terms in decreasing order under `ord`.
  std::string str(const MonomialOrder& ord) const;

 private:
  void check_compatible(const NcPoly& o) const;
  void adopt(const NcPoly& o);

  GenAlphabet alpha_;
  ParamSet ps_;
  TermMap terms_;
};

NcPoly nc_add(const NcPoly& a, const NcPoly& b);
NcPoly nc_mul(const NcPoly& a, const NcPoly& b);
NcPoly nc_scale(const NcPoly& a, const RatFunc& c);
NcPoly nc_pow(const NcPoly& a, unsigned n);
// [a, b] = ab - ba.
NcPoly bracket(const NcPoly& a, const NcPoly& b);

struct LeadingTerm {
  Word word;
  RatFunc coef;
};
LeadingTerm leading_term(const NcPoly& p, const MonomialOrder& ord);

// Replace each generator g by images[g]; with `reverse` the factors of every
// word are multiplied in reverse order.
NcPoly substitute_gens(const NcPoly& p, const std::vector<NcPoly>& images, bool reverse = false);

}  // namespace dulab
