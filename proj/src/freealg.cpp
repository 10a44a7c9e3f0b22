#include "dulab/freealg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>

namespace dulab {

// ------------------------------------------------------------- GenAlphabet

GenAlphabet::GenAlphabet() {
  static const auto empty = std::make_shared<const Data>();
  data_ = empty;
}

GenAlphabet::GenAlphabet(std::vector<std::string> names,
                         std::vector<std::pair<std::string, std::string>> inverse_pairs) {
  if (names.size() > 200) throw AlgebraError("too many generators");
  Data d;
  d.names = std::move(names);
  d.inverse.assign(d.names.size(), -1);
  auto find = [&](const std::string& n) -> int {
    for (std::size_t i = 0; i < d.names.size(); ++i)
      if (d.names[i] == n) return int(i);
    throw AlgebraError("unknown generator in inverse pair: " + n);
  };
  for (std::size_t i = 0; i < d.names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (d.names[i] == d.names[j]) throw AlgebraError("duplicate generator name: " + d.names[i]);
  for (const auto& [a, b] : inverse_pairs) {
    int i = find(a), j = find(b);
    if (i == j || d.inverse[i] >= 0 || d.inverse[j] >= 0)
      throw AlgebraError("invalid inverse pair " + a + ", " + b);
    d.inverse[i] = j;
    d.inverse[j] = i;
  }
  data_ = std::make_shared<const Data>(std::move(d));
}

std::optional<Gen> GenAlphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < data_->names.size(); ++i)
    if (data_->names[i] == name) return static_cast<Gen>(i);
  return std::nullopt;
}

std::optional<Gen> GenAlphabet::inverse_of(Gen g) const {
  int i = data_->inverse[g];
  if (i < 0) return std::nullopt;
  return static_cast<Gen>(i);
}

std::vector<std::pair<Gen, Gen>> GenAlphabet::inverse_pairs() const {
  std::vector<std::pair<Gen, Gen>> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (data_->inverse[i] > int(i)) out.emplace_back(Gen(i), Gen(data_->inverse[i]));
  return out;
}

bool GenAlphabet::operator==(const GenAlphabet& o) const {
  return data_ == o.data_ || (data_->names == o.data_->names && data_->inverse == o.data_->inverse);
}

// -------------------------------------------------------------------- Word

Word::Word(std::initializer_list<Gen> gens) {
  for (Gen g : gens) s_.push_back(static_cast<char>(g));
}

Word Word::reversed() const { return Word(std::string(s_.rbegin(), s_.rend())); }

std::optional<std::size_t> Word::find(const Word& w, std::size_t from) const {
  auto p = s_.find(w.s_, from);
  if (p == std::string::npos) return std::nullopt;
  return p;
}

std::string Word::str(const GenAlphabet& a) const {
  if (s_.empty()) return "1";
  std::string out;
  std::size_t i = 0;
  while (i < s_.size()) {
    std::size_t j = i;
    while (j < s_.size() && s_[j] == s_[i]) ++j;
    if (!out.empty()) out += '*';
    Gen g = (*this)[i];
    out += g < a.size() ? a.name(g) : fmt::format("g{}", g);
    if (j - i > 1) out += fmt::format("^{}", j - i);
    i = j;
  }
  return out;
}

// ----------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(std::size_t ngens) {
  std::vector<Gen> prec(ngens);
  std::iota(prec.begin(), prec.end(), Gen(0));
  *this = MonomialOrder(std::move(prec));
}

MonomialOrder::MonomialOrder(std::vector<Gen> precedence, std::vector<unsigned> weights)
    : precedence_(std::move(precedence)), weights_(std::move(weights)) {
  const std::size_t n = precedence_.size();
  rank_.assign(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Gen g = precedence_[i];
    if (g >= n || rank_[g] != n) throw AlgebraError("precedence is not a permutation");
    rank_[g] = unsigned(i);
  }
  if (weights_.empty()) weights_.assign(n, 1);
  if (weights_.size() != n) throw AlgebraError("weight list length mismatch");
  for (auto w : weights_)
    if (w == 0) throw AlgebraError("generator weights must be positive");
}

MonomialOrder MonomialOrder::from_names(const GenAlphabet& a, const std::vector<std::string>& precedence,
                                        const std::map<std::string, unsigned>& weights) {
  std::vector<Gen> prec;
  if (precedence.empty()) {
    for (std::size_t i = 0; i < a.size(); ++i) prec.push_back(Gen(i));
  } else {
    for (const auto& n : precedence) {
      auto g = a.index_of(n);
      if (!g) throw AlgebraError("unknown generator in order: " + n);
      prec.push_back(*g);
    }
  }
  std::vector<unsigned> w(a.size(), 1);
  for (const auto& [n, v] : weights) {
    auto g = a.index_of(n);
    if (!g) throw AlgebraError("unknown generator in weights: " + n);
    w[*g] = v;
  }
  return MonomialOrder(std::move(prec), std::move(w));
}

unsigned MonomialOrder::weight(const Word& w) const {
  unsigned s = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s += weights_[w[i]];
  return s;
}

int MonomialOrder::compare(const Word& a, const Word& b) const {
  unsigned wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb ? -1 : 1;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    return rank_[a[i]] < rank_[b[i]] ? -1 : 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

std::string MonomialOrder::sort_key(const Word& w) const {
  std::string k;
  k.reserve(w.size() + 3);
  unsigned wt = weight(w);
  k.push_back(char((wt >> 16) & 0xFF));
  k.push_back(char((wt >> 8) & 0xFF));
  k.push_back(char(wt & 0xFF));
  for (std::size_t i = 0; i < w.size(); ++i) k.push_back(char(rank_[w[i]] + 1));
  return k;
}

bool MonomialOrder::unit_weights() const {
  return std::all_of(weights_.begin(), weights_.end(), [](unsigned w) { return w == 1; });
}

// ------------------------------------------------------------------ NcPoly

NcPoly NcPoly::constant(GenAlphabet a, ParamSet ps, const RatFunc& c) {
  return word(std::move(a), std::move(ps), Word(), c);
}

NcPoly NcPoly::word(GenAlphabet a, ParamSet ps, const Word& w, const RatFunc& c) {
  NcPoly p(std::move(a), std::move(ps));
  p.add_term(w, c);
  return p;
}

NcPoly NcPoly::gen(GenAlphabet a, ParamSet ps, std::string_view name) {
  auto g = a.index_of(name);
  if (!g) throw AlgebraError("unknown generator: " + std::string(name));
  return word(std::move(a), std::move(ps), Word{*g});
}

unsigned NcPoly::degree() const {
  unsigned d = 0;
  for (const auto& [w, c] : terms_) d = std::max<unsigned>(d, unsigned(w.size()));
  return d;
}

RatFunc NcPoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFunc(ps_, Rational(0)) : it->second;
}

bool NcPoly::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

void NcPoly::add_term(const Word& w, const RatFunc& c) {
  if (c.is_zero()) return;
  if (!c.is_constant() && c.params() != ps_) {
    if (ps_.empty())
      ps_ = c.params();
    else
      throw ParamMismatch("coefficient over a different parameter set");
  }
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void NcPoly::check_compatible(const NcPoly& o) const {
  if (alpha_ != o.alpha_ && alpha_.size() != 0 && o.alpha_.size() != 0)
    throw AlgebraError("polynomials over different alphabets");
  if (ps_ != o.ps_ && !ps_.empty() && !o.ps_.empty())
    throw ParamMismatch("polynomials over different parameter sets");
}

void NcPoly::adopt(const NcPoly& o) {
  if (alpha_.size() == 0) alpha_ = o.alpha_;
  if (ps_.empty()) ps_ = o.ps_;
}

NcPoly NcPoly::operator-() const {
  NcPoly r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

NcPoly& NcPoly::operator+=(const NcPoly& o) {
  check_compatible(o);
  adopt(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& o) {
  check_compatible(o);
  adopt(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NcPoly NcPoly::operator+(const NcPoly& o) const {
  NcPoly r = *this;
  r += o;
  return r;
}

NcPoly NcPoly::operator-(const NcPoly& o) const {
  NcPoly r = *this;
  r -= o;
  return r;
}

NcPoly NcPoly::operator*(const NcPoly& o) const {
  check_compatible(o);
  NcPoly r(alpha_, ps_);
  r.adopt(o);
  for (const auto& [wa, ca] : terms_)
    for (const auto& [wb, cb] : o.terms_) r.add_term(wa + wb, ca * cb);
  return r;
}

NcPoly NcPoly::scaled(const RatFunc& c) const {
  NcPoly r(alpha_, ps_);
  if (c.is_zero()) return r;
  if (!c.is_constant() && ps_.empty()) r.ps_ = c.params();
  for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
  return r;
}

NcPoly NcPoly::pow(unsigned n) const {
  NcPoly r = constant(alpha_, ps_, RatFunc(1));
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

NcPoly NcPoly::reversed() const {
  NcPoly r(alpha_, ps_);
  for (const auto& [w, c] : terms_) r.add_term(w.reversed(), c);
  return r;
}

NcPoly NcPoly::substitute_params(const std::map<std::string, Rational>& values) const {
  NcPoly r(alpha_, ps_);
  for (const auto& [w, c] : terms_) r.add_term(w, c.substitute(values));
  return r;
}

NcPoly NcPoly::lifted(const ParamSet& target) const {
  NcPoly r(alpha_, target);
  for (const auto& [w, c] : terms_) r.add_term(w, c.lifted(target));
  return r;
}

bool NcPoly::operator==(const NcPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  for (; i != terms_.end(); ++i, ++j)
    if (i->first != j->first || i->second != j->second) return false;
  return true;
}

namespace {

std::string render_terms(const std::vector<std::pair<Word, RatFunc>>& terms, const GenAlphabet& a) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c0] : terms) {
    RatFunc c = c0;
    bool neg = c.den().is_one() && c.num().size() == 1 && c.num().leading().coef < 0;
    if (neg) c = -c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (w.empty()) {
      out += c.str_atom();
    } else if (c.is_one()) {
      out += w.str(a);
    } else {
      out += c.str_atom() + "*" + w.str(a);
    }
  }
  return out;
}

}  // namespace

std::string NcPoly::str() const {
  std::vector<std::pair<Word, RatFunc>> v(terms_.rbegin(), terms_.rend());
  return render_terms(v, alpha_);
}

std::string NcPoly::str(const MonomialOrder& ord) const {
  std::vector<std::pair<Word, RatFunc>> v(terms_.begin(), terms_.end());
  std::sort(v.begin(), v.end(), [&](const auto& x, const auto& y) { return ord.less(y.first, x.first); });
  return render_terms(v, alpha_);
}

// --------------------------------------------------------------- free ops

NcPoly nc_add(const NcPoly& a, const NcPoly& b) { return a + b; }
NcPoly nc_mul(const NcPoly& a, const NcPoly& b) { return a * b; }
NcPoly nc_scale(const NcPoly& a, const RatFunc& c) { return a.scaled(c); }
NcPoly nc_pow(const NcPoly& a, unsigned n) { return a.pow(n); }
NcPoly bracket(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

LeadingTerm leading_term(const NcPoly& p, const MonomialOrder& ord) {
  if (p.is_zero()) throw AlgebraError("leading term of zero polynomial");
  const std::pair<const Word, RatFunc>* best = nullptr;
  for (const auto& t : p.terms())
    if (!best || ord.less(best->first, t.first)) best = &t;
  return {best->first, best->second};
}

NcPoly substitute_gens(const NcPoly& p, const std::vector<NcPoly>& images, bool reverse) {
  if (images.size() < p.alphabet().size()) throw AlgebraError("missing generator images");
  NcPoly out;
  for (const auto& img : images) {
    if (out.alphabet().size() == 0 && img.alphabet().size() != 0)
      out = NcPoly(img.alphabet(), img.params().empty() ? p.params() : img.params());
  }
  for (const auto& [w, c] : p.terms()) {
    NcPoly prod = NcPoly::constant(out.alphabet(), out.params(), RatFunc(1));
    for (std::size_t i = 0; i < w.size(); ++i) {
      const NcPoly& f = images[w[i]];
      prod = reverse ? f * prod : prod * f;
    }
    out += prod.scaled(c);
  }
  return out;
}

}  // namespace dulab
