#include "dulab/coeff.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dulab {

// ---------------------------------------------------------------- ParamSet

namespace {
const std::shared_ptr<const std::vector<std::string>>& empty_names() {
  static const auto names = std::make_shared<const std::vector<std::string>>();
  return names;
}
}  // namespace

ParamSet::ParamSet() : names_(empty_names()) {}

ParamSet::ParamSet(std::vector<std::string> names) {
  if (names.size() > kMaxParams)
    throw CoeffError(fmt::format("at most {} parameters supported", kMaxParams));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw CoeffError("duplicate parameter name: " + names[i]);
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> ParamSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

ParamSet ParamSet::merged(const ParamSet& other) const {
  if (other.empty() || *this == other) return *this;
  if (empty()) return other;
  std::vector<std::string> out = *names_;
  for (const auto& n : other.names())
    if (!contains(n)) out.push_back(n);
  return ParamSet(std::move(out));
}

bool ParamSet::operator==(const ParamSet& o) const {
  return names_ == o.names_ || *names_ == *o.names_;
}

// --------------------------------------------------------------- Exponents

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

int grlex_compare(const Exponents& a, const Exponents& b) {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < kMaxParams; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

namespace {

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxParams; ++i) {
    unsigned s = unsigned(a[i]) + b[i];
    if (s > 0xFFFF) throw CoeffError("exponent overflow");
    r[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

bool divides_exp(const Exponents& d, const Exponents& a) {
  for (std::size_t i = 0; i < kMaxParams; ++i)
    if (d[i] > a[i]) return false;
  return true;
}

Exponents sub_exp(const Exponents& a, const Exponents& d) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxParams; ++i) r[i] = static_cast<std::uint16_t>(a[i] - d[i]);
  return r;
}

bool term_greater(const Term& a, const Term& b) { return grlex_compare(a.exp, b.exp) > 0; }

// Sort descending and merge equal exponents.
std::vector<Term> canonical_terms(std::vector<Term> v) {
  std::sort(v.begin(), v.end(), term_greater);
  std::vector<Term> out;
  out.reserve(v.size());
  for (auto& t : v) {
    t.coef.canonicalize();
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
    } else {
      if (!out.empty() && out.back().coef == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coef == 0) out.pop_back();
  return out;
}

}  // namespace

// --------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(const Rational& c) {
  if (c != 0) {
    terms_.push_back(Term{Exponents{}, c});
    terms_.back().coef.canonicalize();
  }
}

MultiPoly MultiPoly::variable(std::size_t idx, unsigned power) {
  if (idx >= kMaxParams) throw CoeffError("variable index out of range");
  Exponents e{};
  e[idx] = static_cast<std::uint16_t>(power);
  return monomial(e, Rational(1));
}

MultiPoly MultiPoly::monomial(const Exponents& e, const Rational& c) {
  MultiPoly p;
  if (c != 0) {
    p.terms_.push_back(Term{e, c});
    p.terms_.back().coef.canonicalize();
  }
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = canonical_terms(std::move(terms));
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && dulab::total_degree(terms_[0].exp) == 0);
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && dulab::total_degree(terms_[0].exp) == 0 && terms_[0].coef == 1;
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  return terms_[0].coef;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exp[var]);
  return d;
}

unsigned MultiPoly::min_degree_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  unsigned d = 0xFFFF;
  for (const auto& t : terms_) d = std::min<unsigned>(d, t.exp[var]);
  return d;
}

bool MultiPoly::uses(std::size_t var) const {
  for (const auto& t : terms_)
    if (t.exp[var] != 0) return true;
  return false;
}

unsigned MultiPoly::total_degree() const {
  return terms_.empty() ? 0 : dulab::total_degree(terms_.front().exp);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  MultiPoly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grlex_compare(terms_[i].exp, o.terms_[j].exp);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rational s = terms_[i].coef + o.terms_[j].coef;
      if (s != 0) r.terms_.push_back(Term{terms_[i].exp, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return MultiPoly();
  if (o.terms_.size() == 1 && o.total_degree() == 0) return scaled(o.terms_[0].coef);
  if (terms_.size() == 1 && total_degree() == 0) return o.scaled(terms_[0].coef);
  std::vector<Term> v;
  v.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) v.push_back(Term{add_exp(a.exp, b.exp), a.coef * b.coef});
  MultiPoly r;
  r.terms_ = canonical_terms(std::move(v));
  return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c == 0) return MultiPoly();
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef *= c;
  return r;
}

MultiPoly MultiPoly::shifted(const Exponents& e) const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.exp = add_exp(t.exp, e);
  return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly result(Rational(1)), base = *this;
  while (n) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return result;
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (is_zero()) return MultiPoly();
  if (d.terms_.size() == 1) {
    const Term& t = d.terms_[0];
    MultiPoly q;
    q.terms_.reserve(terms_.size());
    for (const auto& a : terms_) {
      if (!divides_exp(t.exp, a.exp)) return std::nullopt;
      q.terms_.push_back(Term{sub_exp(a.exp, t.exp), a.coef / t.coef});
    }
    return q;
  }
  const Term& ld = d.terms_.front();
  std::vector<Term> quot;
  MultiPoly r = *this;
  while (!r.is_zero()) {
    const Term& lr = r.terms_.front();
    if (!divides_exp(ld.exp, lr.exp)) return std::nullopt;
    Term qt{sub_exp(lr.exp, ld.exp), lr.coef / ld.coef};
    MultiPoly sub = d.shifted(qt.exp).scaled(qt.coef);
    quot.push_back(qt);
    r = r - sub;
  }
  MultiPoly q;
  q.terms_ = canonical_terms(std::move(quot));
  return q;
}

MultiPoly MultiPoly::substitute(const std::map<std::size_t, Rational>& values) const {
  if (values.empty()) return *this;
  std::vector<Term> v;
  v.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term nt{t.exp, t.coef};
    for (const auto& [idx, val] : values) {
      if (nt.exp[idx] == 0) continue;
      Rational p(1);
      mpz_pow_ui(p.get_num_mpz_t(), val.get_num_mpz_t(), nt.exp[idx]);
      mpz_pow_ui(p.get_den_mpz_t(), val.get_den_mpz_t(), nt.exp[idx]);
      p.canonicalize();
      nt.coef *= p;
      nt.exp[idx] = 0;
    }
    if (nt.coef != 0) v.push_back(std::move(nt));
  }
  MultiPoly r;
  r.terms_ = canonical_terms(std::move(v));
  return r;
}

MultiPoly MultiPoly::reindexed(const std::vector<std::size_t>& mapping) const {
  std::vector<Term> v;
  v.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term nt{Exponents{}, t.coef};
    for (std::size_t i = 0; i < mapping.size(); ++i) nt.exp[mapping[i]] = t.exp[i];
    v.push_back(std::move(nt));
  }
  MultiPoly r;
  r.terms_ = canonical_terms(std::move(v));
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exp != o.terms_[i].exp || terms_[i].coef != o.terms_[i].coef) return false;
  return true;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(0);
  Integer g = 0, l = 1;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coef.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  }
  Rational c(g, l);
  c.canonicalize();
  return abs(c);
}

// --------------------------------------------------------------------- gcd

namespace {

// Primitive integer polynomial with positive leading coefficient.
MultiPoly unit_normal(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Rational c = p.content();
  if (p.leading().coef < 0) c = -c;
  if (c == 1) return p;
  return p.scaled(1 / c);
}

Exponents min_exponents(const MultiPoly& p) {
  Exponents m{};
  if (p.is_zero()) return m;
  m.fill(0xFFFF);
  for (const auto& t : p.terms())
    for (std::size_t i = 0; i < kMaxParams; ++i) m[i] = std::min(m[i], t.exp[i]);
  return m;
}

bool is_zero_exp(const Exponents& e) {
  for (auto x : e)
    if (x) return false;
  return true;
}

// Coefficients of p as a polynomial in `var`.
std::vector<MultiPoly> coeffs_in(const MultiPoly& p, std::size_t var) {
  std::vector<std::vector<Term>> buckets(p.degree_in(var) + 1);
  for (const auto& t : p.terms()) {
    Term nt = t;
    nt.exp[var] = 0;
    buckets[t.exp[var]].push_back(std::move(nt));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(std::move(b)));
  return out;
}

MultiPoly from_coeffs(const std::vector<MultiPoly>& cs, std::size_t var) {
  std::vector<Term> v;
  for (std::size_t k = 0; k < cs.size(); ++k)
    for (const auto& t : cs[k].terms()) {
      Term nt = t;
      nt.exp[var] = static_cast<std::uint16_t>(k);
      v.push_back(std::move(nt));
    }
  return MultiPoly::from_terms(std::move(v));
}

void trim(std::vector<MultiPoly>& cs) {
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
}

MultiPoly gcd_impl(const MultiPoly& a, const MultiPoly& b);

MultiPoly content_in(const std::vector<MultiPoly>& cs) {
  MultiPoly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? unit_normal(c) : gcd_impl(g, c);
    if (g.is_constant()) return MultiPoly(Rational(1));
  }
  return g;
}

MultiPoly primitive_in(const MultiPoly& p, std::size_t var) {
  auto cs = coeffs_in(p, var);
  MultiPoly c = content_in(cs);
  if (c.is_constant()) return unit_normal(p);
  return unit_normal(*p.divide_exact(c));
}

// lc(g)^(deg f - deg g + 1) * f mod g, as polynomials in `var`.
std::vector<MultiPoly> pseudo_remainder(std::vector<MultiPoly> r, const std::vector<MultiPoly>& g) {
  const std::size_t n = g.size() - 1;
  const MultiPoly& lc = g.back();
  int e = int(r.size()) - int(n);
  while (!r.empty() && r.size() - 1 >= n) {
    MultiPoly c = r.back();
    std::size_t s = r.size() - 1 - n;
    for (auto& x : r) x = x * lc;
    for (std::size_t k = 0; k <= n; ++k) r[s + k] = r[s + k] - c * g[k];
    r.back() = MultiPoly();
    trim(r);
    --e;
  }
  if (e > 0) {
    MultiPoly f = lc.pow(unsigned(e));
    for (auto& x : r) x = x * f;
  }
  return r;
}

MultiPoly gcd_in_var(const MultiPoly& a, const MultiPoly& b, std::size_t var) {
  MultiPoly ca = content_in(coeffs_in(a, var));
  MultiPoly cb = content_in(coeffs_in(b, var));
  MultiPoly c = gcd_impl(ca, cb);
  MultiPoly pa = ca.is_constant() ? a : *a.divide_exact(ca);
  MultiPoly pb = cb.is_constant() ? b : *b.divide_exact(cb);
  pa = unit_normal(pa);
  pb = unit_normal(pb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  MultiPoly g;
  while (true) {
    auto r = pseudo_remainder(coeffs_in(pa, var), coeffs_in(pb, var));
    if (r.empty()) {
      g = pb;
      break;
    }
    if (r.size() == 1) {
      g = MultiPoly(Rational(1));
      break;
    }
    pa = pb;
    pb = primitive_in(from_coeffs(r, var), var);
  }
  return unit_normal(c * g);
}

MultiPoly gcd_impl(const MultiPoly& a0, const MultiPoly& b0) {
  if (a0.is_zero()) return unit_normal(b0);
  if (b0.is_zero()) return unit_normal(a0);
  if (a0.is_constant() || b0.is_constant()) return MultiPoly(Rational(1));
  Exponents ma = min_exponents(a0), mb = min_exponents(b0), mg{};
  for (std::size_t i = 0; i < kMaxParams; ++i) mg[i] = std::min(ma[i], mb[i]);
  MultiPoly a = is_zero_exp(ma) ? a0 : *a0.divide_exact(MultiPoly::monomial(ma, Rational(1)));
  MultiPoly b = is_zero_exp(mb) ? b0 : *b0.divide_exact(MultiPoly::monomial(mb, Rational(1)));
  MultiPoly mono = MultiPoly::monomial(mg, Rational(1));
  if (a.is_constant() || b.is_constant()) return mono;
  if (a == b) return mono * unit_normal(a);
  if (a.size() <= b.size()) {
    if (b.divide_exact(a)) return mono * unit_normal(a);
  } else if (a.divide_exact(b)) {
    return mono * unit_normal(b);
  }
  std::optional<std::size_t> var;
  unsigned best = 0;
  for (std::size_t i = 0; i < kMaxParams; ++i) {
    if (!a.uses(i) || !b.uses(i)) continue;
    unsigned d = std::max(a.degree_in(i), b.degree_in(i));
    if (!var || d < best) {
      var = i;
      best = d;
    }
  }
  if (!var) return mono;
  return mono * gcd_in_var(a, b, *var);
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b) { return gcd_impl(a, b); }

// --------------------------------------------------------------- rendering

namespace {

std::string render_monomial(const Exponents& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < kMaxParams; ++i) {
    if (!e[i]) continue;
    if (!out.empty()) out += '*';
    out += i < names.size() ? names[i] : fmt::format("p{}", i);
    if (e[i] > 1) out += fmt::format("^{}", e[i]);
  }
  return out;
}

}  // namespace

std::string render_poly(const MultiPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string mono = render_monomial(t.exp, names);
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

std::string render_assignment(const std::map<std::string, Rational>& values) {
  std::string out;
  for (const auto& [k, v] : values) {
    if (!out.empty()) out += ", ";
    out += k + "=" + v.get_str();
  }
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim_ws = [](std::string x) {
    auto b = x.find_first_not_of(" \t");
    auto e = x.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
  };
  s = trim_ws(s);
  auto valid_int = [](const std::string& x) {
    std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
    if (i >= x.size()) return false;
    for (; i < x.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(x[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string n = trim_ws(s.substr(0, slash));
  std::string d = slash == std::string::npos ? "1" : trim_ws(s.substr(slash + 1));
  if (!valid_int(n) || !valid_int(d)) throw CoeffError("not a rational number: " + s);
  if (n[0] == '+') n = n.substr(1);
  if (d[0] == '+') d = d.substr(1);
  Integer num(n), den(d);
  if (den == 0) throw DivisionByZero("zero denominator in " + s);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// ----------------------------------------------------------------- RatFunc

RatFunc::RatFunc() : num_(), den_(Rational(1)) {}

RatFunc::RatFunc(long v) : num_(Rational(v)), den_(Rational(1)) {}

RatFunc::RatFunc(const Rational& v) : num_(v), den_(Rational(1)) {}

RatFunc::RatFunc(ParamSet ps, const Rational& v) : ps_(std::move(ps)), num_(v), den_(Rational(1)) {}

RatFunc::RatFunc(ParamSet ps, MultiPoly num, MultiPoly den)
    : ps_(std::move(ps)), num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

RatFunc RatFunc::param(const ParamSet& ps, std::string_view name) {
  auto idx = ps.index_of(name);
  if (!idx) throw CoeffError("unknown parameter: " + std::string(name));
  return RatFunc(ps, MultiPoly::variable(*idx));
}

void RatFunc::normalize() {
  if (num_.is_zero()) {
    den_ = MultiPoly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  Rational c = den_.content();
  if (den_.leading().coef < 0) c = -c;
  if (c != 1) {
    num_ = num_.scaled(1 / c);
    den_ = den_.scaled(1 / c);
  }
}

bool RatFunc::is_one() const { return num_.is_one() && den_.is_one(); }

bool RatFunc::is_constant() const { return num_.is_constant() && den_.is_constant(); }

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw CoeffError("not a constant: " + str());
  return num_.constant_value();
}

ParamSet RatFunc::common(const RatFunc& a, const RatFunc& b) {
  if (a.ps_ == b.ps_) return a.ps_;
  if (a.is_constant()) return b.ps_;
  if (b.is_constant()) return a.ps_;
  throw ParamMismatch("coefficients over different parameter sets");
}

RatFunc RatFunc::coerced(const ParamSet& ps) const {
  RatFunc r = *this;
  r.ps_ = ps;
  return r;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  ParamSet ps = common(*this, o);
  if (is_zero()) return o.coerced(ps);
  if (o.is_zero()) return coerced(ps);
  RatFunc r;
  r.ps_ = ps;
  if (den_.is_one() && o.den_.is_one()) {
    r.num_ = num_ + o.num_;
    return r;
  }
  if (den_ == o.den_) {
    r.num_ = num_ + o.num_;
    r.den_ = den_;
    r.normalize();
    return r;
  }
  MultiPoly g = poly_gcd(den_, o.den_);
  if (g.is_constant()) {
    r.num_ = num_ * o.den_ + o.num_ * den_;
    r.den_ = den_ * o.den_;
    if (r.num_.is_zero()) r.den_ = MultiPoly(Rational(1));
    return r;
  }
  MultiPoly da = *den_.divide_exact(g), db = *o.den_.divide_exact(g);
  r.num_ = num_ * db + o.num_ * da;
  r.den_ = den_ * db;
  if (r.num_.is_zero()) {
    r.den_ = MultiPoly(Rational(1));
    return r;
  }
  MultiPoly h = poly_gcd(r.num_, g);
  if (!h.is_constant()) {
    r.num_ = *r.num_.divide_exact(h);
    r.den_ = *r.den_.divide_exact(h);
  }
  return r;
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  ParamSet ps = common(*this, o);
  RatFunc r;
  r.ps_ = ps;
  if (is_zero() || o.is_zero()) return r;
  if (o.is_constant()) {
    r.num_ = num_.scaled(o.constant_value());
    r.den_ = den_;
    return r;
  }
  if (is_constant()) {
    r.num_ = o.num_.scaled(constant_value());
    r.den_ = o.den_;
    return r;
  }
  MultiPoly na = num_, nb = o.num_, da = den_, db = o.den_;
  if (!db.is_one()) {
    MultiPoly g = poly_gcd(na, db);
    if (!g.is_constant()) {
      na = *na.divide_exact(g);
      db = *db.divide_exact(g);
    }
  }
  if (!da.is_one()) {
    MultiPoly g = poly_gcd(nb, da);
    if (!g.is_constant()) {
      nb = *nb.divide_exact(g);
      da = *da.divide_exact(g);
    }
  }
  r.num_ = na * nb;
  r.den_ = da * db;
  Rational c = r.den_.content();
  if (r.den_.leading().coef < 0) c = -c;
  if (c != 1) {
    r.num_ = r.num_.scaled(1 / c);
    r.den_ = r.den_.scaled(1 / c);
  }
  return r;
}

RatFunc RatFunc::inv() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  RatFunc r;
  r.ps_ = ps_;
  r.num_ = den_;
  r.den_ = num_;
  Rational c = r.den_.content();
  if (r.den_.leading().coef < 0) c = -c;
  if (c != 1) {
    r.num_ = r.num_.scaled(1 / c);
    r.den_ = r.den_.scaled(1 / c);
  }
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const { return *this * o.inv(); }

RatFunc RatFunc::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  RatFunc r;
  r.ps_ = ps_;
  r.num_ = num_.pow(unsigned(n));
  r.den_ = den_.pow(unsigned(n));
  return r;
}

RatFunc RatFunc::substitute(const std::map<std::string, Rational>& values) const {
  std::map<std::size_t, Rational> idx;
  for (const auto& [k, v] : values)
    if (auto i = ps_.index_of(k)) idx[*i] = v;
  if (idx.empty()) return *this;
  MultiPoly d = den_.substitute(idx);
  if (d.is_zero())
    throw PoleError(fmt::format("pole of {} at {}", str(), render_assignment(values)));
  return RatFunc(ps_, num_.substitute(idx), d);
}

RatFunc RatFunc::lifted(const ParamSet& target) const {
  if (ps_ == target || is_constant()) return coerced(target);
  std::vector<std::size_t> mapping;
  for (const auto& n : ps_.names()) {
    auto i = target.index_of(n);
    if (!i) throw ParamMismatch("parameter " + n + " missing from target set");
    mapping.push_back(*i);
  }
  return RatFunc(target, num_.reindexed(mapping), den_.reindexed(mapping));
}

bool RatFunc::operator==(const RatFunc& o) const {
  if (num_ != o.num_ || den_ != o.den_) return false;
  return is_constant() || ps_ == o.ps_;
}

std::string RatFunc::str() const {
  const auto& names = ps_.names();
  if (den_.is_one()) {
    Integer l = 1;
    for (const auto& t : num_.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
    if (l == 1) return render_poly(num_, names);
    if (num_.is_constant()) return num_.constant_value().get_str();
    return "(" + render_poly(num_.scaled(Rational(l)), names) + ")/" + l.get_str();
  }
  Integer l = 1;
  for (const auto& t : num_.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
  std::string n = render_poly(num_.scaled(Rational(l)), names);
  std::string d = render_poly(den_.scaled(Rational(l)), names);
  if (num_.size() > 1) n = "(" + n + ")";
  return n + "/(" + d + ")";
}

std::string RatFunc::str_atom() const {
  if (den_.is_one() && num_.size() <= 1) {
    if (num_.is_zero()) return "0";
    const Rational& c = num_.leading().coef;
    if (c > 0 && c.get_den() == 1) return str();
  }
  return "(" + str() + ")";
}

}  // namespace dulab
