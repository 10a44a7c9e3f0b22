#include "dulab/matrep.hpp"

#include "dulab/parse.hpp"

#include <fmt/format.h>

#include <functional>
#include <random>
#include <set>

namespace dulab {

Matrix::Matrix(std::size_t n, ParamSet ps) : n_(n), ps_(std::move(ps)), a_(n * n, RatFunc(ps_, Rational(0))) {}

Matrix Matrix::identity(std::size_t n, const ParamSet& ps) {
  Matrix m(n, ps);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, RatFunc(1));
  return m;
}

Matrix Matrix::parse(const std::vector<std::vector<std::string>>& rows, const ParamSet& ps) {
  Matrix m(rows.size(), ps);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw MatrixError("matrix literal is not square");
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, parse_scalar(rows[i][j], ps));
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

void Matrix::check_shape(const Matrix& o) const {
  if (n_ != o.n_) throw MatrixError(fmt::format("size mismatch: {} vs {}", n_, o.n_));
}

Matrix Matrix::operator+(const Matrix& o) const {
  check_shape(o);
  Matrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  check_shape(o);
  Matrix r = *this;
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] -= o.a_[k];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
  check_shape(o);
  Matrix r(n_, ps_.empty() ? o.ps_ : ps_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const RatFunc& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!o.at(k, j).is_zero()) r.a_[i * n_ + j] += x * o.at(k, j);
    }
  return r;
}

Matrix Matrix::scaled(const RatFunc& c) const {
  Matrix r = *this;
  for (auto& x : r.a_) x *= c;
  return r;
}

Matrix Matrix::substitute(const std::map<std::string, Rational>& values) const {
  Matrix r = *this;
  for (auto& x : r.a_) x = x.substitute(values);
  return r;
}

bool Matrix::operator==(const Matrix& o) const { return n_ == o.n_ && a_ == o.a_; }

std::string Matrix::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    s += i ? "; " : "";
    for (std::size_t j = 0; j < n_; ++j) s += (j ? ", " : "") + at(i, j).str();
  }
  return s + "]";
}

Matrix mat_add(const Matrix& a, const Matrix& b) { return a + b; }
Matrix mat_mul(const Matrix& a, const Matrix& b) { return a * b; }
Matrix mat_bracket(const Matrix& a, const Matrix& b) { return a * b - b * a; }

RatFunc mat_trace(const Matrix& a) {
  RatFunc t(a.params(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) t += a.at(i, i);
  return t;
}

Matrix eval_ncpoly(const NcPoly& p, const std::vector<Matrix>& images, bool reverse) {
  if (images.size() < p.alphabet().size()) throw MatrixError("missing generator image");
  if (images.empty()) throw MatrixError("no images");
  std::size_t n = images[0].size();
  ParamSet ps = images[0].params();
  Matrix out(n, ps);
  std::map<Word, Matrix> memo;
  memo.emplace(Word{}, Matrix::identity(n, ps));
  // Products of prefixes, shared across words.
  std::function<const Matrix&(const Word&)> product = [&](const Word& w) -> const Matrix& {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    Word head = w.sub(0, w.size() - 1);
    Matrix m = reverse ? images[w[w.size() - 1]] * product(head) : product(head) * images[w[w.size() - 1]];
    return memo.emplace(w, std::move(m)).first->second;
  };
  for (const auto& [w, c] : p.terms()) out = out + product(w).scaled(c);
  return out;
}

Matrix eval_ncpoly(const NcPoly& p, const std::map<std::string, Matrix>& images, bool reverse) {
  std::vector<Matrix> v;
  for (const auto& name : p.alphabet().names()) {
    auto it = images.find(name);
    if (it == images.end()) throw MatrixError("missing image for generator " + name);
    v.push_back(it->second);
  }
  return eval_ncpoly(p, v, reverse);
}

// ------------------------------------------------------------------ rank

SparseVec flatten(const Matrix& m, const std::vector<std::string>& loop_vars) {
  const ParamSet& ps = m.params();
  std::vector<std::size_t> loops;
  for (const auto& v : loop_vars)
    if (auto i = ps.index_of(v)) loops.push_back(*i);
  SparseVec out;
  for (std::size_t k = 0; k < m.entries().size(); ++k) {
    const RatFunc& x = m.entries()[k];
    if (x.is_zero()) continue;
    std::string pos = fmt::format("{:03}", k);
    if (loops.empty()) {
      out.emplace(pos, x);
      continue;
    }
    // Denominator must be a monomial in the loop variables times a
    // loop-free polynomial.
    Exponents shift{};
    for (auto v : loops) {
      unsigned lo = x.den().min_degree_in(v);
      if (x.den().degree_in(v) != lo) throw MatrixError("entry is not a Laurent polynomial: " + x.str());
      shift[v] = static_cast<std::uint16_t>(lo);
    }
    std::vector<Term> dterms;
    for (auto t : x.den().terms()) {
      for (auto v : loops) t.exp[v] = 0;
      dterms.push_back(t);
    }
    MultiPoly d = MultiPoly::from_terms(dterms);
    std::map<std::vector<long>, std::vector<Term>> by_power;
    for (auto t : x.num().terms()) {
      std::vector<long> pw;
      for (auto v : loops) {
        pw.push_back(long(t.exp[v]) - long(shift[v]));
        t.exp[v] = 0;
      }
      by_power[pw].push_back(t);
    }
    for (auto& [pw, terms] : by_power) {
      std::string key = pos;
      for (long e : pw) key += fmt::format("@{}", e);
      out.emplace(key, RatFunc(ps, MultiPoly::from_terms(terms), d));
    }
  }
  return out;
}

SparseVec flatten(const NcPoly& p) {
  SparseVec out;
  for (const auto& [w, c] : p.terms()) out.emplace(w.raw(), c);
  return out;
}

namespace {

std::vector<std::string> params_used(const std::vector<SparseVec>& rows) {
  std::set<std::string> names;
  for (const auto& r : rows)
    for (const auto& [k, v] : r)
      if (!v.is_constant())
        for (const auto& n : v.params().names()) names.insert(n);
  return {names.begin(), names.end()};
}

std::size_t rank_rational(const std::vector<std::map<std::string, Rational>>& rows) {
  std::map<std::string, std::map<std::string, Rational>> pivots;
  std::size_t rank = 0;
  for (auto r : rows) {
    for (auto it = r.begin(); it != r.end();) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      Rational f = it->second;
      std::string key = it->first;
      for (const auto& [k, v] : p->second) {
        Rational nv = r[k] - f * v;
        if (nv == 0)
          r.erase(k);
        else
          r[k] = nv;
      }
      it = r.upper_bound(key);
    }
    if (r.empty()) continue;
    Rational lead = r.begin()->second;
    for (auto& [k, v] : r) v /= lead;
    std::string key = r.begin()->first;
    pivots.emplace(key, std::move(r));
    ++rank;
  }
  return rank;
}

// Gaussian elimination over Q(params); pivot column = smallest key.
struct Eliminator {
  struct Pivot {
    SparseVec row;
    std::vector<RatFunc> comb;
  };
  std::map<std::string, Pivot> pivots;
  std::size_t nbasis = 0;

  // Reduce r (and its combination) against the pivots.
  void reduce(SparseVec& r, std::vector<RatFunc>* comb) const {
    for (auto it = r.begin(); it != r.end();) {
      auto p = pivots.find(it->first);
      if (p == pivots.end()) {
        ++it;
        continue;
      }
      RatFunc f = it->second;
      std::string key = it->first;
      for (const auto& [k, v] : p->second.row) {
        RatFunc nv = (r.count(k) ? r[k] : RatFunc(0)) - f * v;
        if (nv.is_zero())
          r.erase(k);
        else
          r[k] = nv;
      }
      if (comb)
        for (std::size_t i = 0; i < comb->size(); ++i)
          if (!p->second.comb[i].is_zero()) (*comb)[i] -= f * p->second.comb[i];
      it = r.upper_bound(key);
    }
  }

  bool insert(SparseVec r, std::vector<RatFunc> comb) {
    reduce(r, &comb);
    if (r.empty()) return false;
    RatFunc inv = r.begin()->second.inv();
    for (auto& [k, v] : r) v *= inv;
    for (auto& c : comb) c *= inv;
    std::string key = r.begin()->first;
    pivots.emplace(key, Pivot{std::move(r), std::move(comb)});
    return true;
  }
};

}  // namespace

std::size_t rank_of(std::vector<SparseVec> rows) {
  std::erase_if(rows, [](const SparseVec& r) { return r.empty(); });
  if (rows.empty()) return 0;
  // A specialization can only lower the rank, so full rank there is a
  // certificate.
  auto names = params_used(rows);
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> num(-97, 97), den(1, 13);
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::map<std::string, Rational> pt;
    for (const auto& n : names) {
      Rational v(num(rng), den(rng));
      v.canonicalize();
      if (v == 0) v = Rational(attempt + 2);
      pt[n] = v;
    }
    try {
      std::vector<std::map<std::string, Rational>> spec;
      for (const auto& r : rows) {
        std::map<std::string, Rational> s;
        for (const auto& [k, v] : r) {
          RatFunc x = v.substitute(pt);
          if (!x.is_zero()) s.emplace(k, x.constant_value());
        }
        spec.push_back(std::move(s));
      }
      std::size_t r = rank_rational(spec);
      if (r == rows.size() || names.empty()) return r;
      break;
    } catch (const PoleError&) {
      continue;
    }
  }
  Eliminator e;
  std::size_t rank = 0;
  for (auto& r : rows)
    if (e.insert(std::move(r), {})) ++rank;
  return rank;
}

std::optional<std::vector<RatFunc>> kernel_vector(const std::vector<SparseVec>& rows) {
  if (rank_of(rows) == rows.size()) return std::nullopt;
  Eliminator e;
  std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RatFunc> comb(n, RatFunc(0));
    comb[i] = RatFunc(1);
    SparseVec r = rows[i];
    e.reduce(r, &comb);
    if (r.empty()) return comb;
    e.insert(std::move(r), std::move(comb));
  }
  return std::nullopt;
}

std::size_t rank_span(const std::vector<Matrix>& mats, const std::vector<std::string>& loop_vars) {
  std::vector<SparseVec> rows;
  for (const auto& m : mats) rows.push_back(flatten(m, loop_vars));
  return rank_of(std::move(rows));
}

std::optional<std::vector<RatFunc>> solve_in_span(const std::vector<SparseVec>& basis, const SparseVec& v) {
  Eliminator e;
  std::size_t n = basis.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<RatFunc> comb(n, RatFunc(0));
    comb[i] = RatFunc(1);
    if (!e.insert(basis[i], comb)) throw MatrixError("basis is linearly dependent");
  }
  SparseVec r = v;
  std::vector<RatFunc> comb(n, RatFunc(0));
  e.reduce(r, &comb);
  if (!r.empty()) return std::nullopt;
  // r = v + comb . basis = 0
  for (auto& c : comb) c = -c;
  return comb;
}

// ------------------------------------------------------- representations

namespace {

void require(const ParamSet& ps, std::initializer_list<const char*> names, const char* what) {
  for (const char* n : names)
    if (!ps.contains(n)) throw MatrixError(fmt::format("{} needs parameter '{}'", what, n));
}

}  // namespace

std::vector<Matrix> downup_rep_3x3(const ParamSet& ps) {
  require(ps, {"alpha", "gamma", "t"}, "the 3x3 down-up representation");
  const std::string e = "-gamma/(alpha*t)";
  return {Matrix::parse({{"0", "t", "0"}, {"0", "0", "0"}, {"0", e, "0"}}, ps),
          Matrix::parse({{"0", "0", e}, {"0", "0", "t"}, {"0", "0", "0"}}, ps),
          Matrix::parse({{"0", "0", "0"}, {e, "0", "0"}, {"t", "0", "0"}}, ps)};
}

std::vector<Matrix> sl2_abc(const ParamSet& ps) {
  return {Matrix::parse({{"1", "-1"}, {"1", "-1"}}, ps), Matrix::parse({{"0", "0"}, {"1", "0"}}, ps),
          Matrix::parse({{"0", "-1"}, {"0", "0"}}, ps)};
}

std::vector<Matrix> sl3_abc(const ParamSet& ps) {
  require(ps, {"xi"}, "the sl3 elements");
  return {Matrix::parse({{"0", "1", "0"}, {"0", "0", "0"}, {"0", "xi", "0"}}, ps),
          Matrix::parse({{"0", "0", "xi"}, {"0", "0", "1"}, {"0", "0", "0"}}, ps),
          Matrix::parse({{"0", "0", "0"}, {"xi", "0", "0"}, {"1", "0", "0"}}, ps)};
}

std::vector<Matrix> loop_abc(const ParamSet& ps) {
  require(ps, {"xi", "t"}, "the loop algebra elements");
  return {Matrix::parse({{"0", "t", "0"}, {"0", "0", "0"}, {"0", "xi/t", "0"}}, ps),
          Matrix::parse({{"0", "0", "xi/t"}, {"0", "0", "t"}, {"0", "0", "0"}}, ps),
          Matrix::parse({{"0", "0", "0"}, {"xi/t", "0", "0"}, {"t", "0", "0"}}, ps)};
}

std::vector<Matrix> sl3_basis(const ParamSet& ps) {
  auto abc = sl3_abc(ps);
  const Matrix &a = abc[0], &b = abc[1], &c = abc[2];
  Matrix ab = mat_bracket(a, b), bc = mat_bracket(b, c), ca = mat_bracket(c, a);
  return {a, b, c, ab, bc, ca, mat_bracket(a, bc), mat_bracket(b, ca)};
}

std::vector<std::string> sl3_basis_names() { return {"A", "B", "C", "AB", "BC", "CA", "A_BC", "B_CA"}; }

Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j, const ParamSet& ps) {
  Matrix m(n, ps);
  m.set(i, j, RatFunc(1));
  return m;
}

Presentation envelope(const std::string& name, const std::vector<std::string>& names, const std::vector<Matrix>& basis) {
  if (names.size() != basis.size() || basis.empty()) throw MatrixError("envelope needs one name per basis element");
  Presentation p;
  p.name = name;
  p.alphabet = GenAlphabet(names);
  p.params = basis[0].params();
  p.order = MonomialOrder(names.size());
  std::vector<SparseVec> flat;
  for (const auto& m : basis) flat.push_back(flatten(m));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      auto coords = solve_in_span(flat, flatten(mat_bracket(basis[i], basis[j])));
      if (!coords) throw MatrixError(fmt::format("[{},{}] leaves the span", names[i], names[j]));
      NcPoly rel = bracket(p.gen(names[i]), p.gen(names[j]));
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (!(*coords)[k].is_zero()) rel -= p.gen(names[k]).scaled((*coords)[k]);
      p.relations.push_back(std::move(rel));
    }
  return p;
}

Presentation sl2_envelope(const ParamSet& ps) { return envelope("sl2_env", {"A", "B", "C"}, sl2_abc(ps)); }

Presentation sl3_envelope(const ParamSet& ps) { return envelope("sl3_env", sl3_basis_names(), sl3_basis(ps)); }

CheckReport verify_sl3_unit_formulas(const ParamSet& ps) {
  CheckReport rep;
  rep.tag = "sl3 unit-matrix formulas";
  auto abc = sl3_abc(ps);
  const Matrix &A = abc[0], &B = abc[1], &C = abc[2];
  Matrix AB = mat_bracket(A, B), BC = mat_bracket(B, C), CA = mat_bracket(C, A);
  Matrix A_BC = mat_bracket(A, BC), B_CA = mat_bracket(B, CA), C_AB = mat_bracket(C, AB);

  auto expect = [&](const std::string& label, const Matrix& got, const Matrix& want) {
    Matrix d = got - want;
    rep.add(label, d.is_zero() ? Outcome::verified : Outcome::refuted, d.is_zero() ? "" : "difference " + d.str());
  };
  auto lit = [&](std::vector<std::vector<std::string>> rows) { return Matrix::parse(rows, ps); };

  expect("[A,B] matrix", AB, lit({{"0", "-xi^2", "1"}, {"0", "-xi", "0"}, {"0", "0", "xi"}}));
  expect("[B,C] matrix", BC, lit({{"xi", "0", "0"}, {"1", "0", "-xi^2"}, {"0", "0", "-xi"}}));
  expect("[C,A] matrix", CA, lit({{"-xi", "0", "0"}, {"0", "xi", "0"}, {"-xi^2", "1", "0"}}));
  expect("[A,[B,C]] matrix", A_BC, lit({{"1", "-xi", "-xi^2"}, {"0", "xi^3 - 1", "0"}, {"xi", "xi^2", "-xi^3"}}));
  expect("[B,[C,A]] matrix", B_CA, lit({{"-xi^3", "xi", "xi^2"}, {"-xi^2", "1", "-xi"}, {"0", "0", "xi^3 - 1"}}));
  expect("[C,[A,B]] matrix", C_AB, lit({{"xi^3 - 1", "0", "0"}, {"xi^2", "-xi^3", "xi"}, {"-xi", "-xi^2", "1"}}));

  Matrix zero(3, ps);
  expect("Jacobi sum", A_BC + B_CA + C_AB, zero);

  RatFunc xi = RatFunc::param(ps, "xi");
  RatFunc one(ps, Rational(1));
  RatFunc s = one + xi.pow(3);
  RatFunc d = s.pow(2).inv();
  auto E = [&](int i, int j) { return unit_matrix(3, i - 1, j - 1, ps); };

  expect("E12", (A.scaled(s) - AB.scaled(xi.pow(4)) - CA.scaled(xi) - A_BC.scaled(xi.pow(2))).scaled(d), E(1, 2));
  expect("E23", (B.scaled(s) - BC.scaled(xi.pow(4)) - AB.scaled(xi) - B_CA.scaled(xi.pow(2))).scaled(d), E(2, 3));
  expect("E31", (C.scaled(s) - CA.scaled(xi.pow(4)) - BC.scaled(xi) - C_AB.scaled(xi.pow(2))).scaled(d), E(3, 1));
  expect("E21", (C.scaled(xi.pow(2) * s) + BC + CA.scaled(xi.pow(3)) + C_AB.scaled(xi)).scaled(d), E(2, 1));
  expect("E32", (A.scaled(xi.pow(2) * s) + CA + AB.scaled(xi.pow(3)) + A_BC.scaled(xi)).scaled(d), E(3, 2));
  expect("E13", (B.scaled(xi.pow(2) * s) + AB + BC.scaled(xi.pow(3)) + B_CA.scaled(xi)).scaled(d), E(1, 3));
  RatFunc two(ps, Rational(2));
  Matrix h1 = (A.scaled(xi) - C.scaled(xi)).scaled(s.inv()) +
              (AB.scaled(xi.pow(2)) + BC.scaled(xi.pow(2)) - CA.scaled(two * xi.pow(2)) - B_CA +
               C_AB.scaled(xi.pow(3) - one))
                  .scaled(d);
  Matrix h2 = (B.scaled(xi) - A.scaled(xi)).scaled(s.inv()) +
              (BC.scaled(xi.pow(2)) + CA.scaled(xi.pow(2)) - AB.scaled(two * xi.pow(2)) - C_AB +
               A_BC.scaled(xi.pow(3) - one))
                  .scaled(d);
  expect("H1", h1, E(1, 1) - E(2, 2));
  expect("H2", h2, E(2, 2) - E(3, 3));
  return rep;
}

}  // namespace dulab
