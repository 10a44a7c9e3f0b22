// Random samples and independent reference routines shared by the tests
// and the acceptance runner.
#pragma once

#include "dulab/claims.hpp"
#include "dulab/parse.hpp"

#include <random>
#include <set>

namespace dulab::testing {

using Rng = std::mt19937_64;

inline Rational small_rational(Rng& rng, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span), den(1, span);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Rational nonzero_rational(Rng& rng, int span = 5) {
  Rational r;
  do r = small_rational(rng, span);
  while (r == 0);
  return r;
}

// Polynomial with up to `terms` terms of degree <= `deg` in the params.
inline MultiPoly random_poly(Rng& rng, std::size_t nvars, unsigned deg = 2, int terms = 3) {
  std::uniform_int_distribution<unsigned> e(0, deg);
  std::uniform_int_distribution<int> count(1, terms);
  MultiPoly p;
  for (int k = count(rng); k > 0; --k) {
    Exponents x{};
    for (std::size_t v = 0; v < nvars; ++v) x[v] = std::uint16_t(e(rng));
    p = p + MultiPoly::monomial(x, small_rational(rng));
  }
  return p;
}

inline RatFunc random_ratfunc(Rng& rng, const ParamSet& ps, bool allow_zero = true) {
  for (;;) {
    MultiPoly n = random_poly(rng, ps.size());
    MultiPoly d = random_poly(rng, ps.size(), 1, 2);
    if (d.is_zero() || (!allow_zero && n.is_zero())) continue;
    return RatFunc(ps, n, d);
  }
}

inline Word random_word(Rng& rng, std::size_t ngens, unsigned max_len) {
  std::uniform_int_distribution<unsigned> len(0, max_len);
  std::uniform_int_distribution<std::size_t> g(0, ngens - 1);
  Word w;
  for (unsigned k = len(rng); k > 0; --k) w.push_back(Gen(g(rng)));
  return w;
}

inline NcPoly random_ncpoly(Rng& rng, const GenAlphabet& a, const ParamSet& ps, unsigned max_len = 4, int terms = 4,
                            bool simple_coeffs = false) {
  std::uniform_int_distribution<int> count(1, terms);
  NcPoly p(a, ps);
  for (int k = count(rng); k > 0; --k) {
    RatFunc c = simple_coeffs ? RatFunc(ps, small_rational(rng)) : random_ratfunc(rng, ps);
    p.add_term(random_word(rng, a.size(), max_len), c);
  }
  return p;
}

// Reduction that picks a random reducible term and a random match each step.
inline NcPoly random_reduce(const RewriteSystem& sys, NcPoly p, Rng& rng) {
  const auto& a = sys.alphabet();
  const auto& ps = sys.params();
  for (;;) {
    std::vector<std::tuple<Word, std::size_t, std::size_t>> options;
    for (const auto& [w, c] : p.terms())
      for (std::size_t r = 0; r < sys.rules().size(); ++r)
        for (auto pos = w.find(sys.rules()[r].lhs); pos; pos = w.find(sys.rules()[r].lhs, *pos + 1))
          options.emplace_back(w, r, *pos);
    if (options.empty()) return p;
    std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
    auto [w, r, pos] = options[pick(rng)];
    const Rule& rule = sys.rules()[r];
    RatFunc c = p.coeff(w);
    NcPoly left = NcPoly::word(a, ps, w.sub(0, pos));
    NcPoly right = NcPoly::word(a, ps, w.sub(pos + rule.lhs.size()));
    p = p - NcPoly::word(a, ps, w, c) + (left * rule.rhs * right).scaled(c);
  }
}

// Words over `letters` of length n avoiding every pattern in `forbidden`.
inline std::vector<std::size_t> count_avoiding(const std::string& letters, const std::set<std::string>& forbidden,
                                               unsigned max_deg) {
  std::vector<std::size_t> counts;
  std::vector<std::string> layer = {""};
  for (unsigned n = 0; n <= max_deg; ++n) {
    counts.push_back(layer.size());
    std::vector<std::string> next;
    for (const auto& w : layer)
      for (char c : letters) {
        std::string x = w + c;
        bool bad = false;
        for (const auto& f : forbidden) bad = bad || x.ends_with(f);
        if (!bad) next.push_back(x);
      }
    layer = std::move(next);
  }
  return counts;
}

// #{(i,j,k) : i + 2j + k = n}.
inline std::vector<std::size_t> triple_counts(unsigned max_deg) {
  std::vector<std::size_t> v;
  for (unsigned n = 0; n <= max_deg; ++n) {
    std::size_t c = 0;
    for (unsigned j = 0; 2 * j <= n; ++j) c += n - 2 * j + 1;
    v.push_back(c);
  }
  return v;
}

// Plain fraction Gaussian elimination over Q.
inline std::size_t rational_rank(std::vector<std::vector<Rational>> m) {
  std::size_t rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<Rational> numeric_entries(const Matrix& m) {
  std::vector<Rational> v;
  for (const auto& e : m.entries()) v.push_back(e.constant_value());
  return v;
}

// Confluent systems of the catalog, parameters symbolic.
struct NamedSystem {
  std::string name;
  RewriteSystem sys;
};

inline std::vector<NamedSystem> confluent_systems() {
  std::vector<NamedSystem> out;
  auto add = [&](std::string name, const Presentation& p, unsigned complete_to = 0) {
    RewriteSystem sys = p.orient();
    check_confluence(sys);
    if (!sys.is_confluent() && complete_to) sys = complete(sys, complete_to);
    out.push_back({std::move(name), std::move(sys)});
  };
  Bindings zero(ParamSet{});
  zero.set("alpha", RatFunc(0)).set("beta", RatFunc(0)).set("gamma", RatFunc(0));
  add("z3downup(0,0,0)", make("z3downup", zero));
  add("weyl", make("weyl"));
  add("z3weyl", make("z3weyl"));
  add("reduced", make("reduced"));
  add("z3qweyl", make("z3qweyl"));
  add("uq_sl2_equitable", make("uq_sl2_equitable"), 4);
  add("s_gamma", make("s_gamma"));
  add("downup", make("downup"));
  return out;
}

inline std::string words_text(const std::vector<Word>& ws, const GenAlphabet& a) {
  std::string s;
  for (const auto& w : ws) s += (s.empty() ? "" : " ") + (w.empty() ? std::string("1") : w.str(a));
  return s;
}

}  // namespace dulab::testing
