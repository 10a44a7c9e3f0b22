#include "support.hpp"

#include <doctest.h>

using namespace dulab;
using namespace dulab::testing;

namespace {

using Plain = std::array<std::array<Rational, 3>, 3>;

Plain plain_mul(const Plain& a, const Plain& b) {
  Plain c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

NcPoly bracket_of(const Presentation& p, const std::string& text) { return p.parse(text); }

}  // namespace

TEST_CASE("sl2 brackets") {
  ParamSet ps;
  auto m = sl2_abc(ps);
  CHECK(mat_bracket(m[0], m[1]) == m[2] - m[0] - m[1]);
  CHECK(mat_bracket(m[1], m[2]) == m[0] - m[1] - m[2]);
  CHECK(mat_bracket(m[2], m[0]) == m[1] - m[2] - m[0]);
  CHECK(mat_bracket(m[0], m[0]).is_zero());
  CHECK(rank_span(m) == 3);
  CHECK(mat_trace(m[0] + m[1] + m[2]).is_zero());
}

TEST_CASE("sl2 double brackets") {
  ParamSet ps;
  auto m = sl2_abc(ps);
  auto br = [](const Matrix& x, const Matrix& y) { return mat_bracket(x, y); };
  CHECK(br(m[0], br(m[0], m[1])) == m[0].scaled(RatFunc(2)));
  CHECK(br(m[1], br(m[1], m[2])) == m[1].scaled(RatFunc(2)));
  CHECK(br(m[2], br(m[2], m[0])) == m[2].scaled(RatFunc(2)));
}

TEST_CASE("sl3 bracket of A and B") {
  ParamSet ps({"xi"});
  auto m = sl3_abc(ps);
  CHECK(mat_bracket(m[0], m[1]) == Matrix::parse({{"0", "-xi^2", "1"}, {"0", "-xi", "0"}, {"0", "0", "xi"}}, ps));
}

TEST_CASE("bracket is antisymmetric and rejects mismatched sizes") {
  ParamSet ps({"xi"});
  auto m = sl3_abc(ps);
  for (const auto& a : m)
    for (const auto& b : m) CHECK(mat_bracket(a, b) == -mat_bracket(b, a));
  CHECK_THROWS_AS(mat_bracket(m[0], sl2_abc(ps)[0]), MatrixError);
}

TEST_CASE("constructed elements have trace zero") {
  ParamSet ps({"xi", "t"});
  std::vector<Matrix> all;
  for (auto& x : sl2_abc(ps)) all.push_back(x);
  for (auto& x : sl3_basis(ps)) all.push_back(x);
  for (auto& x : loop_abc(ps)) all.push_back(x);
  auto loop = loop_abc(ps);
  all.push_back(mat_bracket(loop[0], mat_bracket(loop[1], loop[2])));
  for (const auto& x : all) CHECK(mat_trace(x).is_zero());
}

TEST_CASE("3x3 matrices satisfy the down-up relations") {
  ParamSet ps({"alpha", "beta", "gamma", "t"});
  auto rep = downup_rep_3x3(ps);
  Presentation p = make("z3downup", Bindings(ps));
  for (const auto& r : p.relations) CHECK(eval_ncpoly(r, rep).is_zero());
}

TEST_CASE("loop matrices satisfy [A,[A,B]] = -2 xi A") {
  ParamSet ps({"xi", "t"});
  auto rep = loop_abc(ps);
  Presentation p = make("lie_L", Bindings(ps).set("gamma", "-2*xi"));
  for (const auto& r : p.relations) CHECK(eval_ncpoly(r, rep).is_zero());
  NcPoly aab = bracket_of(p, "A*A*B - 2*A*B*A + B*A*A + 2*xi*A");
  CHECK(eval_ncpoly(aab, rep).is_zero());
}

TEST_CASE("eval needs an image for every generator") {
  ParamSet ps({"xi"});
  Presentation p = make("lie_L", Bindings(ps).set("gamma", "xi"));
  auto rep = sl3_abc(ps);
  std::map<std::string, Matrix> partial = {{"A", rep[0]}, {"B", rep[1]}};
  CHECK_THROWS(eval_ncpoly(p.relations[0], partial));
}

TEST_CASE("ABCA at the 3x3 matrices") {
  ParamSet ps({"alpha", "gamma", "t"});
  auto rep = downup_rep_3x3(ps);
  Matrix abca = rep[0] * rep[1] * rep[2] * rep[0];
  RatFunc t = RatFunc::param(ps, "t"), a = RatFunc::param(ps, "alpha"), g = RatFunc::param(ps, "gamma");
  CHECK(abca == rep[0].scaled(t.pow(3)));
  CHECK(abca != rep[0].scaled(-(a.inv().pow(3)) * g.pow(3) * t.pow(3)));

  // plain numeric products at random points
  Rng rng(83);
  for (int i = 0; i < 20; ++i) {
    Rational al = nonzero_rational(rng), ga = nonzero_rational(rng), tv = nonzero_rational(rng);
    Rational e = -ga / (al * tv);
    Plain A{}, B{}, C{};
    A[0][1] = tv, A[2][1] = e;
    B[0][2] = e, B[1][2] = tv;
    C[1][0] = e, C[2][0] = tv;
    Plain P = plain_mul(plain_mul(plain_mul(A, B), C), A);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) CHECK(P[r][c] == tv * tv * tv * A[r][c]);
  }
}

TEST_CASE("(ABC)^n A are independent only with t as a loop variable") {
  ParamSet ps({"alpha", "gamma", "t"});
  auto rep = downup_rep_3x3(ps);
  Matrix abc = rep[0] * rep[1] * rep[2];
  std::vector<Matrix> mats;
  Matrix x = rep[0];
  for (int n = 0; n <= 5; ++n) {
    mats.push_back(x);
    x = abc * x;
  }
  CHECK(rank_span(mats, {"t"}) == 6);
  CHECK(rank_span(mats) == 1);
}

TEST_CASE("rank of spans") {
  ParamSet ps({"xi"});
  auto m = sl3_abc(ps);
  CHECK(rank_span({m[0], -m[0]}) == 1);
  CHECK(rank_span({}) == 0);
  CHECK(rank_span(sl3_basis(ps)) == 8);
  auto at_minus_one = sl3_basis(ps);
  for (auto& b : at_minus_one) b = b.substitute({{"xi", Rational(-1)}});
  CHECK(rank_span(at_minus_one) < 8);
}

TEST_CASE("sl3 basis rank agrees with plain elimination at random points") {
  ParamSet ps({"xi"});
  auto basis = sl3_basis(ps);
  Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    Rational xi = nonzero_rational(rng, 9);
    std::vector<std::vector<Rational>> rows;
    for (const auto& b : basis) rows.push_back(numeric_entries(b.substitute({{"xi", xi}})));
    std::size_t expected = xi == -1 ? 7 : 8;
    CHECK(rational_rank(rows) <= expected);
    if (xi != -1) CHECK(rational_rank(rows) == 8);
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& b : basis) rows.push_back(numeric_entries(b.substitute({{"xi", Rational(-1)}})));
  std::vector<Matrix> sym;
  for (const auto& b : basis) sym.push_back(b.substitute({{"xi", Rational(-1)}}));
  CHECK(rational_rank(rows) == rank_span(sym));
}

TEST_CASE("kernel vectors and span coordinates") {
  ParamSet ps({"xi"});
  auto m = sl3_abc(ps);
  Matrix ab = mat_bracket(m[0], m[1]);
  std::vector<SparseVec> rows = {flatten(m[0]), flatten(m[1]), flatten(m[0] + m[1].scaled(RatFunc::param(ps, "xi")))};
  auto k = kernel_vector(rows);
  REQUIRE(k.has_value());
  Matrix combo = m[0].scaled((*k)[0]) + m[1].scaled((*k)[1]) + (m[0] + m[1].scaled(RatFunc::param(ps, "xi"))).scaled((*k)[2]);
  CHECK(combo.is_zero());
  CHECK_FALSE(kernel_vector({flatten(m[0]), flatten(m[1]), flatten(ab)}).has_value());
  auto c = solve_in_span({flatten(m[0]), flatten(m[1])}, flatten(m[0].scaled(RatFunc(3)) - m[1]));
  REQUIRE(c.has_value());
  CHECK((*c)[0] == RatFunc(3));
  CHECK((*c)[1] == RatFunc(-1));
  CHECK_FALSE(solve_in_span({flatten(m[0])}, flatten(m[1])).has_value());
}

TEST_CASE("unit-matrix formulas and the Jacobi sum") {
  ParamSet ps({"xi"});
  CheckReport r = verify_sl3_unit_formulas(ps);
  CHECK(r.ok());
  CHECK(r.entries.size() >= 9);
  auto m = sl3_abc(ps);
  Matrix j = mat_bracket(m[0], mat_bracket(m[1], m[2])) + mat_bracket(m[1], mat_bracket(m[2], m[0])) +
             mat_bracket(m[2], mat_bracket(m[0], m[1]));
  CHECK(j.is_zero());
}

TEST_CASE("symbolic identities hold at random xi") {
  ParamSet ps({"xi"});
  auto m = sl3_abc(ps);
  Presentation p = make("lie_L", Bindings(ps).set("gamma", "-2*xi"));
  Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    Rational xi = nonzero_rational(rng, 9);
    if (xi == -1) continue;
    std::vector<Matrix> at;
    for (const auto& x : m) at.push_back(x.substitute({{"xi", xi}}));
    for (const auto& r : p.relations) CHECK(eval_ncpoly(r.substitute_params({{"xi", xi}}), at).is_zero());
    std::vector<Matrix> basis;
    for (const auto& b : sl3_basis(ps)) basis.push_back(b.substitute({{"xi", xi}}));
    CHECK(rank_span(basis) == 8);
  }
}

TEST_CASE("envelope presentations") {
  Presentation s2 = sl2_envelope(ParamSet{});
  CHECK(s2.alphabet.size() == 3);
  CHECK(s2.relations.size() == 3);
  RewriteSystem sys = s2.orient();
  CHECK(check_confluence(sys).ok());
  Presentation s3 = sl3_envelope(ParamSet({"xi"}));
  CHECK(s3.alphabet.size() == 8);
  CHECK(s3.relations.size() == 28);
}

TEST_CASE("matrix arithmetic") {
  ParamSet ps({"xi"});
  auto m = sl3_abc(ps);
  Matrix id = Matrix::identity(3, ps);
  CHECK(m[0] * id == m[0]);
  CHECK((m[0] * m[1]) * m[2] == m[0] * (m[1] * m[2]));
  CHECK(m[0] * (m[1] + m[2]) == m[0] * m[1] + m[0] * m[2]);
  CHECK(mat_trace(id) == RatFunc(3));
  CHECK(m[0].substitute({{"xi", Rational(2)}}).at(2, 1) == RatFunc(2));
  CHECK_THROWS(Matrix::parse({{"1", "2"}, {"3"}}, ps));
}
