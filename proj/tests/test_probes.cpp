#include "support.hpp"

#include <doctest.h>

using namespace dulab;
using namespace dulab::testing;

namespace {

using Images = std::map<std::string, std::string>;

Bindings constants(const char* a, const char* b, const char* g) {
  Bindings x(ParamSet{});
  x.set("alpha", std::string_view(a)).set("beta", std::string_view(b)).set("gamma", std::string_view(g));
  return x;
}

GenMap inclusion(const Bindings& b, unsigned deg) {
  return make_map("inclusion", make("downup", b), prepare_target(make("z3downup", b), deg), Images{{"A", "A"}, {"B", "B"}});
}

std::vector<NcPoly> abc_powers(const Presentation& p) {
  std::vector<NcPoly> out;
  NcPoly x = p.parse("A");
  for (int n = 0; n <= 5; ++n) {
    out.push_back(x);
    x = p.parse("A*B*C") * x;
  }
  return out;
}

}  // namespace

TEST_CASE("matrix independence") {
  ParamSet ps({"alpha", "beta", "gamma", "t"});
  Presentation p = make("z3downup", Bindings(ps));
  auto rep = downup_rep_3x3(ps);
  ProbeResult r = probe_matrix_independence("powers", rep, abc_powers(p), {"t"});
  CHECK(r.rank == 6);
  CHECK(r.consistent());

  ProbeResult ab = probe_matrix_independence("AB BA", rep, {p.parse("A*B"), p.parse("B*A")});
  CHECK(ab.rank == 2);
  CHECK(ab.consistent());

  ProbeResult dup = probe_matrix_independence("dup", rep, {p.parse("A"), p.parse("A")});
  CHECK(dup.rank == 1);
  CHECK(dup.verdict == ProbeVerdict::inconclusive);
}

TEST_CASE("the inclusion of A(0,0,0) is injective to degree 4") {
  ProbeResult r = probe_injectivity(inclusion(constants("0", "0", "0"), 4), 4);
  CHECK(r.verdict == ProbeVerdict::consistent);
  auto expect = triple_counts(4);
  CHECK(r.counts == expect);
  CHECK(r.count == 22);
  CHECK(r.rank == 22);
}

TEST_CASE("the inclusion of A(0,0,1) has a kernel") {
  ProbeResult r = probe_injectivity(inclusion(constants("0", "0", "1"), 6), 3);
  CHECK(r.verdict == ProbeVerdict::counterexample);
  REQUIRE(r.counts.size() == 4);
  CHECK(r.counts[3] == 6);
  CHECK(r.rank == 3);
  CHECK(r.count > r.rank);
  CHECK_FALSE(r.witness.empty());

  // the witness really maps to zero
  Presentation tp = make("z3downup", constants("0", "0", "1"));
  NcPoly w = tp.parse(r.witness);
  CHECK_FALSE(w.is_zero());
  RewriteSystem tgt = complete(tp.orient(), 6);
  CHECK(tgt.normal_form(w).is_zero());
}

TEST_CASE("identity on the Weyl algebra has full rank") {
  Presentation w = make("weyl");
  ProbeResult r = probe_injectivity(make_map("id", w, prepare_target(w, 3), Images{{"A", "A"}, {"B", "B"}}), 4);
  CHECK(r.consistent());
  CHECK(r.rank == r.count);
  CHECK(r.counts == std::vector<std::size_t>{1, 2, 3, 4, 5});
}

TEST_CASE("rank is nondecreasing in the degree") {
  for (const char* g : {"0", "1"}) {
    ProbeResult r = probe_injectivity(inclusion(constants("0", "0", g), 6), 4);
    for (std::size_t i = 1; i < r.ranks.size(); ++i) CHECK(r.ranks[i] >= r.ranks[i - 1]);
    // prefix sums of counts bound the ranks
    std::size_t total = 0;
    for (std::size_t i = 0; i < r.ranks.size(); ++i) {
      total += r.counts[i];
      CHECK(r.ranks[i] <= total);
    }
  }
}

TEST_CASE("finite dimension") {
  ProbeResult a = probe_finite_dimension(make("z3downup", constants("0", "0", "1")), 6);
  CHECK(a.verdict == ProbeVerdict::finite_dimension);
  CHECK(a.count == 3);
  CHECK(a.basis == std::vector<std::string>{"1", "A", "A^2"});

  ProbeResult s = probe_finite_dimension(make("s_gamma"), 6);
  CHECK(s.verdict == ProbeVerdict::finite_dimension);
  CHECK(s.basis == std::vector<std::string>{"1", "D", "D^2"});

  ProbeResult z = probe_finite_dimension(make("z3downup", constants("0", "0", "0")), 4);
  CHECK(z.verdict != ProbeVerdict::finite_dimension);
  CHECK(z.counts == std::vector<std::size_t>{1, 3, 9, 21, 51});
  CHECK(z.counts == count_avoiding("ABC", {"BAA", "BBA", "CBB", "CCB", "ACC", "AAC"}, 4));
}

TEST_CASE("the four infinite-dimensional cases") {
  CHECK(downup_cases().size() == 4);
  for (DownUpCase c : downup_cases()) {
    CHECK(parse_case(case_name(c)) == c);
    ProbeResult r = probe_downup_case(c, 4);
    CHECK_MESSAGE(r.consistent(), r.summary());
  }
  CHECK_THROWS(parse_case("no-such-case"));
  ProbeResult w = probe_downup_case(DownUpCase::alpha_zero_beta_one, 3);
  CHECK(w.counts == std::vector<std::size_t>{1, 3, 6, 10});
  ProbeResult two = probe_downup_case(DownUpCase::alpha_nonzero, 5);
  CHECK(two.rank == 6);
}

TEST_CASE("probes are deterministic") {
  auto run = [] { return probe_injectivity(inclusion(constants("0", "0", "1"), 6), 3); };
  ProbeResult a = run(), b = run();
  CHECK(a.counts == b.counts);
  CHECK(a.ranks == b.ranks);
  CHECK(a.witness == b.witness);
  CHECK(probe_to_json(a) == probe_to_json(b));
}

TEST_CASE("Lie monomials") {
  GenAlphabet a({"A", "B", "C"});
  ParamSet ps;
  auto len1 = lie_monomials(a, ps, 1);
  CHECK(len1.size() == 3);
  auto len3 = lie_monomials(a, ps, 3);
  CHECK(len3.size() == 3 + 9 + 27);
  // reversal maps [x1,[...,xn]] to (-1)^(n-1) times itself
  std::size_t nonzero = 0;
  for (const auto& m : len3) {
    if (m.is_zero()) continue;
    ++nonzero;
    std::size_t n = m.terms().begin()->first.size();
    CHECK(m.reversed() == m.scaled(RatFunc(n % 2 == 0 ? -1 : 1)));
  }
  // [x,x] vanishes, so does [x,[y,y]]
  CHECK(nonzero == 3 + 6 + 18);
}

TEST_CASE("Lie injectivity of the loop map") {
  ParamSet ps({"xi", "t"});
  GenMap m = make_matrix_map("loop", make("lie_L", Bindings(ps).set("gamma", "-2*xi")), loop_abc(ps));
  ProbeResult r = probe_lie_injectivity(m, 3, {"t"});
  CHECK(r.consistent());
  CHECK(r.rank == r.count);

  // dropping t collapses the loop images
  ProbeResult flat = probe_lie_injectivity(m, 3);
  CHECK(flat.rank <= 8);
  CHECK(flat.rank <= r.rank);
}
