#include "support.hpp"

#include <doctest.h>

using namespace dulab;
using namespace dulab::testing;

namespace {

Presentation z3(const char* a, const char* b, const char* g) {
  Bindings bd(ParamSet{});
  bd.set("alpha", std::string_view(a)).set("beta", std::string_view(b)).set("gamma", std::string_view(g));
  return make("z3downup", bd);
}

std::set<std::string> lhs_words(const RewriteSystem& sys) {
  std::set<std::string> out;
  for (const auto& r : sys.rules()) out.insert(r.lhs.str(sys.alphabet()));
  return out;
}

std::string rule_text(const RewriteSystem& sys, const std::string& lhs) {
  for (const auto& r : sys.rules())
    if (r.lhs.str(sys.alphabet()) == lhs) return r.rhs.str(sys.order());
  return "<none>";
}

}  // namespace

TEST_CASE("orientation of z3downup(0,0,0)") {
  RewriteSystem sys = z3("0", "0", "0").orient();
  CHECK(lhs_words(sys) == std::set<std::string>{"B*A^2", "B^2*A", "C*B^2", "C^2*B", "A*C^2", "A^2*C"});
  for (const auto& r : sys.rules()) CHECK(r.rhs.is_zero());
}

TEST_CASE("orientation of the Weyl and reduced algebras") {
  Presentation w = make("z3weyl");
  RewriteSystem sw = w.orient();
  CHECK(sw.rules().size() == 3);
  CHECK(sw.normal_form(w.parse("B*A")) == w.parse("A*B - theta"));
  CHECK(sw.normal_form(w.parse("C*B")) == w.parse("B*C - theta"));
  CHECK(sw.normal_form(w.parse("C*A")) == w.parse("A*C + theta"));

  Presentation r = make("reduced");
  RewriteSystem sr = r.orient();
  CHECK(lhs_words(sr) ==
        std::set<std::string>{"A^2", "B^2", "C^2", "A*B*A", "B*C*B", "C*A*C", "B*A*B", "C*B*C", "A*C*A"});
  CHECK(rule_text(sr, "A*B*A") == "theta*A");
  CHECK(rule_text(sr, "A^2") == "0");
}

TEST_CASE("normal forms") {
  Presentation w = make("z3weyl");
  CHECK(w.orient().normal_form(w.parse("C*B*A")) == w.parse("A*B*C - theta*A + theta*B - theta*C"));
  Presentation q = make("z3qweyl");
  CHECK(q.orient().normal_form(q.parse("C*B*A")) ==
        q.parse("q^-1*A*B*C - q^-1*theta*A + q^-1*theta*B - q^-1*theta*C"));
  Presentation r = make("reduced");
  CHECK(r.orient().normal_form(r.parse("A*B*A*C*A")) == r.parse("theta^2*A"));
}

TEST_CASE("overlap enumeration") {
  RewriteSystem w = make("z3weyl").orient();
  auto ov = enumerate_overlaps(w);
  REQUIRE(ov.size() == 1);
  CHECK(ov[0].word.str(w.alphabet()) == "C*B*A");

  RewriteSystem r = make("reduced").orient();
  std::set<std::string> words;
  for (const auto& o : enumerate_overlaps(r)) words.insert(o.word.str(r.alphabet()));
  CHECK(words.count("A*B*A*C*A"));
  CHECK(words.count("A^2*B*A"));
  CHECK(words.count("A*B*A^2"));

  // BAA has no self-overlap
  Presentation p = z3("0", "0", "0");
  RewriteSystem one(p.alphabet, p.params, p.order);
  one.push_rule(Rule{0, Word{1, 0, 0}, p.zero(), "test", std::nullopt});
  CHECK(enumerate_overlaps(one).empty());
}

TEST_CASE("confluence checks") {
  RewriteSystem a000 = z3("0", "0", "0").orient();
  CHECK(check_confluence(a000).ok());
  CHECK(a000.is_confluent());
  RewriteSystem w = make("weyl").orient();
  CHECK(check_confluence(w).ok());

  // gamma = 1: (BAA)C -> AC but B(AAC) -> BA
  RewriteSystem a001 = z3("0", "0", "1").orient();
  CHECK(a001.normal_form(a001.gen("B") * a001.gen("A") * a001.gen("A")) == a001.gen("A"));
  CheckReport rep = check_confluence(a001);
  CHECK_FALSE(rep.ok());
  bool found = false;
  for (const auto& e : rep.entries)
    if (e.outcome != Outcome::verified && e.label.find("B*A^2*C") != std::string::npos) found = true;
  CHECK(found);
  CHECK_FALSE(a001.is_confluent());
}

TEST_CASE("completion of z3downup(0,0,1)") {
  RewriteSystem sys = complete(z3("0", "0", "1").orient(), 6);
  CHECK(sys.is_confluent());
  auto words = normal_words(sys, 6);
  CHECK(words_text(words, sys.alphabet()) == "1 A A^2");
  CHECK(sys.normal_form(sys.gen("B")) == sys.gen("A"));
  CHECK(sys.normal_form(sys.gen("C")) == sys.gen("A"));
  CHECK(sys.normal_form(sys.gen("A").pow(3)) == sys.gen("A"));
}

TEST_CASE("completion of an already confluent system adds nothing") {
  RewriteSystem w = make("z3weyl").orient();
  std::size_t n = w.rules().size();
  RewriteSystem c = complete(w, 6);
  CHECK(c.rules().size() == n);
  CHECK(c.is_confluent());
}

TEST_CASE("equitable U_q(sl2) completes to the x^i y^j z^k basis") {
  Presentation u = make("uq_sl2_equitable");
  RewriteSystem sys = complete(u.orient(), 4);
  CHECK(sys.is_confluent());
  // rules beyond orientation are the y^-1 commutations
  CHECK(sys.rules().size() > u.orient().rules().size());
  CHECK(count_by_degree(sys, 3) == std::vector<std::size_t>{1, 4, 9, 16});
}

TEST_CASE("normal-word counts") {
  // brute force over words avoiding the six forbidden triples
  std::set<std::string> forbidden = {"BAA", "BBA", "CBB", "CCB", "ACC", "AAC"};
  CHECK(count_by_degree(z3("0", "0", "0").orient(), 3) == std::vector<std::size_t>{1, 3, 9, 21});
  CHECK(count_by_degree(z3("0", "0", "0").orient(), 8) == count_avoiding("ABC", forbidden, 8));

  RewriteSystem r = make("reduced").orient();
  CHECK(count_by_degree(r, 4) == std::vector<std::size_t>{1, 3, 6, 6, 6});

  RewriteSystem w = make("z3weyl").orient();
  auto wc = count_by_degree(w, 7);
  for (std::size_t n = 0; n < wc.size(); ++n) CHECK(wc[n] == (n + 1) * (n + 2) / 2);

  RewriteSystem d = make("downup").orient();
  check_confluence(d);
  CHECK(d.is_confluent());
  CHECK(count_by_degree(d, 8) == triple_counts(8));
  CHECK(triple_counts(3)[3] == 6);
}

TEST_CASE("normal forms: idempotent, linear, independent of strategy") {
  Rng rng(31);
  for (auto& [name, sys] : confluent_systems()) {
    CAPTURE(name);
    REQUIRE(sys.is_confluent());
    const auto& ps = sys.params();
    for (int i = 0; i < 50; ++i) {
      NcPoly p = random_ncpoly(rng, sys.alphabet(), ps, 5, 4, true);
      NcPoly q = random_ncpoly(rng, sys.alphabet(), ps, 5, 4, true);
      RatFunc c = ps.empty() ? RatFunc(small_rational(rng)) : random_ratfunc(rng, ps);
      NcPoly np = sys.normal_form(p);
      CHECK(sys.normal_form(np) == np);
      CHECK(sys.normal_form(p + q.scaled(c)) == np + sys.normal_form(q).scaled(c));
      CHECK(random_reduce(sys, p, rng) == np);
    }
  }
}

TEST_CASE("completed rules follow from their recorded derivations") {
  for (const Presentation& p : {z3("0", "0", "1"), make("uq_sl2_equitable"), make("s_gamma")}) {
    CAPTURE(p.name);
    CompletionOptions opts;
    opts.track_derivations = true;
    RewriteSystem sys = complete(p.orient(OrientOptions{true}), 5, opts);
    for (const auto& r : sys.rules()) {
      REQUIRE(r.derivation.has_value());
      CHECK(r.derivation->expand(sys.relations()) == r.as_poly());
    }
  }
}

TEST_CASE("adding rules never increases counts") {
  RewriteSystem before = z3("0", "0", "1").orient();
  RewriteSystem after = complete(before, 5);
  auto a = count_by_degree(before, 5), b = count_by_degree(after, 5);
  for (std::size_t n = 0; n < a.size(); ++n) CHECK(b[n] <= a[n]);

  RewriteSystem u0 = make("uq_sl2_equitable").orient();
  RewriteSystem u1 = complete(u0, 4);
  auto c = count_by_degree(u0, 4), d = count_by_degree(u1, 4);
  for (std::size_t n = 0; n < c.size(); ++n) CHECK(d[n] <= c[n]);
}

TEST_CASE("completion respects the rule cap") {
  CompletionOptions opts;
  opts.rule_cap = 8;
  CHECK_THROWS_AS(complete(make("uq_a21").orient(), 4, opts), ResourceCapExceeded);
}

TEST_CASE("bounded confluence check") {
  RewriteSystem a001 = z3("0", "0", "1").orient();
  // the failing overlap BAAC has length 4
  CHECK(check_confluence(a001, 3u).ok());
  CHECK_FALSE(check_confluence(a001, 4u).ok());
}
