// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails.
#include "support.hpp"

#include <fmt/format.h>

#include <chrono>
#include <iostream>
#include <string_view>
#include <thread>

using namespace dulab;
using namespace dulab::testing;

namespace {

struct Criterion {
  bool pass = true;
  std::vector<std::string> notes;

  void need(bool ok, std::string what) {
    if (!ok) pass = false;
    notes.push_back((ok ? "ok: " : "FAILED: ") + std::move(what));
  }
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

Bindings constants(const char* a, const char* b, const char* g) {
  Bindings x(ParamSet{});
  x.set("alpha", std::string_view(a)).set("beta", std::string_view(b)).set("gamma", std::string_view(g));
  return x;
}

std::string seq(const std::vector<std::size_t>& v) { return fmt::format("{}", fmt::join(v, ",")); }

// Every claim of the topics (or listed ids) must have one of the verdicts.
void claims_hold(Criterion& o, const std::vector<std::string>& topics, const std::set<std::string>& ids,
                 const std::set<std::string>& allowed) {
  auto results = verify_claims(topics, jobs());
  std::size_t used = 0;
  for (const auto& r : results) {
    if (!ids.empty() && !ids.count(r.id)) continue;
    ++used;
    o.need(allowed.count(r.verdict) == 1, fmt::format("{} [{}] {}", r.id, r.verdict, r.detail));
  }
  o.need(used > 0 && (ids.empty() || used == ids.size()), fmt::format("{} claims checked", used));
}

const std::set<std::string> kVerified = {"verified"};
const std::set<std::string> kSettled = {"verified", "finite-dimension-certified", "consistent-with-claim"};

// ---- 1 ---------------------------------------------------------------------

Criterion confluence_suite() {
  Criterion o;
  auto check = [&](const std::string& name, RewriteSystem sys, unsigned complete_to = 0) {
    CheckReport r = check_confluence(sys);
    if (!sys.is_confluent() && complete_to) {
      sys = complete(sys, complete_to);
      r = check_confluence(sys);
      o.need(sys.is_confluent(), fmt::format("{} confluent after completion to degree {}: {}", name, complete_to,
                                             r.summary()));
      return;
    }
    o.need(sys.is_confluent(), name + " confluent: " + r.summary());
  };
  check("z3downup(0,0,0)", make("z3downup", constants("0", "0", "0")).orient());
  check("weyl", make("weyl").orient());
  check("reduced", make("reduced").orient());
  check("z3qweyl", make("z3qweyl").orient());
  check("uq_sl2_equitable", make("uq_sl2_equitable").orient(), 4);
  check("s_gamma", make("s_gamma").orient());
  return o;
}

// ---- 2 ---------------------------------------------------------------------

Criterion normal_word_counts() {
  Criterion o;
  const std::vector<std::size_t> listed = {1, 3, 9, 21, 45, 93, 189, 381, 765};
  auto engine = count_by_degree(make("z3downup", constants("0", "0", "0")).orient(), 8);
  auto filter = count_avoiding("ABC", {"BAA", "BBA", "CBB", "CCB", "ACC", "AAC"}, 8);
  o.need(engine == filter, fmt::format("z3downup(0,0,0) engine {} vs word filter {}", seq(engine), seq(filter)));
  o.need(engine == listed, fmt::format("z3downup(0,0,0) engine {} vs listed {}", seq(engine), seq(listed)));

  auto reduced = count_by_degree(make("reduced").orient(), 8);
  o.need(reduced == std::vector<std::size_t>{1, 3, 6, 6, 6, 6, 6, 6, 6}, "reduced " + seq(reduced));

  std::vector<std::size_t> binom;
  for (std::size_t n = 0; n <= 8; ++n) binom.push_back((n + 2) * (n + 1) / 2);
  auto weyl = count_by_degree(make("z3weyl").orient(), 8);
  o.need(weyl == binom, "z3weyl " + seq(weyl));

  auto downup = count_by_degree(make("downup").orient(), 8);
  o.need(downup == triple_counts(8), "downup " + seq(downup));
  return o;
}

// ---- 3 ---------------------------------------------------------------------

Criterion finite_collapse() {
  Criterion o;
  RewriteSystem sys = complete(make("z3downup", constants("0", "0", "1")).orient(), 6);
  o.need(sys.is_confluent(), "completion confluent: " + std::string(sys.status_str()));
  auto words = normal_words(sys, 6);
  std::string text = words_text(words, sys.alphabet());
  o.need(text == "1 A A^2", "normal words " + text);
  return o;
}

// ---- 4 ---------------------------------------------------------------------

Criterion symmetry_suite() {
  Criterion o;
  claims_hold(o, {"symmetry", "parameters"}, {}, kVerified);
  return o;
}

// ---- 5 ---------------------------------------------------------------------

Criterion representation_suite() {
  Criterion o;
  claims_hold(o, {"homomorphisms", "sl2", "sl3", "loop"},
              {"homomorphisms.matrix-rep", "sl2.brackets", "sl2.lie-relations", "sl3.brackets", "sl3.unit-formulas",
               "sl3.basis", "sl3.lie-relations", "loop.lie-relations"},
              kVerified);

  ParamSet ps({"alpha", "beta", "gamma", "t"});
  auto rep = downup_rep_3x3(ps);
  bool vanish = true;
  for (const auto& r : make("z3downup", Bindings(ps)).relations) vanish = vanish && eval_ncpoly(r, rep).is_zero();
  o.need(vanish, "3x3 relations vanish");
  Presentation p = make("z3downup", Bindings(ps));
  std::vector<NcPoly> powers;
  NcPoly x = p.parse("A");
  for (int n = 0; n <= 5; ++n, x = p.parse("A*B*C") * x) powers.push_back(x);
  ProbeResult pr = probe_matrix_independence("(ABC)^n A", rep, powers, {"t"});
  o.need(pr.rank == 6, fmt::format("(ABC)^n A rank {}", pr.rank));

  o.need(rank_span(sl2_abc(ParamSet{})) == 3, "sl2 rank 3");
  o.need(rank_span(sl3_basis(ParamSet({"xi"}))) == 8, "sl3 rank 8");
  CheckReport f = verify_sl3_unit_formulas(ParamSet({"xi"}));
  o.need(f.ok(), "unit formulas and Jacobi: " + f.summary());
  return o;
}

// ---- 6 ---------------------------------------------------------------------

Criterion homomorphism_suite() {
  Criterion o;
  claims_hold(o, {"weyl", "lie", "reduced", "sl2", "sl3", "loop", "kacmoody", "qweyl", "uq_sl2", "uq_a21"},
              {"weyl.to-weyl", "weyl.to-z3weyl", "lie.downup-is-envelope", "reduced.from-downup", "reduced.from-lie",
               "sl2.to-envelope", "sl3.to-envelope", "loop.to-envelope", "kacmoody.positive-part",
               "kacmoody.e-embedding", "kacmoody.ef-relations", "kacmoody.to-envelope", "qweyl.to-z3qweyl",
               "uq_sl2.xyz", "uq_sl2.nu", "uq_a21.positive-part", "uq_a21.e-embedding", "uq_a21.kinv", "uq_a21.k"},
              kVerified);
  return o;
}

// ---- 7 ---------------------------------------------------------------------

Criterion implication_suite() {
  Criterion o;
  claims_hold(o, {"lr_triples"}, {}, kVerified);
  return o;
}

// ---- 8 ---------------------------------------------------------------------

Criterion probe_suite() {
  Criterion o;
  for (DownUpCase c : downup_cases()) {
    ProbeResult r = probe_downup_case(c, 5);
    o.need(r.consistent(), r.summary());
  }
  auto incl = [](const char* g, unsigned deg) {
    Bindings b = constants("0", "0", g);
    return make_map("inclusion", make("downup", b), prepare_target(make("z3downup", b), deg),
                    std::map<std::string, std::string>{{"A", "A"}, {"B", "B"}});
  };
  ProbeResult full = probe_injectivity(incl("0", 4), 4);
  o.need(full.consistent() && full.rank == full.count, full.summary());
  ProbeResult kernel = probe_injectivity(incl("1", 6), 3);
  o.need(kernel.verdict == ProbeVerdict::counterexample && !kernel.witness.empty(),
         kernel.summary() + " witness " + kernel.witness);
  auto results = verify_claims({"conjectures"}, jobs());
  for (const auto& r : results)
    o.need(r.verdict == "consistent-with-claim", fmt::format("{} [{}] {}", r.id, r.verdict, r.detail));
  return o;
}

// ---- 9 ---------------------------------------------------------------------

Criterion engine_properties() {
  Criterion o;
  Rng rng(2024);
  for (auto& [name, sys] : confluent_systems()) {
    const auto& a = sys.alphabet();
    const auto& ps = sys.params();
    std::size_t bad = 0;
    for (int i = 0; i < 50; ++i) {
      NcPoly p = random_ncpoly(rng, a, ps, 4, 3, true), q = random_ncpoly(rng, a, ps, 4, 3, true);
      RatFunc c(ps, nonzero_rational(rng));
      NcPoly np = sys.normal_form(p);
      if (sys.normal_form(np) != np) ++bad;
      if (sys.normal_form(p + q.scaled(c)) != np + sys.normal_form(q).scaled(c)) ++bad;
      if (random_reduce(sys, p, rng) != np) ++bad;
    }
    o.need(bad == 0, fmt::format("{}: {} failures in 50 samples", name, bad));
  }

  ParamSet ps({"a", "b"});
  std::size_t bad = 0;
  for (int i = 0; i < 100; ++i) {
    RatFunc x = random_ratfunc(rng, ps), y = random_ratfunc(rng, ps), z = random_ratfunc(rng, ps, false);
    if ((x + y) * z != x * z + y * z) ++bad;
    if ((x * y) * z != x * (y * z)) ++bad;
    if (x + (-x) != RatFunc(0)) ++bad;
    if (z * z.inv() != RatFunc(1)) ++bad;
    std::map<std::string, Rational> at = {{"a", small_rational(rng)}, {"b", small_rational(rng)}};
    try {
      RatFunc sx = x.substitute(at), sy = y.substitute(at);
      if ((x * y).substitute(at) != sx * sy || (x + y).substitute(at) != sx + sy) ++bad;
    } catch (const PoleError&) {
    }
  }
  o.need(bad == 0, fmt::format("coefficient field: {} failures in 100 samples", bad));

  std::size_t relations = 0, mismatched = 0;
  for (const auto& e : catalog_entries()) {
    Presentation p = make(e.name);
    for (const auto& r : p.relations) {
      ++relations;
      if (p.parse(r.str()) != r) ++mismatched;
    }
  }
  o.need(mismatched == 0, fmt::format("catalog round trip: {} of {} relations differ", mismatched, relations));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  bool verbose = argc > 1 && std::string_view(argv[1]) == "--verbose";
  struct Item {
    int n;
    const char* title;
    Criterion (*run)();
  };
  const Item items[] = {
      {1, "confluence of the basic systems", confluence_suite},
      {2, "normal-word counts to degree 8", normal_word_counts},
      {3, "finite-dimension collapse of z3downup(0,0,1)", finite_collapse},
      {4, "symmetries and parameter adjustments", symmetry_suite},
      {5, "matrix representations", representation_suite},
      {6, "homomorphisms", homomorphism_suite},
      {7, "LR-triple implications", implication_suite},
      {8, "probes", probe_suite},
      {9, "engine properties", engine_properties},
  };
  int failed = 0;
  for (const auto& it : items) {
    auto t0 = std::chrono::steady_clock::now();
    Criterion o;
    try {
      o = it.run();
    } catch (const std::exception& e) {
      o.need(false, std::string("exception: ") + e.what());
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << fmt::format("{} criterion {}: {} ({:.1f}s)\n", o.pass ? "PASS" : "FAIL", it.n, it.title, s);
    for (const auto& n : o.notes)
      if (verbose || !o.pass) std::cout << "    " << n << "\n";
    failed += !o.pass;
  }
  std::cout << fmt::format("{} of 9 criteria passed\n", 9 - failed);
  return failed ? 1 : 0;
}
