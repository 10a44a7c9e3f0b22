#include "support.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sys/wait.h>

using namespace dulab;
using namespace dulab::testing;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(DULAB_CLI_PATH) + " " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string spec(const char* name) { return std::string(DULAB_SPECS_DIR) + "/" + name; }

bool contains(const std::string& s, const std::string& x) { return s.find(x) != std::string::npos; }

}  // namespace

// ---- expression language ---------------------------------------------------

TEST_CASE("parsing the q-commutator relation") {
  GenAlphabet a({"x", "y"});
  ParamSet ps({"q"});
  NcPoly p = parse_poly("q*x*y - q^-1*y*x - (q - q^-1)", a, ps);
  RatFunc q = RatFunc::param(ps, "q");
  NcPoly x = NcPoly::gen(a, ps, "x"), y = NcPoly::gen(a, ps, "y");
  CHECK(p == (x * y).scaled(q) - (y * x).scaled(q.inv()) - NcPoly::constant(a, ps, q - q.inv()));
}

TEST_CASE("parsing nested brackets") {
  GenAlphabet a({"A", "B"});
  ParamSet ps({"g"});
  NcPoly p = parse_poly("[A,[A,B]] - g*A", a, ps);
  CHECK(p == parse_poly("A^2*B - 2*A*B*A + B*A^2 - g*A", a, ps));
  CHECK(parse_poly("A^0", a, ps) == NcPoly::constant(a, ps, RatFunc(ps, Rational(1))));
  CHECK(parse_poly(" ( A + B ) ^2 ", a, ps) == parse_poly("A*A + A*B + B*A + B*B", a, ps));
}

TEST_CASE("parse errors") {
  GenAlphabet a({"A", "B"});
  ParamSet ps({"g"});
  CHECK_THROWS_AS(parse_poly("A^-1", a, ps), ParseError);
  CHECK_THROWS_AS(parse_poly("A + Z", a, ps), ParseError);
  CHECK_THROWS_AS(parse_poly("[A, B", a, ps), ParseError);
  CHECK_THROWS_AS(parse_poly("A $ B", a, ps), ParseError);
  try {
    parse_poly("A + Z", a, ps);
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
  // parameter powers may be negative
  CHECK_NOTHROW(parse_poly("g^-2*A", a, ps));
}

TEST_CASE("ast shape") {
  auto ast = parse_expr("[A, B*C]^2");
  REQUIRE(ast);
  CHECK(ast->kind == ExprAst::Kind::power);
  CHECK(ast->exponent == 2);
  REQUIRE(ast->children.size() == 1);
  CHECK(ast->children[0]->kind == ExprAst::Kind::bracket);
  CHECK(ast->children[0]->children.size() == 2);
}

TEST_CASE("every catalog relation survives render and reparse") {
  for (const auto& e : catalog_entries()) {
    Presentation p = make(e.name);
    for (const auto& r : p.relations) {
      CHECK_MESSAGE(p.parse(r.str()) == r, e.name);
      CHECK_MESSAGE(p.parse(r.str(p.order)) == r, e.name);
    }
  }
}

TEST_CASE("random expressions survive render and reparse") {
  GenAlphabet a({"A", "B", "C"});
  ParamSet ps({"alpha", "q"});
  Rng rng(99);
  for (int i = 0; i < 100; ++i) {
    NcPoly p = random_ncpoly(rng, a, ps);
    CHECK(parse_poly(p.str(), a, ps) == p);
  }
}

// ---- file formats ----------------------------------------------------------

TEST_CASE("presentation documents round trip") {
  for (const char* name : {"z3downup", "z3qweyl", "uq_sl2_equitable", "s_gamma"}) {
    Presentation p = make(name);
    Json j = presentation_to_json(p);
    CHECK(j["format_version"] == kFormatVersion);
    Presentation back = presentation_from_json(j);
    CHECK(back.alphabet.names() == p.alphabet.names());
    REQUIRE(back.relations.size() == p.relations.size());
    for (std::size_t i = 0; i < p.relations.size(); ++i) CHECK(back.relations[i].str() == p.relations[i].str());
  }
  Json bad = presentation_to_json(make("weyl"));
  bad["format_version"] = 99;
  CHECK_THROWS_AS(presentation_from_json(bad), FormatError);
}

TEST_CASE("check-spec documents round trip") {
  for (const char* f : {"kacmoody_ef.json", "loop_matrices.json", "weyl_to_z3weyl.json", "wrong_images.json"}) {
    Json j = read_json_file(spec(f));
    CheckSpec s = check_spec_from_json(j);
    Json again = check_spec_to_json(s);
    CheckSpec s2 = check_spec_from_json(again);
    CHECK(check_spec_to_json(s2) == again);
    CHECK(s2.label == s.label);
    CHECK(s2.images == s.images);
    CHECK(s2.matrices == s.matrices);
  }
  CHECK_THROWS_AS(check_spec_from_json(Json::parse(R"({"source": "weyl"})")), FormatError);
}

TEST_CASE("file-based check specs") {
  auto base = std::filesystem::path(DULAB_SPECS_DIR);
  CHECK(check_hom(build_map(check_spec_from_json(read_json_file(spec("weyl_to_z3weyl.json"))), base)).ok());
  CHECK(check_hom(build_map(check_spec_from_json(read_json_file(spec("wrong_images.json"))), base)).verdict() ==
        Outcome::refuted);
}

// ---- claim registry --------------------------------------------------------

TEST_CASE("claim registry") {
  std::set<std::string> ids, topics;
  for (const auto& t : claim_topics()) topics.insert(t.name);
  std::map<std::string, int> per_topic;
  for (const auto& c : claim_registry()) {
    CHECK_MESSAGE(ids.insert(c.id).second, c.id);
    CHECK_MESSAGE(topics.count(c.topic) == 1, c.topic);
    CHECK(c.id.starts_with(c.topic + "."));
    ++per_topic[c.topic];
  }
  for (const auto& t : topics) CHECK_MESSAGE(per_topic[t] > 0, t);
  CHECK_THROWS_AS(verify_claims({"bogus"}), ClaimError);
}

TEST_CASE("claim verdicts do not depend on the job count") {
  auto one = verify_claims({"extreme", "uq_sl2"}, 1);
  auto three = verify_claims({"extreme", "uq_sl2"}, 3);
  REQUIRE(one.size() == three.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].id == three[i].id);
    CHECK(one[i].verdict == three[i].verdict);
    CHECK(one[i].detail == three[i].detail);
  }
  Json j = claims_to_json(one);
  CHECK(j["claims"].size() == one.size());
  for (const auto& c : j["claims"]) {
    CHECK(c.contains("claim_id"));
    CHECK(c.contains("verdict"));
    CHECK(c.contains("millis"));
  }
}

TEST_CASE("the extreme topic has four entries") {
  auto r = verify_claims({"extreme"});
  CHECK(r.size() == 4);
  for (const auto& c : r) CHECK_MESSAGE(!c.failed(), (c.id + ": " + c.detail));
}

// ---- the binary ------------------------------------------------------------

TEST_CASE("present") {
  Run list = run("present --list");
  CHECK(list.code == 0);
  for (const auto& e : catalog_entries()) CHECK(contains(list.out, e.name));
  Run show = run("present show weyl");
  CHECK(show.code == 0);
  CHECK(contains(show.out, "theta"));
  CHECK(run("present show nothing_here").code == 2);
  Run load = run("present load " + spec("qplane.json"));
  CHECK(load.code == 0);
  CHECK(contains(load.out, "yinv"));
}

TEST_CASE("hilbert, basis and normal forms") {
  Run h = run("hilbert z3downup --bind alpha=0 --bind beta=0 --bind gamma=0 --max-deg 3");
  CHECK(h.code == 0);
  CHECK(contains(h.out, "1 3 9 21"));
  Run q = run("hilbert " + spec("qplane.json") + " --bind q=3/2 --max-deg 4");
  CHECK(q.code == 0);
  CHECK(contains(q.out, "1 3 5 7 9"));
  Run b = run("basis s_gamma --max-deg 4");
  CHECK(b.code == 0);
  CHECK(contains(b.out, "D^2"));
  Run nf = run("nf weyl \"B*A\"");
  CHECK(nf.code == 0);
  CHECK(contains(nf.out, "A*B - theta"));
  CHECK(run("nf weyl \"A +* B\"").code == 2);
  CHECK(run("hilbert weyl --bind theta=x").code == 2);
}

TEST_CASE("complete") {
  Run c = run("complete z3downup --bind alpha=0 --bind beta=0 --bind gamma=1 --max-deg 5");
  CHECK(c.code == 0);
  CHECK(contains(c.out, "confluent"));
}

TEST_CASE("homcheck exit codes") {
  Run ok = run("homcheck " + spec("weyl_to_z3weyl.json"));
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "verified"));
  Run bad = run("homcheck " + spec("wrong_images.json"));
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "refuted"));
  CHECK(run("homcheck /no/such/file.json").code == 2);

  Run js = run("--format json homcheck " + spec("loop_matrices.json"));
  CHECK(js.code == 0);
  Json j = Json::parse(js.out);
  CHECK(j["verdict"] == "verified");
  CHECK(j["format_version"] == kFormatVersion);
}

TEST_CASE("probe subcommands") {
  Run cases = run("probe cases --max-deg 4");
  CHECK(cases.code == 0);
  CHECK(contains(cases.out, "gamma-zero"));
  Run fd = run("--format json probe finite-dim s_gamma");
  CHECK(fd.code == 0);
  Json j = Json::parse(fd.out);
  CHECK(j["verdict"] == "finite-dimension-certified");
  CHECK(j["basis"] == Json::array({"1", "D", "D^2"}));
}

TEST_CASE("claim suite subcommand") {
  Run g = run("verify-paper --topic grading");
  CHECK(g.code == 0);
  Run obs = run("verify-paper --topic observations");
  CHECK(obs.code == 1);
  CHECK(contains(obs.out, "refuted"));
  CHECK(run("verify-paper --topic bogus").code == 2);
  Run topics = run("verify-paper --list-topics");
  CHECK(topics.code == 0);
  for (const auto& t : claim_topics()) CHECK(contains(topics.out, t.name));

  Run a = run("--format json --jobs 1 verify-paper --topic extreme --topic weyl");
  Run b = run("--format json --jobs 3 verify-paper --topic extreme --topic weyl");
  Json ja = Json::parse(a.out), jb = Json::parse(b.out);
  REQUIRE(ja["claims"].size() == jb["claims"].size());
  for (std::size_t i = 0; i < ja["claims"].size(); ++i) {
    CHECK(ja["claims"][i]["claim_id"] == jb["claims"][i]["claim_id"]);
    CHECK(ja["claims"][i]["verdict"] == jb["claims"][i]["verdict"]);
  }
}
