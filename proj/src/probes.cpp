#include "dulab/probes.hpp"

#include "dulab/parse.hpp"

#include <fmt/format.h>

namespace dulab {

const char* verdict_name(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::consistent:
      return "consistent-with-claim";
    case ProbeVerdict::counterexample:
      return "counterexample-found";
    case ProbeVerdict::finite_dimension:
      return "finite-dimension-certified";
    case ProbeVerdict::inconclusive:
      break;
  }
  return "inconclusive";
}

std::string ProbeResult::summary() const {
  std::string s = fmt::format("{}: {}", name, verdict_name(verdict));
  if (count || rank) s += fmt::format(" (rank {} of {})", rank, count);
  if (!counts.empty()) s += fmt::format(" counts {}", fmt::join(counts, ","));
  return s;
}

namespace {

NcPoly combination(const std::vector<NcPoly>& elems, const std::vector<RatFunc>& coef) {
  NcPoly out(elems.front().alphabet(), elems.front().params());
  for (std::size_t i = 0; i < elems.size(); ++i)
    if (!coef[i].is_zero()) out += elems[i].scaled(coef[i].lifted(out.params()));
  return out;
}

void require_verified(const GenMap& m) {
  CheckReport rep = check_hom(m);
  if (!rep.ok()) throw ProbeError(fmt::format("map {} is not verified: {}", m.label, rep.summary()));
}

bool exact_target(const GenMap& m) { return m.into_matrices() || m.target->sys->is_confluent(); }

// Images of source elements as coordinate vectors.
class ImageCoords {
 public:
  ImageCoords(const GenMap& m, std::vector<std::string> loop_vars) : m_(m), loops_(std::move(loop_vars)) {
    if (!m.into_matrices()) red_.emplace(m);
  }
  SparseVec operator()(const NcPoly& p) {
    if (m_.into_matrices())
      return flatten(eval_ncpoly(p, m_.matrix_images, m_.direction == Direction::antihomomorphism), loops_);
    return flatten(red_->image(p));
  }

 private:
  const GenMap& m_;
  std::vector<std::string> loops_;
  std::optional<ImageReducer> red_;
};

// Ranks of rows[0..end_d) for each degree bound d.
std::vector<std::size_t> cumulative_ranks(const std::vector<SparseVec>& rows, const std::vector<std::size_t>& ends) {
  std::vector<std::size_t> out;
  for (std::size_t e : ends) out.push_back(rank_of({rows.begin(), rows.begin() + static_cast<long>(e)}));
  return out;
}

}  // namespace

ProbeResult probe_matrix_independence(std::string name, const std::vector<Matrix>& rep,
                                      const std::vector<NcPoly>& elements, const std::vector<std::string>& loop_vars,
                                      bool reverse) {
  ProbeResult r;
  r.name = std::move(name);
  r.count = elements.size();
  std::vector<SparseVec> rows;
  for (const auto& e : elements) rows.push_back(flatten(eval_ncpoly(e, rep, reverse), loop_vars));
  r.rank = rank_of(rows);
  r.verdict = r.rank == r.count ? ProbeVerdict::consistent : ProbeVerdict::inconclusive;
  if (r.rank < r.count) {
    if (auto k = kernel_vector(rows)) r.witness = combination(elements, *k).str() + " maps to 0";
    r.notes.push_back("images are dependent; this says nothing about the source");
  }
  return r;
}

ProbeResult probe_injectivity(const GenMap& m, unsigned max_deg, const std::vector<std::string>& loop_vars) {
  require_verified(m);
  ProbeResult r;
  r.name = "injectivity of " + m.label;
  r.degree = max_deg;
  RewriteSystem src = complete(m.source.orient(), max_deg);
  std::vector<Word> words = normal_words(src, max_deg);
  std::vector<NcPoly> elems;
  std::vector<SparseVec> rows;
  ImageCoords coords(m, loop_vars);
  r.counts.assign(max_deg + 1, 0);
  std::vector<std::size_t> ends(max_deg + 1, 0);
  for (const auto& w : words) {
    elems.push_back(NcPoly::word(src.alphabet(), src.params(), w));
    rows.push_back(coords(elems.back()));
    ++r.counts[w.size()];
  }
  for (unsigned d = 0; d <= max_deg; ++d) ends[d] = (d ? ends[d - 1] : 0) + r.counts[d];
  r.count = words.size();
  r.ranks = cumulative_ranks(rows, ends);
  r.rank = r.ranks.back();
  if (r.rank == r.count) {
    r.verdict = ProbeVerdict::consistent;
  } else if (src.is_confluent() && exact_target(m)) {
    auto k = kernel_vector(rows);
    if (!k) throw ProbeError("rank deficit without a kernel vector");
    r.verdict = ProbeVerdict::counterexample;
    r.witness = combination(elems, *k).str(src.order());
  } else {
    r.verdict = ProbeVerdict::inconclusive;
    r.notes.push_back(fmt::format("source {}, target {}", src.status_str(),
                                  m.into_matrices() ? std::string("matrices") : m.target->sys->status_str()));
  }
  return r;
}

std::vector<NcPoly> lie_monomials(const GenAlphabet& alpha, const ParamSet& ps, unsigned max_len) {
  std::vector<NcPoly> gens;
  for (const auto& n : alpha.names()) gens.push_back(NcPoly::gen(alpha, ps, n));
  std::vector<NcPoly> out, layer = gens;
  for (unsigned len = 1; len <= max_len; ++len) {
    out.insert(out.end(), layer.begin(), layer.end());
    if (len == max_len) break;
    std::vector<NcPoly> next;
    for (const auto& g : gens)
      for (const auto& x : layer) next.push_back(bracket(g, x));
    layer = std::move(next);
  }
  return out;
}

ProbeResult probe_lie_injectivity(const GenMap& m, unsigned max_len, const std::vector<std::string>& loop_vars) {
  require_verified(m);
  ProbeResult r;
  r.name = "injectivity on Lie monomials of " + m.label;
  r.degree = max_len;
  RewriteSystem src = complete(m.source.orient(), max_len);
  std::vector<NcPoly> monos = lie_monomials(src.alphabet(), src.params(), max_len);
  std::vector<SparseVec> src_rows, img_rows;
  ImageCoords coords(m, loop_vars);
  for (const auto& p : monos) {
    src_rows.push_back(flatten(src.normal_form(p)));
    img_rows.push_back(coords(p));
  }
  // n^len monomials of each length, in order.
  std::vector<std::size_t> ends(max_len + 1, 0);
  for (std::size_t d = 1, layer = 1; d <= max_len; ++d) {
    layer *= src.alphabet().size();
    ends[d] = ends[d - 1] + layer;
  }
  std::vector<std::size_t> src_ranks = cumulative_ranks(src_rows, ends);
  r.ranks = cumulative_ranks(img_rows, ends);
  r.counts = src_ranks;
  r.count = src_ranks.back();
  r.rank = r.ranks.back();
  if (r.rank == r.count) {
    r.verdict = ProbeVerdict::consistent;
    return r;
  }
  if (!src.is_confluent() || !exact_target(m)) {
    r.verdict = ProbeVerdict::inconclusive;
    r.notes.push_back(fmt::format("source {}", src.status_str()));
    return r;
  }
  // Independent source subset; its images carry the deficit.
  std::vector<SparseVec> chosen_src, chosen_img;
  std::vector<NcPoly> chosen;
  for (std::size_t i = 0; i < monos.size(); ++i) {
    chosen_src.push_back(src_rows[i]);
    if (rank_of(chosen_src) < chosen_src.size()) {
      chosen_src.pop_back();
      continue;
    }
    chosen.push_back(monos[i]);
    chosen_img.push_back(img_rows[i]);
  }
  auto k = kernel_vector(chosen_img);
  if (!k) throw ProbeError("rank deficit without a kernel vector");
  r.verdict = ProbeVerdict::counterexample;
  r.witness = src.normal_form(combination(chosen, *k)).str(src.order());
  return r;
}

ProbeResult probe_finite_dimension(const Presentation& pres, unsigned max_deg, std::size_t rule_cap) {
  ProbeResult r;
  r.name = "finite dimension of " + pres.name;
  r.degree = max_deg;
  CompletionOptions opts;
  opts.rule_cap = rule_cap;
  RewriteSystem sys = complete(pres.orient(), max_deg, opts);
  r.counts = count_by_degree(sys, max_deg);
  r.notes.push_back(sys.status_str());
  std::size_t total = 0;
  for (std::size_t c : r.counts) total += c;
  r.count = total;
  bool stops = false;
  for (unsigned d = 0; d < max_deg; ++d)
    if (r.counts[d] == 0) stops = true;
  if (sys.is_confluent() && stops) {
    r.verdict = ProbeVerdict::finite_dimension;
    for (const auto& w : normal_words(sys, max_deg)) r.basis.push_back(w.empty() ? "1" : w.str(sys.alphabet()));
    r.witness = fmt::format("dimension {}", total);
  } else {
    r.verdict = ProbeVerdict::inconclusive;
  }
  return r;
}

std::vector<DownUpCase> downup_cases() {
  return {DownUpCase::gamma_zero, DownUpCase::alpha_nonzero, DownUpCase::alpha_zero_beta_one,
          DownUpCase::alpha_zero_beta_generic};
}

const char* case_name(DownUpCase c) {
  switch (c) {
    case DownUpCase::gamma_zero:
      return "gamma-zero";
    case DownUpCase::alpha_nonzero:
      return "alpha-nonzero";
    case DownUpCase::alpha_zero_beta_one:
      return "alpha-zero-beta-one";
    case DownUpCase::alpha_zero_beta_generic:
      break;
  }
  return "alpha-zero-beta-generic";
}

DownUpCase parse_case(std::string_view name) {
  for (auto c : downup_cases())
    if (name == case_name(c)) return c;
  throw ProbeError(fmt::format("unknown case '{}'", name));
}

namespace {

void need(ProbeResult& r, bool ok, const std::string& what) {
  r.notes.push_back(fmt::format("{}: {}", what, ok ? "ok" : "FAILED"));
  if (!ok) r.verdict = ProbeVerdict::inconclusive;
}

GenMap identity_on_abc(std::string label, const Presentation& src, const Target& tgt) {
  return make_map(std::move(label), src, tgt, std::map<std::string, std::string>{{"A", "A"}, {"B", "B"}, {"C", "C"}});
}

// Growth and noncommutativity of a confluent Weyl-type target.
void weyl_growth(ProbeResult& r, const Target& tgt, unsigned max_deg) {
  const RewriteSystem& sys = *tgt.sys;
  r.counts = count_by_degree(sys, max_deg);
  bool growth = sys.is_confluent();
  for (unsigned n = 0; n <= max_deg; ++n) growth = growth && r.counts[n] == (n + 1) * (n + 2) / 2;
  need(r, growth, fmt::format("target confluent with counts C(n+2,2) to degree {}", max_deg));
  NcPoly ab = sys.normal_form(sys.gen("A") * sys.gen("B"));
  NcPoly ba = sys.normal_form(sys.gen("B") * sys.gen("A"));
  need(r, ab != ba, "AB and BA have different normal forms");
}

}  // namespace

ProbeResult probe_downup_case(DownUpCase c, unsigned max_deg) {
  ProbeResult r;
  r.name = fmt::format("infinite dimension, case {}", case_name(c));
  r.degree = max_deg;
  r.verdict = ProbeVerdict::consistent;
  switch (c) {
    case DownUpCase::gamma_zero: {
      ParamSet ps({"alpha", "beta"});
      Bindings b(ps);
      b.set("gamma", RatFunc(0));
      Presentation du = make("downup", b);
      Presentation z3 = make("z3downup", b);
      Target du_t = prepare_target(du, max_deg);
      Target z3_t = prepare_target(z3, max_deg);
      GenMap nat = make_map("downup to z3downup", du, z3_t, std::map<std::string, std::string>{{"A", "A"}, {"B", "B"}});
      GenMap back = make_map("z3downup to downup", z3, du_t,
                             std::map<std::string, std::string>{{"A", "A"}, {"B", "B"}, {"C", "0"}});
      need(r, check_hom(nat).ok(), "inclusion map verified");
      need(r, check_hom(back).ok(), "map with C to 0 verified");
      need(r, du_t.sys->is_confluent(), "downup system confluent");
      need(r, is_identity(compose(nat, back)).ok(), "composition is the identity");
      ProbeResult inj = probe_injectivity(nat, max_deg);
      r.counts = inj.counts;
      r.count = inj.count;
      r.rank = inj.rank;
      need(r, inj.consistent(), fmt::format("inclusion full rank to degree {}", max_deg));
      const RewriteSystem& sys = *du_t.sys;
      need(r, sys.normal_form(sys.gen("A") * sys.gen("B")) != sys.normal_form(sys.gen("B") * sys.gen("A")),
           "AB and BA have different normal forms");
      break;
    }
    case DownUpCase::alpha_nonzero: {
      ParamSet ps({"alpha", "beta", "gamma", "t"});
      Presentation z3 = make("z3downup", Bindings(ps));
      auto rep = downup_rep_3x3(ps);
      need(r, check_hom(make_matrix_map("3x3 representation", z3, rep)).ok(), "3x3 representation verified");
      std::vector<NcPoly> elems;
      NcPoly abc = z3.parse("A*B*C");
      for (unsigned n = 0; n <= max_deg; ++n) elems.push_back(abc.pow(n) * z3.gen("A"));
      ProbeResult ind = probe_matrix_independence("(ABC)^n A", rep, elems, {"t"});
      r.count = ind.count;
      r.rank = ind.rank;
      need(r, ind.consistent(), fmt::format("(ABC)^n A for n <= {} independent", max_deg));
      ProbeResult nc = probe_matrix_independence("AB, BA", rep, {z3.parse("A*B"), z3.parse("B*A")}, {"t"});
      need(r, nc.consistent(), "images of AB and BA independent");
      break;
    }
    case DownUpCase::alpha_zero_beta_one: {
      ParamSet ps({"gamma"});
      Bindings b(ps);
      b.set("alpha", RatFunc(0)).set("beta", RatFunc(1));
      Presentation z3 = make("z3downup", b);
      Bindings wb(ps);
      wb.set("theta", "-gamma/2");
      Target w = prepare_target(make("z3weyl", wb), max_deg);
      need(r, check_hom(identity_on_abc("z3downup(0,1,gamma) to z3weyl(-gamma/2)", z3, w)).ok(),
           "surjection onto z3weyl verified");
      weyl_growth(r, w, max_deg);
      break;
    }
    case DownUpCase::alpha_zero_beta_generic: {
      // q formal with beta = q^-2.
      ParamSet ps({"q", "gamma"});
      Bindings b(ps);
      b.set("alpha", RatFunc(0)).set("beta", "q^-2");
      Presentation z3 = make("z3downup", b);
      Bindings wb(ps);
      wb.set("theta", "-q^2*gamma/(q + 1)");
      Target w = prepare_target(make("z3qweyl", wb), max_deg);
      need(r, check_hom(identity_on_abc("z3downup(0,q^-2,gamma) to z3qweyl", z3, w)).ok(),
           "surjection onto z3qweyl verified");
      weyl_growth(r, w, max_deg);
      break;
    }
  }
  return r;
}

}  // namespace dulab
