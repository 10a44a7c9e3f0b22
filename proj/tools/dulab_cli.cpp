// dulab: command-line front end.
//
// Exit status: 0 on success, 1 when a check is refuted or a probe finds a
// counterexample, 2 on bad input.
#include "dulab/claims.hpp"
#include "dulab/parse.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <iostream>

using namespace dulab;

namespace {

struct Options {
  std::vector<std::string> binds;
  std::string order;
  std::string format = "text";
  unsigned max_deg = 6;
  unsigned jobs = 1;
};

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// --bind p=value: value is a rational (p/q). Unbound parameters stay symbolic.
Bindings bindings_for(const std::vector<std::string>& formal, const Options& o) {
  std::map<std::string, Rational> values;
  for (const auto& b : o.binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos) throw InputError("--bind expects name=value, got '" + b + "'");
    std::string name = b.substr(0, eq);
    if (std::find(formal.begin(), formal.end(), name) == formal.end())
      throw InputError("unknown parameter '" + name + "'");
    RatFunc v = parse_scalar(b.substr(eq + 1), ParamSet{});
    if (!v.is_constant()) throw InputError("binding for '" + name + "' is not a rational");
    values[name] = v.constant_value();
  }
  std::vector<std::string> free;
  for (const auto& f : formal)
    if (!values.count(f)) free.push_back(f);
  Bindings b{ParamSet(free)};
  for (const auto& [k, v] : values) b.set(k, RatFunc(v));
  return b;
}

bool looks_like_file(const std::string& s) {
  return s.ends_with(".json") || s.find('/') != std::string::npos || std::filesystem::exists(s);
}

Presentation load(const std::string& ref, const Options& o) {
  Presentation p;
  if (looks_like_file(ref)) {
    Json j = read_json_file(ref);
    std::vector<std::string> formal;
    if (auto it = j.find("params"); it != j.end()) formal = it->get<std::vector<std::string>>();
    p = presentation_from_json(j, bindings_for(formal, o));
  } else {
    const CatalogEntry* entry = nullptr;
    for (const auto& e : catalog_entries())
      if (e.name == ref) entry = &e;
    if (!entry) throw InputError("no catalog presentation named '" + ref + "' (see present --list)");
    p = make(ref, bindings_for(entry->params, o));
  }
  if (!o.order.empty()) {
    std::map<std::string, unsigned> weights;
    for (std::size_t g = 0; g < p.alphabet.size(); ++g) weights[p.alphabet.name(Gen(g))] = p.order.weights()[g];
    p.order = MonomialOrder::from_names(p.alphabet, split(o.order, ','), weights);
  }
  return p;
}

// Oriented system, completed up to max_deg when orientation alone is not
// confluent.
RewriteSystem system_for(const Presentation& p, unsigned max_deg) {
  RewriteSystem sys = p.orient();
  check_confluence(sys);
  if (!sys.is_confluent()) sys = complete(sys, max_deg);
  return sys;
}

Json system_json(const RewriteSystem& sys) {
  Json j;
  j["status"] = sys.status_str();
  j["rules"] = sys.rules().size();
  return j;
}

std::string word_text(const Word& w, const GenAlphabet& a) { return w.empty() ? "1" : w.str(a); }

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json")
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

// ---- subcommands -----------------------------------------------------------

int cmd_present_list(const Options& o) {
  Json list = Json::array();
  std::string text;
  for (const auto& e : catalog_entries()) {
    Json x;
    x["name"] = e.name;
    x["params"] = e.params;
    x["description"] = e.description;
    list.push_back(x);
    text += fmt::format("{:<22} ({:<24}) {}\n", e.name, fmt::format("{}", fmt::join(e.params, ", ")), e.description);
  }
  emit(o, list, text);
  return 0;
}

int cmd_present_show(const std::string& ref, const Options& o) {
  Presentation p = load(ref, o);
  Json j = presentation_to_json(p);
  std::string text = fmt::format("{}  params: {}\ngenerators: {}\n", p.name, fmt::join(p.params.names(), ", "),
                                 fmt::join(p.alphabet.names(), ", "));
  for (const auto& r : p.relations) text += "  " + r.str(p.order) + "\n";
  emit(o, j, text);
  return 0;
}

int cmd_nf(const std::string& ref, const std::string& expr, const Options& o) {
  Presentation p = load(ref, o);
  RewriteSystem sys = system_for(p, o.max_deg);
  NcPoly nf = sys.normal_form(p.parse(expr));
  Json j = system_json(sys);
  j["input"] = expr;
  j["normal_form"] = nf.str(sys.order());
  emit(o, j, fmt::format("{}\n[{}]\n", nf.str(sys.order()), sys.status_str()));
  return 0;
}

int cmd_complete(const std::string& ref, const Options& o) {
  Presentation p = load(ref, o);
  RewriteSystem sys = system_for(p, o.max_deg);
  Json j = system_json(sys);
  Json rules = Json::array();
  std::string text;
  for (const auto& r : sys.rules()) {
    rules.push_back(render_rule(sys, r));
    text += render_rule(sys, r) + "\n";
  }
  j["rule_list"] = rules;
  text += fmt::format("{} rules [{}]\n", sys.rules().size(), sys.status_str());
  emit(o, j, text);
  return 0;
}

int cmd_basis(const std::string& ref, const Options& o) {
  Presentation p = load(ref, o);
  RewriteSystem sys = system_for(p, o.max_deg);
  Json words = Json::array();
  std::string text;
  for (const auto& w : normal_words(sys, o.max_deg)) {
    words.push_back(word_text(w, p.alphabet));
    text += word_text(w, p.alphabet) + "\n";
  }
  Json j = system_json(sys);
  j["max_deg"] = o.max_deg;
  j["words"] = words;
  text += fmt::format("[{}]\n", sys.status_str());
  emit(o, j, text);
  return 0;
}

int cmd_hilbert(const std::string& ref, const Options& o) {
  Presentation p = load(ref, o);
  RewriteSystem sys = system_for(p, o.max_deg);
  auto counts = count_by_degree(sys, o.max_deg);
  Json j = system_json(sys);
  j["counts"] = counts;
  emit(o, j, fmt::format("{}\n[{}]\n", fmt::join(counts, " "), sys.status_str()));
  return 0;
}

CheckSpec load_spec(const std::string& path) { return check_spec_from_json(read_json_file(path)); }

std::filesystem::path base_of(const std::string& path) { return std::filesystem::path(path).parent_path(); }

int cmd_homcheck(const std::string& path, const Options& o) {
  CheckSpec s = load_spec(path);
  CheckReport r = check_hom(build_map(s, base_of(path)), o.jobs);
  emit(o, report_to_json(r), report_text(r));
  return r.verdict() == Outcome::refuted ? 1 : 0;
}

int probe_exit(const ProbeResult& r) { return r.verdict == ProbeVerdict::counterexample ? 1 : 0; }

int cmd_probe_cases(const Options& o) {
  Json list = Json::array();
  std::string text;
  int rc = 0;
  for (auto c : downup_cases()) {
    ProbeResult r = probe_downup_case(c, o.max_deg);
    list.push_back(probe_to_json(r));
    text += probe_text(r);
    rc = std::max(rc, probe_exit(r));
  }
  emit(o, list, text);
  return rc;
}

int cmd_probe_injectivity(const std::string& path, bool lie, const std::vector<std::string>& loop_vars,
                          const Options& o) {
  GenMap m = build_map(load_spec(path), base_of(path));
  ProbeResult r = lie ? probe_lie_injectivity(m, o.max_deg, loop_vars) : probe_injectivity(m, o.max_deg, loop_vars);
  emit(o, probe_to_json(r), probe_text(r));
  return probe_exit(r);
}

int cmd_probe_finite(const std::string& ref, const Options& o) {
  ProbeResult r = probe_finite_dimension(load(ref, o), o.max_deg);
  emit(o, probe_to_json(r), probe_text(r));
  return probe_exit(r);
}

int cmd_verify(const std::vector<std::string>& topics, bool list_topics, const Options& o) {
  if (list_topics) {
    Json list = Json::array();
    std::string text;
    for (const auto& t : claim_topics()) {
      list.push_back({{"name", t.name}, {"description", t.description}});
      text += fmt::format("{:<15} {}\n", t.name, t.description);
    }
    emit(o, list, text);
    return 0;
  }
  auto results = verify_claims(topics, o.jobs);
  emit(o, claims_to_json(results), claims_text(results));
  for (const auto& r : results)
    if (r.failed()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rewriting and homomorphism checks for Z3-symmetric down-up algebras", "dulab"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--bind", o.binds, "Bind a parameter to a rational, name=p/q (repeatable)");
  app.add_option("--order", o.order, "Generator precedence, comma separated, lowest first");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-deg", o.max_deg, "Degree bound for completion, enumeration and probes");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::function<int()> run;

  auto* present = app.add_subcommand("present", "List, show or load presentations");
  present->fallthrough();
  bool list = false;
  present->add_flag("--list", list, "List the catalog");
  std::string show_name, load_file;
  auto* show = present->add_subcommand("show", "Show a catalog presentation");
  show->add_option("name", show_name)->required();
  auto* loadc = present->add_subcommand("load", "Load and validate a presentation file");
  loadc->add_option("file", load_file)->required()->check(CLI::ExistingFile);
  show->fallthrough();
  loadc->fallthrough();
  present->callback([&] {
    if (list)
      run = [&] { return cmd_present_list(o); };
    else if (!show_name.empty())
      run = [&] { return cmd_present_show(show_name, o); };
    else if (!load_file.empty())
      run = [&] { return cmd_present_show(load_file, o); };
    else
      throw CLI::ValidationError("present", "use --list, show NAME or load FILE");
  });

  std::string pres, expr;
  auto* nf = app.add_subcommand("nf", "Normal form of an expression");
  nf->add_option("presentation", pres, "Catalog name or JSON file")->required();
  nf->add_option("expr", expr)->required();
  nf->callback([&] { run = [&] { return cmd_nf(pres, expr, o); }; });

  auto* comp = app.add_subcommand("complete", "Orient and complete up to --max-deg; print the rules");
  comp->add_option("presentation", pres)->required();
  comp->callback([&] { run = [&] { return cmd_complete(pres, o); }; });

  auto* basis = app.add_subcommand("basis", "Normal words up to --max-deg");
  basis->add_option("presentation", pres)->required();
  basis->callback([&] { run = [&] { return cmd_basis(pres, o); }; });

  auto* hilbert = app.add_subcommand("hilbert", "Normal-word counts by degree up to --max-deg");
  hilbert->add_option("presentation", pres)->required();
  hilbert->callback([&] { run = [&] { return cmd_hilbert(pres, o); }; });

  std::string spec;
  auto* homcheck = app.add_subcommand("homcheck", "Check a generator assignment from a check-spec file");
  homcheck->add_option("spec", spec)->required()->check(CLI::ExistingFile);
  homcheck->callback([&] { run = [&] { return cmd_homcheck(spec, o); }; });

  auto* probe = app.add_subcommand("probe", "Evidence probes");
  probe->require_subcommand(1);
  probe->fallthrough();
  auto* cases = probe->add_subcommand("cases", "The four infinite-dimension cases");
  cases->fallthrough();
  cases->callback([&] { run = [&] { return cmd_probe_cases(o); }; });
  bool lie = false;
  std::vector<std::string> loop_vars;
  auto* inj = probe->add_subcommand("injectivity", "Truncated injectivity of a check-spec map");
  inj->fallthrough();
  inj->add_option("spec", spec)->required()->check(CLI::ExistingFile);
  inj->add_flag("--lie", lie, "Probe on Lie monomials instead of all words");
  inj->add_option("--loop-var", loop_vars, "Expand matrix entries as Laurent polynomials in this parameter");
  inj->callback([&] { run = [&] { return cmd_probe_injectivity(spec, lie, loop_vars, o); }; });
  auto* fin = probe->add_subcommand("finite-dim", "Complete and certify finite dimension");
  fin->fallthrough();
  fin->add_option("presentation", pres)->required();
  fin->callback([&] { run = [&] { return cmd_probe_finite(pres, o); }; });

  std::vector<std::string> topics;
  bool list_topics = false;
  auto* verify = app.add_subcommand("verify-paper", "Run the claim suite");
  verify->add_option("--topic", topics, "Restrict to a topic (repeatable)");
  verify->add_flag("--list-topics", list_topics, "List topics");
  verify->callback([&] { run = [&] { return cmd_verify(topics, list_topics, o); }; });

  for (auto* sub : {nf, comp, basis, hilbert, homcheck, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  try {
    return run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
