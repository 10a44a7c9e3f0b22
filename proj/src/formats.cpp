#include "dulab/formats.hpp"

#include "dulab/parse.hpp"

#include <fmt/format.h>

#include <fstream>

namespace dulab {

namespace {

void check_version(const Json& j, const char* what) {
  if (!j.is_object()) throw FormatError(fmt::format("{} document must be a JSON object", what));
  if (auto it = j.find("format_version"); it != j.end() && *it != kFormatVersion)
    throw FormatError(fmt::format("unsupported {} format_version {}", what, it->dump()));
}

template <typename T>
T field(const Json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(fmt::format("{}: missing field '{}'", what, key));
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(fmt::format("{}: bad field '{}': {}", what, key, e.what()));
  }
}

template <typename T>
T field_or(const Json& j, const char* key, T fallback) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(fmt::format("bad field '{}': {}", key, e.what()));
  }
}

bool is_unit_relation(const Presentation& p, const NcPoly& r) {
  NcPoly one = p.scalar(RatFunc(1));
  for (auto [g, gi] : p.alphabet.inverse_pairs()) {
    NcPoly a = NcPoly::word(p.alphabet, p.params, Word{g});
    NcPoly ai = NcPoly::word(p.alphabet, p.params, Word{gi});
    if (r == a * ai - one || r == ai * a - one) return true;
  }
  return false;
}

}  // namespace

Json presentation_to_json(const Presentation& p) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["name"] = p.name;
  j["params"] = p.params.names();
  Json gens = Json::array();
  for (std::size_t g = 0; g < p.alphabet.size(); ++g) {
    Json e;
    e["name"] = p.alphabet.name(Gen(g));
    for (auto [a, ai] : p.alphabet.inverse_pairs())
      if (ai == g) e["inverse_of"] = p.alphabet.name(a);
    gens.push_back(e);
  }
  j["generators"] = gens;
  std::vector<std::string> order;
  for (Gen g : p.order.precedence()) order.push_back(p.alphabet.name(g));
  j["order"] = order;
  if (!p.order.unit_weights()) {
    Json w = Json::object();
    for (std::size_t g = 0; g < p.alphabet.size(); ++g) w[p.alphabet.name(Gen(g))] = p.order.weights()[g];
    j["weights"] = w;
  }
  Json rels = Json::array();
  for (const auto& r : p.relations)
    if (!is_unit_relation(p, r)) rels.push_back(r.str(p.order));
  j["relations"] = rels;
  return j;
}

Presentation presentation_from_json(const Json& j) {
  check_version(j, "presentation");
  return presentation_from_json(j, Bindings::symbolic(field_or<std::vector<std::string>>(j, "params", {})));
}

Presentation presentation_from_json(const Json& j, const Bindings& b) {
  check_version(j, "presentation");
  const char* what = "presentation";
  Presentation p;
  p.name = field_or<std::string>(j, "name", "custom");
  auto formal = field_or<std::vector<std::string>>(j, "params", {});

  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> inverses;
  for (const auto& g : field<Json>(j, "generators", what)) {
    if (g.is_string()) {
      names.push_back(g.get<std::string>());
      continue;
    }
    names.push_back(field<std::string>(g, "name", "generator"));
    if (auto it = g.find("inverse_of"); it != g.end()) inverses.emplace_back(it->get<std::string>(), names.back());
  }
  try {
    p.alphabet = GenAlphabet(names, inverses);
    p.order = MonomialOrder::from_names(p.alphabet, field_or<std::vector<std::string>>(j, "order", {}),
                                        field_or<std::map<std::string, unsigned>>(j, "weights", {}));
  } catch (const AlgebraError& e) {
    throw FormatError(fmt::format("presentation {}: {}", p.name, e.what()));
  }
  p.params = b.params();
  for (const auto& f : formal)
    if (!b.has(f)) throw FormatError(fmt::format("missing binding for parameter '{}' of {}", f, p.name));

  ScalarResolver scalars = [&](std::string_view id) -> std::optional<RatFunc> {
    if (std::find(formal.begin(), formal.end(), id) != formal.end()) return b.get(id);
    return std::nullopt;
  };
  for (const auto& text : field<std::vector<std::string>>(j, "relations", what)) {
    NcPoly r = parse_poly(text, p.alphabet, p.params, scalars);
    if (!r.is_zero()) p.relations.push_back(std::move(r));
  }
  for (auto [g, gi] : p.alphabet.inverse_pairs()) {
    NcPoly one = p.scalar(RatFunc(1));
    NcPoly a = NcPoly::word(p.alphabet, p.params, Word{g});
    NcPoly ai = NcPoly::word(p.alphabet, p.params, Word{gi});
    p.relations.push_back(a * ai - one);
    p.relations.push_back(ai * a - one);
  }
  return p;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

namespace {

PresentationRef ref_from_json(const Json& j) {
  PresentationRef r;
  if (j.is_string()) {
    r.catalog = j.get<std::string>();
    return r;
  }
  r.catalog = field_or<std::string>(j, "catalog", "");
  r.file = field_or<std::string>(j, "file", "");
  if (auto it = j.find("presentation"); it != j.end()) r.inline_doc = *it;
  r.dictionary = field_or<std::string>(j, "dictionary", "");
  r.bindings = field_or<std::map<std::string, std::string>>(j, "bindings", {});
  int n = !r.catalog.empty() + !r.file.empty() + !r.inline_doc.is_null();
  if (n != 1) throw FormatError("presentation reference needs exactly one of catalog, file, presentation");
  return r;
}

Json ref_to_json(const PresentationRef& r) {
  Json j;
  if (!r.catalog.empty()) j["catalog"] = r.catalog;
  if (!r.file.empty()) j["file"] = r.file;
  if (!r.inline_doc.is_null()) j["presentation"] = r.inline_doc;
  if (!r.dictionary.empty()) j["dictionary"] = r.dictionary;
  if (!r.bindings.empty()) j["bindings"] = r.bindings;
  return j;
}

}  // namespace

CheckSpec check_spec_from_json(const Json& j) {
  check_version(j, "check-spec");
  CheckSpec s;
  s.label = field_or<std::string>(j, "label", "check");
  s.params = field_or<std::vector<std::string>>(j, "params", {});
  s.source = ref_from_json(field<Json>(j, "source", "check-spec"));
  if (auto it = j.find("target"); it != j.end() && !it->is_null()) s.target = ref_from_json(*it);
  s.images = field_or<std::map<std::string, std::string>>(j, "images", {});
  s.matrices = field_or<std::map<std::string, std::vector<std::vector<std::string>>>>(j, "matrices", {});
  std::string dir = field_or<std::string>(j, "direction", "homomorphism");
  if (dir == "homomorphism")
    s.direction = Direction::homomorphism;
  else if (dir == "antihomomorphism")
    s.direction = Direction::antihomomorphism;
  else
    throw FormatError("direction must be homomorphism or antihomomorphism");
  if (auto it = j.find("completion_degree"); it != j.end() && !it->is_null()) s.completion_degree = it->get<unsigned>();
  if (s.target.has_value() == !s.matrices.empty())
    throw FormatError("check-spec needs either a target with images or matrices");
  return s;
}

Json check_spec_to_json(const CheckSpec& s) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["label"] = s.label;
  j["params"] = s.params;
  j["source"] = ref_to_json(s.source);
  if (s.target) {
    j["target"] = ref_to_json(*s.target);
    j["images"] = s.images;
  } else {
    j["matrices"] = s.matrices;
  }
  j["direction"] = direction_name(s.direction);
  if (s.completion_degree) j["completion_degree"] = *s.completion_degree;
  return j;
}

Presentation resolve(const PresentationRef& ref, const ParamSet& ps, const std::filesystem::path& base) {
  Bindings b(ps);
  if (!ref.dictionary.empty()) b = downup_bindings(ref.dictionary, b);
  for (const auto& [k, v] : ref.bindings) b.set(k, v);
  if (!ref.catalog.empty()) return make(ref.catalog, b);
  if (!ref.file.empty()) {
    std::filesystem::path p = ref.file;
    if (p.is_relative() && !base.empty()) p = base / p;
    return presentation_from_json(read_json_file(p), b);
  }
  return presentation_from_json(ref.inline_doc, b);
}

GenMap build_map(const CheckSpec& s, const std::filesystem::path& base, std::size_t rule_cap) {
  ParamSet ps(s.params);
  Presentation src = resolve(s.source, ps, base);
  if (!s.target) {
    std::vector<Matrix> mats;
    for (const auto& g : src.alphabet.names()) {
      auto it = s.matrices.find(g);
      if (it == s.matrices.end()) throw FormatError("no matrix for generator " + g);
      mats.push_back(Matrix::parse(it->second, ps));
    }
    return make_matrix_map(s.label, src, mats, s.direction);
  }
  Presentation tp = resolve(*s.target, ps, base);
  std::map<std::string, NcPoly> images;
  std::vector<NcPoly> list;
  for (const auto& [g, text] : s.images) {
    NcPoly v = text.starts_with("@") ? derived_element(text.substr(1), tp) : tp.parse(text);
    list.push_back(v);
    images.emplace(g, std::move(v));
  }
  unsigned deg = s.completion_degree ? *s.completion_degree : default_completion_degree(src, list);
  return make_map(s.label, src, prepare_target(tp, deg, rule_cap), images, s.direction);
}

Json report_to_json(const CheckReport& r) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["tag"] = r.tag;
  j["verdict"] = outcome_name(r.verdict());
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json x;
    x["label"] = e.label;
    x["outcome"] = outcome_name(e.outcome);
    if (!e.detail.empty()) x["detail"] = e.detail;
    entries.push_back(x);
  }
  j["entries"] = entries;
  return j;
}

Json probe_to_json(const ProbeResult& r) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["name"] = r.name;
  j["verdict"] = verdict_name(r.verdict);
  j["degree"] = r.degree;
  j["counts"] = r.counts;
  j["ranks"] = r.ranks;
  j["count"] = r.count;
  j["rank"] = r.rank;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.basis.empty()) j["basis"] = r.basis;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

std::string report_text(const CheckReport& r) {
  std::string s = fmt::format("{}: {}\n", r.tag, outcome_name(r.verdict()));
  for (const auto& e : r.entries) {
    s += fmt::format("  [{}] {}", outcome_name(e.outcome), e.label);
    if (!e.detail.empty()) s += "  (" + e.detail + ")";
    s += "\n";
  }
  return s;
}

std::string probe_text(const ProbeResult& r) {
  auto join = [](const std::vector<std::size_t>& v) { return fmt::format("{}", fmt::join(v, ",")); };
  std::string s = r.summary() + "\n";
  if (!r.counts.empty()) s += "  counts " + join(r.counts) + "\n";
  if (!r.ranks.empty()) s += "  ranks  " + join(r.ranks) + "\n";
  if (!r.witness.empty()) s += "  witness " + r.witness + "\n";
  if (!r.basis.empty()) s += fmt::format("  basis {}\n", fmt::join(r.basis, ", "));
  for (const auto& n : r.notes) s += "  " + n + "\n";
  return s;
}

}  // namespace dulab
