#include "dulab/catalog.hpp"

#include "dulab/parse.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>

namespace dulab {

NcPoly Presentation::parse(std::string_view text) const { return parse_poly(text, alphabet, params); }

RewriteSystem Presentation::orient(const OrientOptions& opts) const {
  return dulab::orient(alphabet, params, relations, order, opts);
}

Bindings& Bindings::set(const std::string& name, const RatFunc& value) {
  values_[name] = value.lifted(ps_);
  return *this;
}

Bindings& Bindings::set(const std::string& name, std::string_view expr) {
  return set(name, parse_scalar(expr, ps_));
}

bool Bindings::has(std::string_view name) const { return values_.count(name) || ps_.contains(name); }

RatFunc Bindings::get(std::string_view name) const {
  if (auto it = values_.find(name); it != values_.end()) return it->second;
  if (ps_.contains(name)) return RatFunc::param(ps_, name);
  throw CatalogError(fmt::format("missing binding for parameter '{}'", name));
}

CartanMatrix cartan_a21() { return {{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}}; }

RatFunc vartheta(long j, const ParamSet& ps) {
  if (!ps.contains("q")) throw CatalogError("vartheta needs parameter q");
  RatFunc q = RatFunc::param(ps, "q");
  RatFunc one(ps, Rational(1));
  return q.pow(-2 * j - 1) * (one + q.pow(2 * j + 1)).pow(2) / (q - q.inv());
}

namespace {

struct Spec {
  std::vector<std::string> gens;
  std::vector<std::pair<std::string, std::string>> inverses;
  std::vector<std::string> precedence;  // empty: declaration order
  std::map<std::string, unsigned> weights;
  std::vector<std::string> relations;
  // Values substituted for identifiers before the caller's bindings.
  std::map<std::string, std::string> fixed;
};

// The two down-up relations for the ordered pair (x, y).
void downup_pair(std::vector<std::string>& out, const std::string& x, const std::string& y) {
  out.push_back(fmt::format("{1}*{0}^2 - alpha*{0}*{1}*{0} - beta*{0}^2*{1} - gamma*{0}", x, y));
  out.push_back(fmt::format("{1}^2*{0} - alpha*{1}*{0}*{1} - beta*{0}*{1}^2 - gamma*{1}", x, y));
}

Spec z3downup_spec() {
  Spec s;
  s.gens = {"A", "B", "C"};
  downup_pair(s.relations, "A", "B");
  downup_pair(s.relations, "B", "C");
  downup_pair(s.relations, "C", "A");
  return s;
}

const std::array<std::pair<const char*, const char*>, 3> kCyclic = {{{"A", "B"}, {"B", "C"}, {"C", "A"}}};

Spec cyclic_spec(const std::string& pattern) {
  Spec s;
  s.gens = {"A", "B", "C"};
  for (auto [x, y] : kCyclic) s.relations.push_back(fmt::format(fmt::runtime(pattern), x, y));
  return s;
}

Spec bip_spec(bool t_is_one) {
  Spec s;
  s.gens = {"A", "B", "C"};
  const std::array<const char*, 3> rho = {"rho0", "rho0p", "rho0pp"};
  for (std::size_t k = 0; k < 3; ++k) {
    auto [x, y] = kCyclic[k];
    s.relations.push_back(fmt::format("{0}^3*{1} + {0}^2*{1}*{0} - t*{0}*{1}*{0}^2 - t*{1}*{0}^3 - ({2} + t/{2})*{0}^2",
                                      x, y, rho[k]));
  }
  for (std::size_t k = 0; k < 3; ++k) {
    auto [x, y] = kCyclic[k];
    s.relations.push_back(fmt::format("{0}*{1}^3 + {1}*{0}*{1}^2 - t*{1}^2*{0}*{1} - t*{1}^3*{0} - ({2} + t/{2})*{1}^2",
                                      x, y, rho[k]));
  }
  if (t_is_one) s.fixed["t"] = "1";
  return s;
}

Spec kacmoody_spec() {
  Spec s;
  for (const char* p : {"e", "f", "h"})
    for (int i = 1; i <= 3; ++i) s.gens.push_back(fmt::format("{}{}", p, i));
  for (const char* p : {"f", "h", "e"})
    for (int i = 1; i <= 3; ++i) s.precedence.push_back(fmt::format("{}{}", p, i));
  auto c = cartan_a21();
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) s.relations.push_back(fmt::format("[h{},h{}]", i, j));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) s.relations.push_back(fmt::format("[h{0},e{1}] - ({2})*e{1}", i, j, c[i - 1][j - 1]));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) s.relations.push_back(fmt::format("[h{0},f{1}] + ({2})*f{1}", i, j, c[i - 1][j - 1]));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      s.relations.push_back(i == j ? fmt::format("[e{0},f{0}] - h{0}", i) : fmt::format("[e{},f{}]", i, j));
  for (const char* p : {"e", "f"})
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (i != j) s.relations.push_back(fmt::format("[{0}{1},[{0}{1},{0}{2}]]", p, i, j));
  return s;
}

Spec uq_a21_spec() {
  Spec s;
  for (const char* p : {"E", "F", "K"})
    for (int i = 1; i <= 3; ++i) s.gens.push_back(fmt::format("{}{}", p, i));
  for (int i = 1; i <= 3; ++i) s.gens.push_back(fmt::format("K{}inv", i));
  for (int i = 1; i <= 3; ++i) s.inverses.emplace_back(fmt::format("K{}", i), fmt::format("K{}inv", i));
  for (int i = 1; i <= 3; ++i) s.precedence.push_back(fmt::format("F{}", i));
  for (int i = 1; i <= 3; ++i) {
    s.precedence.push_back(fmt::format("K{}", i));
    s.precedence.push_back(fmt::format("K{}inv", i));
  }
  for (int i = 1; i <= 3; ++i) s.precedence.push_back(fmt::format("E{}", i));
  auto c = cartan_a21();
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) s.relations.push_back(fmt::format("K{0}*K{1} - K{1}*K{0}", i, j));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      s.relations.push_back(fmt::format("K{0}*E{1}*K{0}inv - q^{2}*E{1}", i, j, c[i - 1][j - 1]));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      s.relations.push_back(fmt::format("K{0}*F{1}*K{0}inv - q^{2}*F{1}", i, j, -c[i - 1][j - 1]));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      s.relations.push_back(i == j ? fmt::format("(q - q^-1)*(E{0}*F{0} - F{0}*E{0}) - (K{0} - K{0}inv)", i)
                                   : fmt::format("E{0}*F{1} - F{1}*E{0}", i, j));
  for (const char* p : {"E", "F"})
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (i != j)
          s.relations.push_back(fmt::format("{0}{1}^2*{0}{2} - (q + q^-1)*{0}{1}*{0}{2}*{0}{1} + {0}{2}*{0}{1}^2", p, i, j));
  return s;
}

struct Entry {
  CatalogEntry info;
  std::function<Spec()> build;
};

std::map<std::string, std::string> downup_fixed(const char* a, const char* b, const char* g) {
  return {{"alpha", a}, {"beta", b}, {"gamma", g}};
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> list = [] {
    std::vector<Entry> v;
    v.push_back({{"downup", {"alpha", "beta", "gamma"}, "down-up algebra on A, B"}, [] {
                   Spec s;
                   s.gens = {"A", "B"};
                   downup_pair(s.relations, "A", "B");
                   return s;
                 }});
    v.push_back({{"z3downup", {"alpha", "beta", "gamma"}, "Z3-symmetric down-up algebra on A, B, C"}, z3downup_spec});
    v.push_back({{"s_gamma", {"gamma"}, "one generator D with D^3 = gamma*D"}, [] {
                   Spec s;
                   s.gens = {"D"};
                   s.relations = {"D^3 - gamma*D"};
                   return s;
                 }});
    v.push_back({{"weyl", {"theta"}, "Weyl algebra AB - BA = theta"}, [] {
                   Spec s;
                   s.gens = {"A", "B"};
                   s.relations = {"A*B - B*A - theta"};
                   return s;
                 }});
    v.push_back({{"z3weyl", {"theta"}, "Z3-symmetric Weyl algebra"}, [] { return cyclic_spec("{0}*{1} - {1}*{0} - theta"); }});
    v.push_back({{"qweyl", {"q", "theta"}, "q-Weyl algebra AB - qBA = theta"}, [] {
                   Spec s;
                   s.gens = {"A", "B"};
                   s.relations = {"A*B - q*B*A - theta"};
                   return s;
                 }});
    v.push_back({{"z3qweyl", {"q", "theta"}, "Z3-symmetric q-Weyl algebra"},
                 [] { return cyclic_spec("{0}*{1} - q*{1}*{0} - theta"); }});
    v.push_back({{"reduced", {"theta"}, "reduced Z3-symmetric down-up algebra"}, [] {
                   Spec s;
                   s.gens = {"A", "B", "C"};
                   s.relations = {"A^2",           "B^2",           "C^2",
                                  "A*B*A - theta*A", "B*C*B - theta*B", "C*A*C - theta*C",
                                  "B*A*B - theta*B", "C*B*C - theta*C", "A*C*A - theta*A"};
                   return s;
                 }});
    v.push_back({{"lie_L", {"gamma"}, "enveloping algebra of the Z3-symmetric down-up Lie algebra"}, [] {
                   Spec s;
                   s.gens = {"A", "B", "C"};
                   s.relations = {"[A,[A,B]] - gamma*A", "[B,[B,A]] - gamma*B", "[B,[B,C]] - gamma*B",
                                  "[C,[C,B]] - gamma*C", "[C,[C,A]] - gamma*C", "[A,[A,C]] - gamma*A"};
                   return s;
                 }});
    v.push_back({{"kacmoody_a21", {}, "enveloping algebra of the affine Kac-Moody algebra A2(1)"}, kacmoody_spec});
    v.push_back({{"km_serre_e", {}, "enveloping algebra of the positive part of A2(1)"}, [] {
                   Spec s;
                   s.gens = {"e1", "e2", "e3"};
                   for (int i = 1; i <= 3; ++i)
                     for (int j = 1; j <= 3; ++j)
                       if (i != j) s.relations.push_back(fmt::format("[e{0},[e{0},e{1}]]", i, j));
                   return s;
                 }});
    v.push_back({{"uq_sl2_equitable", {"q"}, "U_q(sl2), equitable presentation"}, [] {
                   Spec s;
                   s.gens = {"x", "y", "yinv", "z"};
                   s.inverses = {{"y", "yinv"}};
                   s.weights = {{"x", 2}, {"y", 1}, {"yinv", 1}, {"z", 2}};
                   s.relations = {"q*x*y - q^-1*y*x - (q - q^-1)", "q*y*z - q^-1*z*y - (q - q^-1)",
                                  "q*z*x - q^-1*x*z - (q - q^-1)"};
                   return s;
                 }});
    v.push_back({{"uq_a21", {"q"}, "U_q(A2(1)), fraction relation cleared"}, uq_a21_spec});
    v.push_back({{"uq_serre_e", {"q"}, "positive part of U_q(A2(1))"}, [] {
                   Spec s;
                   s.gens = {"E1", "E2", "E3"};
                   for (int i = 1; i <= 3; ++i)
                     for (int j = 1; j <= 3; ++j)
                       if (i != j)
                         s.relations.push_back(fmt::format("E{0}^2*E{1} - (q + q^-1)*E{0}*E{1}*E{0} + E{1}*E{0}^2", i, j));
                   return s;
                 }});
    const char* nbweyl = "q*{0}*{1} - q^-1*{1}*{0} - vartheta";
    v.push_back({{"nbweyl_plus", {"q", "vartheta"}, "LR triples NBWeyl+ (vartheta formal)"}, [=] { return cyclic_spec(nbweyl); }});
    v.push_back({{"nbweyl_minus", {"q", "vartheta"}, "LR triples NBWeyl- (vartheta formal)"}, [=] { return cyclic_spec(nbweyl); }});
    v.push_back({{"nbweyl_minus_t", {"t"}, "LR triples NBWeyl-(t)"},
                 [] { return cyclic_spec("{0}*{1} - t*{1}*{0} - 2*t/(1 - t)"); }});
    v.push_back({{"nbg", {"q"}, "LR triples NBG(q)"}, [] {
                   Spec s = z3downup_spec();
                   s.fixed = downup_fixed("q^-2*(q + 1)", "-q^-3", "q^-2*(q + 1)");
                   return s;
                 }});
    v.push_back({{"nbg1", {}, "LR triples NBG(1)"}, [] {
                   Spec s = z3downup_spec();
                   s.fixed = downup_fixed("2", "-1", "2");
                   return s;
                 }});
    v.push_back({{"nbng", {"t"}, "LR triples NBNG(t)"}, [] {
                   Spec s = z3downup_spec();
                   s.fixed = downup_fixed("0", "t^-1", "t^-1 - 1");
                   return s;
                 }});
    v.push_back({{"bip_t", {"t", "rho0", "rho0p", "rho0pp"}, "bipartite LR triples B(t)"}, [] { return bip_spec(false); }});
    v.push_back({{"bip_1", {"rho0", "rho0p", "rho0pp"}, "bipartite LR triples B(1)"}, [] { return bip_spec(true); }});
    // Same relations as bip_1; diameter 2 only restricts representations.
    v.push_back({{"bip_2", {"rho0", "rho0p", "rho0pp"}, "bipartite LR triples of diameter 2"}, [] { return bip_spec(true); }});
    return v;
  }();
  return list;
}

const Entry& find_entry(std::string_view name) {
  for (const auto& e : entries())
    if (e.info.name == name) return e;
  throw CatalogError(fmt::format("unknown presentation '{}'", name));
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> list = [] {
    std::vector<CatalogEntry> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return list;
}

Presentation make(std::string_view name, const Bindings& b) {
  const Entry& e = find_entry(name);
  Spec s = e.build();
  for (const auto& p : e.info.params)
    if (!b.has(p)) throw CatalogError(fmt::format("missing binding for parameter '{}' of {}", p, name));

  Presentation pres;
  pres.name = std::string(name);
  pres.alphabet = GenAlphabet(s.gens, s.inverses);
  pres.params = b.params();
  pres.order = MonomialOrder::from_names(pres.alphabet, s.precedence, s.weights);

  // Fixed values are expressions in the formal parameters.
  std::map<std::string, RatFunc> fixed;
  ScalarResolver formal = [&](std::string_view id) -> std::optional<RatFunc> {
    if (std::find(e.info.params.begin(), e.info.params.end(), id) != e.info.params.end()) return b.get(id);
    return std::nullopt;
  };
  for (const auto& [k, expr] : s.fixed) {
    NcPoly v = parse_poly(expr, GenAlphabet(), pres.params, formal);
    fixed[k] = v.is_zero() ? RatFunc(pres.params, Rational(0)) : v.coeff(Word{});
  }
  ScalarResolver scalars = [&](std::string_view id) -> std::optional<RatFunc> {
    if (auto it = fixed.find(std::string(id)); it != fixed.end()) return it->second;
    return formal(id);
  };
  for (const auto& r : s.relations) {
    NcPoly p = parse_poly(r, pres.alphabet, pres.params, scalars);
    if (p.is_zero()) throw CatalogError(fmt::format("relation '{}' of {} vanishes under the bindings", r, name));
    pres.relations.push_back(std::move(p));
  }
  for (auto [g, gi] : pres.alphabet.inverse_pairs()) {
    NcPoly one = pres.scalar(RatFunc(1));
    NcPoly a = NcPoly::word(pres.alphabet, pres.params, Word{g});
    NcPoly ai = NcPoly::word(pres.alphabet, pres.params, Word{gi});
    pres.relations.push_back(a * ai - one);
    pres.relations.push_back(ai * a - one);
  }
  return pres;
}

Presentation make(std::string_view name) { return make(name, Bindings::symbolic(find_entry(name).info.params)); }

namespace {

bool has_gens(const Presentation& p, std::initializer_list<const char*> gens) {
  for (const char* g : gens)
    if (!p.alphabet.index_of(g)) return false;
  return true;
}

RatFunc need_param(const Presentation& p, const char* name, std::string_view element) {
  if (!p.params.contains(name))
    throw CatalogError(fmt::format("element {} needs parameter '{}' in the presentation", element, name));
  return p.param(name);
}

// "A+5" or "B-3": products following rho or its inverse.
std::optional<NcPoly> rho_word(std::string_view name, const Presentation& p) {
  if (name.size() < 3 || (name[1] != '+' && name[1] != '-')) return std::nullopt;
  const std::string abc = "ABC";
  auto start = abc.find(name[0]);
  if (start == std::string::npos) return std::nullopt;
  for (char c : name.substr(2))
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  int n = std::stoi(std::string(name.substr(2)));
  if (n < 1 || n > 64) throw CatalogError(fmt::format("length out of range in {}", name));
  if (!has_gens(p, {"A", "B", "C"})) return std::nullopt;
  int step = name[1] == '+' ? 1 : 2;
  Word w;
  for (int i = 0; i < n; ++i) w.push_back(*p.alphabet.index_of(std::string(1, abc[(start + step * i) % 3])));
  return NcPoly::word(p.alphabet, p.params, w);
}

}  // namespace

NcPoly derived_element(std::string_view name, const Presentation& p) {
  auto fail = [&]() -> NcPoly {
    throw CatalogError(fmt::format("no element '{}' in presentation {}", name, p.name));
  };
  if (auto w = rho_word(name, p)) {
    if (p.name != "reduced" && p.name != "z3downup") fail();
    return *w;
  }
  if (p.name == "uq_sl2_equitable") {
    RatFunc q = p.param("q");
    const std::map<std::string_view, const char*> nu = {
        {"nu_x", "y*z"}, {"nu_y", "z*x"}, {"nu_z", "x*y"}};
    if (auto it = nu.find(name); it != nu.end()) return (p.scalar(RatFunc(1)) - p.parse(it->second)).scaled(q);
    return fail();
  }
  if (p.name == "uq_a21") {
    if (name == "K") return p.parse("K1*K2*K3");
    if (name == "Kinv") return p.parse("K1inv*K2inv*K3inv");
    // (E_i + xi F_j K^-1) K_k and (E_i + xi F_j K) K_k^-1
    static const std::map<std::string_view, std::array<int, 3>> idx = {
        {"A_Kinv", {1, 2, 3}}, {"B_Kinv", {2, 3, 1}}, {"C_Kinv", {3, 1, 2}},
        {"A_K", {1, 2, 3}},    {"B_K", {2, 3, 1}},    {"C_K", {3, 1, 2}}};
    auto it = idx.find(name);
    if (it == idx.end()) return fail();
    RatFunc xi = need_param(p, "xi", name);
    auto [i, j, k] = it->second;
    bool inv = name.ends_with("Kinv");
    NcPoly e = p.parse(fmt::format("E{}", i));
    NcPoly f = p.parse(fmt::format("F{}", j));
    NcPoly kk = inv ? derived_element("Kinv", p) : derived_element("K", p);
    NcPoly kr = p.parse(inv ? fmt::format("K{}", k) : fmt::format("K{}inv", k));
    return (e + (f * kk).scaled(xi)) * kr;
  }
  if (p.name == "kacmoody_a21") {
    if (name == "h_sum") return p.parse("h1 + h2 + h3");
    static const std::map<std::string_view, std::pair<int, int>> idx = {
        {"A_ef", {1, 2}}, {"B_ef", {2, 3}}, {"C_ef", {3, 1}}};
    auto it = idx.find(name);
    if (it == idx.end()) return fail();
    RatFunc xi = need_param(p, "xi", name);
    return p.parse(fmt::format("e{}", it->second.first)) + p.parse(fmt::format("f{}", it->second.second)).scaled(xi);
  }
  if (name == "C_neg" && (p.name == "weyl" || p.name == "z3weyl")) return -p.gen("A") - p.gen("B");
  return fail();
}

namespace {

struct Dictionary {
  std::string name;
  std::vector<std::string> params;
  std::array<const char*, 3> exprs;
};

const std::vector<Dictionary>& dictionaries() {
  static const std::vector<Dictionary> d = {
      {"weyl", {"xi", "theta"}, {"xi + 1", "-xi", "(xi - 1)*theta"}},
      {"qweyl", {"q", "xi", "theta"}, {"q*xi + q^-1", "-xi", "(xi - q^-1)*theta"}},
      {"uq_sl2", {"q", "xi"}, {"q^2 + xi", "-q^2*xi", "(1 - q^2)*(1 - xi)"}},
      {"uq_sl2_nu", {"q"}, {"q^3*(q + q^-1)", "-q^6", "q^3*(q - q^-1)*(q^2 - q^-2)"}},
      {"uq_a21_kinv", {"q", "xi"}, {"q^3*(q + q^-1)", "-q^6", "-xi*q^3*(q + q^-1)"}},
      {"uq_a21_k", {"q", "xi"}, {"q^-3*(q + q^-1)", "-q^-6", "-xi*q^-3*(q + q^-1)"}},
      {"uq_serre", {"q"}, {"q + q^-1", "-1", "0"}},
      {"kacmoody_ef", {"xi"}, {"2", "-1", "-2*xi"}},
      {"lie", {"gamma"}, {"2", "-1", "gamma"}},
      // qweyl with q -> q^-2 and theta -> q^-1 vartheta
      {"nbweyl", {"q", "xi", "vartheta"}, {"q^-2*xi + q^2", "-xi", "(xi - q^2)*q^-1*vartheta"}},
      // qweyl with q -> t and theta -> 2t/(1 - t)
      {"nbweyl_minus_t", {"t", "xi"}, {"t*xi + t^-1", "-xi", "(xi - t^-1)*2*t/(1 - t)"}},
      {"nbg", {"q"}, {"q^-2*(q + 1)", "-q^-3", "q^-2*(q + 1)"}},
      {"nbg1", {}, {"2", "-1", "2"}},
      {"nbng", {"t"}, {"0", "t^-1", "t^-1 - 1"}},
  };
  return d;
}

}  // namespace

std::vector<std::string> downup_dictionaries() {
  std::vector<std::string> out;
  for (const auto& d : dictionaries()) out.push_back(d.name);
  return out;
}

DownUpParams downup_params_for(std::string_view dictionary, const Bindings& b) {
  for (const auto& d : dictionaries()) {
    if (d.name != dictionary) continue;
    ScalarResolver r = [&](std::string_view id) -> std::optional<RatFunc> {
      if (std::find(d.params.begin(), d.params.end(), id) == d.params.end()) return std::nullopt;
      return b.get(id);
    };
    std::array<RatFunc, 3> v;
    for (int i = 0; i < 3; ++i) {
      NcPoly p = parse_poly(d.exprs[i], GenAlphabet(), b.params(), r);
      v[i] = p.is_zero() ? RatFunc(b.params(), Rational(0)) : p.coeff(Word{});
    }
    return {v[0], v[1], v[2]};
  }
  throw CatalogError(fmt::format("unknown parameter dictionary '{}'", dictionary));
}

Bindings downup_bindings(std::string_view dictionary, const Bindings& b) {
  DownUpParams d = downup_params_for(dictionary, b);
  Bindings out(b.params());
  out.set("alpha", d.alpha).set("beta", d.beta).set("gamma", d.gamma);
  return out;
}

}  // namespace dulab
