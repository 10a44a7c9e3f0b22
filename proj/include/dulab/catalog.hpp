// Named presentations, derived elements and parameter dictionaries.
#pragma once

#include "dulab/rewrite.hpp"

#include <array>

namespace dulab {

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Presentation {
  std::string name;
  GenAlphabet alphabet;
  ParamSet params;
  // Includes the unit relations g*g^-1 - 1, g^-1*g - 1 of inverse pairs.
  std::vector<NcPoly> relations;
  MonomialOrder order;

  NcPoly gen(std::string_view g) const { return NcPoly::gen(alphabet, params, g); }
  NcPoly zero() const { return NcPoly(alphabet, params); }
  NcPoly scalar(const RatFunc& c) const { return NcPoly::constant(alphabet, params, c); }
  NcPoly parse(std::string_view text) const;
  RatFunc param(std::string_view p) const { return RatFunc::param(params, p); }
  RewriteSystem orient(const OrientOptions& opts = {}) const;
};

// Values for the formal parameters of a presentation. A name in `ps`
// without an explicit value stands for itself.
class Bindings {
 public:
  Bindings() = default;
  explicit Bindings(ParamSet ps) : ps_(std::move(ps)) {}
  static Bindings symbolic(std::vector<std::string> names) { return Bindings(ParamSet(std::move(names))); }

  const ParamSet& params() const { return ps_; }
  Bindings& set(const std::string& name, const RatFunc& value);
  // Value given as an expression over params().
  Bindings& set(const std::string& name, std::string_view expr);
  bool has(std::string_view name) const;
  RatFunc get(std::string_view name) const;  // CatalogError when unbound
  RatFunc sym(std::string_view name) const { return RatFunc::param(ps_, name); }

 private:
  ParamSet ps_;
  std::map<std::string, RatFunc, std::less<>> values_;
};

struct CatalogEntry {
  std::string name;
  std::vector<std::string> params;
  std::string description;
};

const std::vector<CatalogEntry>& catalog_entries();

Presentation make(std::string_view name, const Bindings& b);
// Every formal parameter symbolic.
Presentation make(std::string_view name);

NcPoly derived_element(std::string_view name, const Presentation& pres);

struct DownUpParams {
  RatFunc alpha, beta, gamma;
};
std::vector<std::string> downup_dictionaries();
DownUpParams downup_params_for(std::string_view dictionary, const Bindings& b);
// Bindings for z3downup with the dictionary's values over b's parameters.
Bindings downup_bindings(std::string_view dictionary, const Bindings& b);

using CartanMatrix = std::array<std::array<int, 3>, 3>;
// Affine A2 Cartan matrix.
CartanMatrix cartan_a21();

// q^(-2j-1) (1 + q^(2j+1))^2 / (q - q^-1) over ps (which must contain q).
RatFunc vartheta(long j, const ParamSet& ps);

}  // namespace dulab
