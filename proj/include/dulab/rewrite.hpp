// Word rewriting modulo a two-sided ideal: orientation, reduction, overlap
// analysis and degree-bounded completion.
#pragma once

#include "dulab/freealg.hpp"
#include "dulab/report.hpp"

#include <tuple>

namespace dulab {

class ResourceCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Ideal membership certificate: sum of coef * left * relation[k] * right.
class Derivation {
 public:
  using Key = std::tuple<Word, std::uint32_t, Word>;

  static Derivation unit(std::uint32_t relation, const RatFunc& coef);

  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<Key, RatFunc>& terms() const { return terms_; }

  void add(const Derivation& o, const RatFunc& coef, const Word& left = {}, const Word& right = {});
  Derivation scaled(const RatFunc& coef) const;
  // Expand against the relation list.
  NcPoly expand(const std::vector<NcPoly>& relations) const;

 private:
  std::map<Key, RatFunc> terms_;
};

struct Rule {
  std::uint32_t id = 0;
  Word lhs;
  NcPoly rhs;
  // How the rule arose, e.g. "relation 3" or "overlap B*A^2*C".
  std::string origin;
  std::optional<Derivation> derivation;

  NcPoly as_poly() const;  // lhs - rhs
};

enum class SystemStatus { raw, confluent, complete_to_degree };

struct Overlap {
  std::size_t i = 0;  // rule whose lhs starts the word
  std::size_t j = 0;  // rule whose lhs starts at `offset`
  std::size_t offset = 0;
  Word word;
  bool inclusion = false;
};

class RewriteSystem {
 public:
  RewriteSystem() = default;
  RewriteSystem(GenAlphabet a, ParamSet ps, MonomialOrder ord);

  const GenAlphabet& alphabet() const { return alpha_; }
  const ParamSet& params() const { return ps_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Rule>& rules() const { return rules_; }
  // Relations the system was oriented from; derivations index into this.
  const std::vector<NcPoly>& relations() const { return relations_; }
  SystemStatus status() const { return status_; }
  unsigned completed_degree() const { return degree_; }
  bool is_confluent() const { return status_ == SystemStatus::confluent; }
  std::string status_str() const;

  // Leftmost (position, rule index) at which w is reducible.
  std::optional<std::pair<std::size_t, std::size_t>> find_match(const Word& w) const;
  bool is_normal(const Word& w) const { return !find_match(w).has_value(); }
  // Reduce the largest reducible word first, at its leftmost match. When
  // `acc` is given, p - nf(p) is accumulated into it.
  NcPoly normal_form(const NcPoly& p, Derivation* acc = nullptr) const;

  NcPoly zero() const { return NcPoly(alpha_, ps_); }
  NcPoly one() const { return NcPoly::constant(alpha_, ps_, RatFunc(1)); }
  NcPoly gen(std::string_view name) const { return NcPoly::gen(alpha_, ps_, name); }

  void set_status(SystemStatus s, unsigned degree = 0) {
    status_ = s;
    degree_ = degree;
  }

  // Low-level mutation used by orientation and completion.
  void set_relations(std::vector<NcPoly> rels) { relations_ = std::move(rels); }
  void push_rule(Rule r);
  void erase_rules(const std::vector<std::size_t>& indices);
  Rule& rule_at(std::size_t i) { return rules_[i]; }
  std::optional<std::size_t> index_of_id(std::uint32_t id) const;
  std::uint32_t next_id() { return next_id_++; }

 private:
  void reindex();

  GenAlphabet alpha_;
  ParamSet ps_;
  MonomialOrder ord_;
  std::vector<NcPoly> relations_;
  std::vector<Rule> rules_;
  std::vector<std::vector<std::uint32_t>> by_first_;
  std::map<std::uint32_t, std::size_t> id_index_;
  std::uint32_t next_id_ = 0;
  SystemStatus status_ = SystemStatus::raw;
  unsigned degree_ = 0;
};

struct OrientOptions {
  bool track_derivations = false;
};

// Turn each relation into a rule (leading word -> rest) and interreduce.
RewriteSystem orient(const std::vector<NcPoly>& relations, const MonomialOrder& ord,
                     const OrientOptions& opts = {});
RewriteSystem orient(const GenAlphabet& a, const ParamSet& ps, const std::vector<NcPoly>& relations,
                     const MonomialOrder& ord, const OrientOptions& opts = {});

NcPoly normal_form(const RewriteSystem& sys, const NcPoly& p);

// Every overlap and inclusion ambiguity, sorted by ambiguity word.
std::vector<Overlap> enumerate_overlaps(const RewriteSystem& sys);

struct OverlapResolution {
  NcPoly first;   // normal form after reducing at position 0 first
  NcPoly second;  // normal form after reducing at `offset` first
  Derivation derivation;  // certificate for first - second when tracked
};
OverlapResolution resolve_overlap(const RewriteSystem& sys, const Overlap& ov, bool track = false);

// Reduces every ambiguity both ways; on success the system is marked
// confluent.
CheckReport check_confluence(RewriteSystem& sys);
CheckReport check_confluence(const RewriteSystem& sys, std::optional<unsigned> max_deg);

struct CompletionOptions {
  std::size_t rule_cap = 4000;
  bool track_derivations = false;
};

RewriteSystem complete(const RewriteSystem& sys, unsigned max_deg, const CompletionOptions& opts = {});

// Irreducible words of length at most max_deg, in increasing order.
std::vector<Word> normal_words(const RewriteSystem& sys, unsigned max_deg);
std::vector<std::size_t> count_by_degree(const RewriteSystem& sys, unsigned max_deg);

std::string render_rule(const RewriteSystem& sys, const Rule& r);

}  // namespace dulab
