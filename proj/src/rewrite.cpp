#include "dulab/rewrite.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace dulab {

// --------------------------------------------------------------- Derivation

Derivation Derivation::unit(std::uint32_t relation, const RatFunc& coef) {
  Derivation d;
  if (!coef.is_zero()) d.terms_.emplace(Key{Word(), relation, Word()}, coef);
  return d;
}

void Derivation::add(const Derivation& o, const RatFunc& coef, const Word& left, const Word& right) {
  if (coef.is_zero()) return;
  for (const auto& [k, c] : o.terms_) {
    Key nk{left + std::get<0>(k), std::get<1>(k), std::get<2>(k) + right};
    RatFunc v = c * coef;
    auto [it, inserted] = terms_.try_emplace(std::move(nk), v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

Derivation Derivation::scaled(const RatFunc& coef) const {
  Derivation d;
  d.add(*this, coef);
  return d;
}

NcPoly Derivation::expand(const std::vector<NcPoly>& relations) const {
  NcPoly out;
  if (!relations.empty()) out = NcPoly(relations.front().alphabet(), relations.front().params());
  for (const auto& [k, c] : terms_) {
    const auto& [l, idx, r] = k;
    const NcPoly& rel = relations.at(idx);
    NcPoly left = NcPoly::word(rel.alphabet(), rel.params(), l);
    NcPoly right = NcPoly::word(rel.alphabet(), rel.params(), r);
    out += (left * rel * right).scaled(c);
  }
  return out;
}

NcPoly Rule::as_poly() const { return NcPoly::word(rhs.alphabet(), rhs.params(), lhs) - rhs; }

// ------------------------------------------------------------ RewriteSystem

RewriteSystem::RewriteSystem(GenAlphabet a, ParamSet ps, MonomialOrder ord)
    : alpha_(std::move(a)), ps_(std::move(ps)), ord_(std::move(ord)) {
  if (ord_.ngens() != alpha_.size()) throw AlgebraError("order does not match alphabet size");
  by_first_.assign(alpha_.size(), {});
}

std::string RewriteSystem::status_str() const {
  switch (status_) {
    case SystemStatus::raw:
      return "raw";
    case SystemStatus::confluent:
      return "confluent";
    case SystemStatus::complete_to_degree:
      return fmt::format("complete-to-degree({})", degree_);
  }
  return "?";
}

void RewriteSystem::reindex() {
  by_first_.assign(alpha_.size(), {});
  id_index_.clear();
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    by_first_[rules_[i].lhs[0]].push_back(std::uint32_t(i));
    id_index_[rules_[i].id] = i;
  }
}

void RewriteSystem::push_rule(Rule r) {
  if (r.lhs.empty()) throw AlgebraError("relation reduces to a nonzero scalar; the algebra is trivial");
  if (r.id >= next_id_) next_id_ = r.id + 1;
  by_first_[r.lhs[0]].push_back(std::uint32_t(rules_.size()));
  id_index_[r.id] = rules_.size();
  rules_.push_back(std::move(r));
  status_ = SystemStatus::raw;
}

void RewriteSystem::erase_rules(const std::vector<std::size_t>& indices) {
  if (indices.empty()) return;
  std::vector<bool> dead(rules_.size(), false);
  for (auto i : indices) dead[i] = true;
  std::vector<Rule> kept;
  kept.reserve(rules_.size());
  for (std::size_t i = 0; i < rules_.size(); ++i)
    if (!dead[i]) kept.push_back(std::move(rules_[i]));
  rules_ = std::move(kept);
  reindex();
}

std::optional<std::size_t> RewriteSystem::index_of_id(std::uint32_t id) const {
  auto it = id_index_.find(id);
  if (it == id_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::pair<std::size_t, std::size_t>> RewriteSystem::find_match(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos)
    for (auto idx : by_first_[w[pos]])
      if (w.matches_at(rules_[idx].lhs, pos)) return std::make_pair(pos, std::size_t(idx));
  return std::nullopt;
}

NcPoly RewriteSystem::normal_form(const NcPoly& p, Derivation* acc) const {
  std::map<std::string, std::pair<Word, RatFunc>> pending;
  auto push = [&](Word w, const RatFunc& c) {
    if (c.is_zero()) return;
    std::string k = ord_.sort_key(w);
    auto [it, inserted] = pending.try_emplace(std::move(k), std::move(w), c);
    if (!inserted) {
      it->second.second += c;
      if (it->second.second.is_zero()) pending.erase(it);
    }
  };
  for (const auto& [w, c] : p.terms()) push(w, c);
  NcPoly out(alpha_, ps_.empty() ? p.params() : ps_);
  while (!pending.empty()) {
    auto it = std::prev(pending.end());
    Word w = std::move(it->second.first);
    RatFunc c = std::move(it->second.second);
    pending.erase(it);
    auto m = find_match(w);
    if (!m) {
      out.add_term(w, c);
      continue;
    }
    const Rule& r = rules_[m->second];
    Word u = w.sub(0, m->first);
    Word v = w.sub(m->first + r.lhs.size());
    for (const auto& [t, d] : r.rhs.terms()) push(u + t + v, c * d);
    if (acc) {
      if (!r.derivation) throw AlgebraError("rule without derivation in tracked reduction");
      acc->add(*r.derivation, c, u, v);
    }
  }
  return out;
}

// -------------------------------------------------------------- orientation

namespace {

NcPoly word_poly(const RewriteSystem& sys, const Word& w) {
  return NcPoly::word(sys.alphabet(), sys.params(), w);
}

struct PendingRelation {
  NcPoly poly;
  std::optional<Derivation> derivation;
  std::string origin;
};

// Insert relations into an interreduced system. Returns ids of rules created.
std::vector<std::uint32_t> insert_relations(RewriteSystem& sys, std::deque<PendingRelation> work,
                                            std::size_t rule_cap) {
  std::vector<std::uint32_t> added;
  while (!work.empty()) {
    PendingRelation item = std::move(work.front());
    work.pop_front();
    Derivation acc;
    NcPoly q = sys.normal_form(item.poly, item.derivation ? &acc : nullptr);
    if (q.is_zero()) continue;
    if (item.derivation) item.derivation->add(acc, RatFunc(-1));
    LeadingTerm lt = leading_term(q, sys.order());
    RatFunc inv = lt.coef.inv();
    q = q.scaled(inv);
    if (item.derivation) *item.derivation = item.derivation->scaled(inv);

    Rule r;
    r.id = sys.next_id();
    r.lhs = lt.word;
    r.rhs = word_poly(sys, lt.word) - q;
    r.origin = std::move(item.origin);
    r.derivation = std::move(item.derivation);

    std::vector<std::size_t> dead;
    for (std::size_t i = 0; i < sys.rules().size(); ++i) {
      const Rule& s = sys.rules()[i];
      if (s.lhs.contains(r.lhs)) {
        dead.push_back(i);
        work.push_back(PendingRelation{s.as_poly(), s.derivation, s.origin});
      }
    }
    sys.erase_rules(dead);
    Word new_lhs = r.lhs;
    std::uint32_t new_id = r.id;
    sys.push_rule(std::move(r));
    added.push_back(new_id);

    for (std::size_t i = 0; i < sys.rules().size(); ++i) {
      Rule& s = sys.rule_at(i);
      if (s.id == new_id) continue;
      bool touched = false;
      for (const auto& [w, c] : s.rhs.terms())
        if (w.contains(new_lhs)) {
          touched = true;
          break;
        }
      if (!touched) continue;
      Derivation acc2;
      NcPoly nrhs = sys.normal_form(s.rhs, s.derivation ? &acc2 : nullptr);
      // normal_form reads rules by reference; assign after it returns
      Rule& s2 = sys.rule_at(i);
      s2.rhs = std::move(nrhs);
      if (s2.derivation) s2.derivation->add(acc2, RatFunc(1));
    }
    if (sys.rules().size() > rule_cap)
      throw ResourceCapExceeded(fmt::format("rewriting system exceeded {} rules", rule_cap));
  }
  return added;
}

}  // namespace

RewriteSystem orient(const GenAlphabet& a, const ParamSet& ps, const std::vector<NcPoly>& relations,
                     const MonomialOrder& ord, const OrientOptions& opts) {
  RewriteSystem sys(a, ps, ord);
  std::vector<NcPoly> rels;
  rels.reserve(relations.size());
  for (const auto& r : relations) {
    if (r.alphabet() != a && r.alphabet().size() != 0) throw AlgebraError("relation over a different alphabet");
    rels.push_back(r.params() == ps || r.params().empty() ? r : r.lifted(ps));
  }
  sys.set_relations(rels);
  std::deque<PendingRelation> work;
  for (std::size_t k = 0; k < rels.size(); ++k) {
    std::optional<Derivation> d;
    if (opts.track_derivations) d = Derivation::unit(std::uint32_t(k), RatFunc(1));
    work.push_back(PendingRelation{rels[k], std::move(d), fmt::format("relation {}", k + 1)});
  }
  insert_relations(sys, std::move(work), std::numeric_limits<std::size_t>::max());
  sys.set_status(SystemStatus::raw);
  return sys;
}

RewriteSystem orient(const std::vector<NcPoly>& relations, const MonomialOrder& ord, const OrientOptions& opts) {
  if (relations.empty()) throw AlgebraError("orient needs at least one relation to fix the alphabet");
  return orient(relations.front().alphabet(), relations.front().params(), relations, ord, opts);
}

NcPoly normal_form(const RewriteSystem& sys, const NcPoly& p) { return sys.normal_form(p); }

// ----------------------------------------------------------------- overlaps

namespace {

// Calls f(offset, word, inclusion) for every ambiguity of li with lj.
template <class F>
void ambiguities(const Word& li, const Word& lj, bool same, F&& f) {
  if (!same && lj.size() < li.size()) {
    for (std::size_t pos = 0;; ++pos) {
      auto p = li.find(lj, pos);
      if (!p) break;
      f(*p, li, true);
      pos = *p;
    }
  }
  std::size_t kmax = std::min(li.size(), lj.size());
  for (std::size_t k = 1; k < kmax; ++k) {
    std::size_t off = li.size() - k;
    if (li.matches_at(lj.sub(0, k), off)) f(off, li + lj.sub(k), false);
  }
}

}  // namespace

std::vector<Overlap> enumerate_overlaps(const RewriteSystem& sys) {
  std::vector<Overlap> out;
  const auto& rules = sys.rules();
  for (std::size_t i = 0; i < rules.size(); ++i)
    for (std::size_t j = 0; j < rules.size(); ++j)
      ambiguities(rules[i].lhs, rules[j].lhs, i == j, [&](std::size_t off, const Word& w, bool inc) {
        out.push_back(Overlap{i, j, off, w, inc});
      });
  const auto& ord = sys.order();
  std::stable_sort(out.begin(), out.end(), [&](const Overlap& a, const Overlap& b) {
    int c = ord.compare(a.word, b.word);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j, a.offset) < std::tie(b.i, b.j, b.offset);
  });
  return out;
}

OverlapResolution resolve_overlap(const RewriteSystem& sys, const Overlap& ov, bool track) {
  const Rule& ri = sys.rules()[ov.i];
  const Rule& rj = sys.rules()[ov.j];
  Word suf1 = ov.word.sub(ri.lhs.size());
  Word pre2 = ov.word.sub(0, ov.offset);
  Word suf2 = ov.word.sub(ov.offset + rj.lhs.size());
  NcPoly p1 = ri.rhs * word_poly(sys, suf1);
  NcPoly p2 = word_poly(sys, pre2) * rj.rhs * word_poly(sys, suf2);
  Derivation a1, a2;
  if (track) {
    if (!ri.derivation || !rj.derivation) throw AlgebraError("system carries no derivations");
    a1.add(*ri.derivation, RatFunc(1), Word(), suf1);
    a2.add(*rj.derivation, RatFunc(1), pre2, suf2);
  }
  OverlapResolution res;
  res.first = sys.normal_form(p1, track ? &a1 : nullptr);
  res.second = sys.normal_form(p2, track ? &a2 : nullptr);
  if (track) {
    res.derivation = a2;
    res.derivation.add(a1, RatFunc(-1));
  }
  return res;
}

CheckReport check_confluence(const RewriteSystem& sys, std::optional<unsigned> max_deg) {
  CheckReport rep;
  rep.tag = "confluence";
  for (const auto& ov : enumerate_overlaps(sys)) {
    if (max_deg && ov.word.size() > *max_deg) continue;
    auto res = resolve_overlap(sys, ov);
    std::string label = ov.word.str(sys.alphabet());
    if (res.first == res.second) {
      rep.add(label, Outcome::verified);
    } else {
      rep.add(label, Outcome::refuted,
              fmt::format("{} != {}", res.first.str(sys.order()), res.second.str(sys.order())));
    }
  }
  return rep;
}

CheckReport check_confluence(RewriteSystem& sys) {
  CheckReport rep = check_confluence(static_cast<const RewriteSystem&>(sys), std::nullopt);
  if (rep.ok()) sys.set_status(SystemStatus::confluent);
  return rep;
}

// --------------------------------------------------------------- completion

RewriteSystem complete(const RewriteSystem& input, unsigned max_deg, const CompletionOptions& opts) {
  RewriteSystem sys = input;
  const bool track = opts.track_derivations;
  if (track)
    for (const auto& r : sys.rules())
      if (!r.derivation) throw AlgebraError("completion with derivations needs a tracked system");

  using Key = std::tuple<std::string, std::uint32_t, std::uint32_t, std::size_t, bool>;
  std::set<Key> queue;
  const auto& ord = sys.order();

  auto push_pair = [&](const Rule& a, const Rule& b) {
    ambiguities(a.lhs, b.lhs, a.id == b.id, [&](std::size_t off, const Word& w, bool inc) {
      if (w.size() <= max_deg) queue.emplace(ord.sort_key(w), a.id, b.id, off, inc);
    });
  };
  auto enqueue_rule = [&](std::uint32_t id) {
    auto idx = sys.index_of_id(id);
    if (!idx) return;
    const Rule r = sys.rules()[*idx];
    for (const auto& s : sys.rules()) {
      push_pair(r, s);
      if (s.id != r.id) push_pair(s, r);
    }
  };

  for (std::size_t i = 0; i < sys.rules().size(); ++i)
    for (std::size_t j = 0; j < sys.rules().size(); ++j) push_pair(sys.rules()[i], sys.rules()[j]);

  while (true) {
    while (!queue.empty()) {
      Key k = *queue.begin();
      queue.erase(queue.begin());
      auto ii = sys.index_of_id(std::get<1>(k));
      auto jj = sys.index_of_id(std::get<2>(k));
      if (!ii || !jj) continue;
      const Rule& ri = sys.rules()[*ii];
      Overlap ov;
      ov.i = *ii;
      ov.j = *jj;
      ov.offset = std::get<3>(k);
      ov.inclusion = std::get<4>(k);
      ov.word = ov.inclusion ? ri.lhs : ri.lhs + sys.rules()[*jj].lhs.sub(ri.lhs.size() - ov.offset);
      auto res = resolve_overlap(sys, ov, track);
      NcPoly diff = res.first - res.second;
      if (diff.is_zero()) continue;
      std::deque<PendingRelation> work;
      std::optional<Derivation> d;
      if (track) d = std::move(res.derivation);
      work.push_back(PendingRelation{diff, std::move(d), "overlap " + ov.word.str(sys.alphabet())});
      auto added = insert_relations(sys, std::move(work), opts.rule_cap);
      for (auto id : added) enqueue_rule(id);
    }
    // Re-examine the final system; anything unresolved within the bound goes
    // back into the queue.
    bool all_resolved = true;
    for (const auto& ov : enumerate_overlaps(sys)) {
      auto res = resolve_overlap(sys, ov);
      if (res.first == res.second) continue;
      all_resolved = false;
      if (ov.word.size() <= max_deg)
        queue.emplace(ord.sort_key(ov.word), sys.rules()[ov.i].id, sys.rules()[ov.j].id, ov.offset, ov.inclusion);
    }
    if (!queue.empty()) continue;
    sys.set_status(all_resolved ? SystemStatus::confluent : SystemStatus::complete_to_degree, max_deg);
    return sys;
  }
}

// ------------------------------------------------------------ normal words

std::vector<Word> normal_words(const RewriteSystem& sys, unsigned max_deg) {
  const std::size_t n = sys.alphabet().size();
  std::vector<std::vector<const Word*>> by_last(n);
  for (const auto& r : sys.rules()) by_last[r.lhs[r.lhs.size() - 1]].push_back(&r.lhs);
  std::vector<Word> out;
  Word cur;
  std::function<void()> dfs = [&]() {
    out.push_back(cur);
    if (cur.size() >= max_deg) return;
    for (std::size_t g = 0; g < n; ++g) {
      cur.push_back(Gen(g));
      bool ok = true;
      for (const Word* l : by_last[g]) {
        if (l->size() <= cur.size() && cur.matches_at(*l, cur.size() - l->size())) {
          ok = false;
          break;
        }
      }
      if (ok) dfs();
      cur = cur.sub(0, cur.size() - 1);
    }
  };
  dfs();
  const auto& ord = sys.order();
  std::sort(out.begin(), out.end(), [&](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return ord.less(a, b);
  });
  return out;
}

std::vector<std::size_t> count_by_degree(const RewriteSystem& sys, unsigned max_deg) {
  std::vector<std::size_t> counts(max_deg + 1, 0);
  for (const auto& w : normal_words(sys, max_deg)) ++counts[w.size()];
  return counts;
}

std::string render_rule(const RewriteSystem& sys, const Rule& r) {
  return r.lhs.str(sys.alphabet()) + " -> " + r.rhs.str(sys.order());
}

}  // namespace dulab
