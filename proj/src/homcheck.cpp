#include "dulab/homcheck.hpp"

#include "dulab/parse.hpp"

#include <fmt/format.h>

#include <atomic>
#include <thread>

namespace dulab {

const char* direction_name(Direction d) {
  return d == Direction::homomorphism ? "homomorphism" : "antihomomorphism";
}

Target prepare_target(const Presentation& pres, unsigned completion_deg, std::size_t rule_cap) {
  RewriteSystem sys = pres.orient();
  CompletionOptions opts;
  opts.rule_cap = rule_cap;
  sys = complete(sys, completion_deg, opts);
  return Target{pres, std::make_shared<const RewriteSystem>(std::move(sys))};
}

namespace {

void check_images_cover(const Presentation& source, std::size_t n) {
  if (n != source.alphabet.size()) throw HomError("every source generator needs an image");
}

}  // namespace

GenMap make_map(std::string label, const Presentation& source, const Target& target,
                const std::map<std::string, NcPoly>& images, Direction d) {
  GenMap m;
  m.label = std::move(label);
  m.source = source;
  m.direction = d;
  m.target = target;
  for (const auto& g : source.alphabet.names()) {
    auto it = images.find(g);
    if (it == images.end()) throw HomError("no image for generator " + g);
    if (!it->second.is_zero() && it->second.alphabet() != target.pres.alphabet)
      throw HomError("image of " + g + " is not over the target alphabet");
    m.images.push_back(it->second.is_zero() ? target.pres.zero() : it->second);
  }
  check_images_cover(source, m.images.size());
  return m;
}

GenMap make_map(std::string label, const Presentation& source, const Target& target,
                const std::map<std::string, std::string>& images, Direction d) {
  std::map<std::string, NcPoly> parsed;
  for (const auto& [g, text] : images) parsed.emplace(g, target.pres.parse(text));
  return make_map(std::move(label), source, target, parsed, d);
}

GenMap make_matrix_map(std::string label, const Presentation& source, const std::vector<Matrix>& images, Direction d) {
  GenMap m;
  m.label = std::move(label);
  m.source = source;
  m.direction = d;
  m.matrix_images = images;
  check_images_cover(source, images.size());
  for (const auto& x : images)
    if (x.size() != images[0].size()) throw HomError("matrix images of different sizes");
  return m;
}

NcPoly GenMap::image_of(const NcPoly& p) const {
  if (into_matrices()) throw HomError("image_of needs a presented target");
  return substitute_gens(p, images, direction == Direction::antihomomorphism);
}

unsigned default_completion_degree(const Presentation& source, const std::vector<NcPoly>& images) {
  unsigned d = 0;
  for (const auto& r : source.relations) d = std::max(d, r.degree());
  for (const auto& i : images) d = std::max(d, i.degree());
  return d + 2;
}

const NcPoly& ImageReducer::word_image(const Word& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  const RewriteSystem& sys = *m_.target->sys;
  NcPoly v;
  if (w.empty()) {
    v = sys.one();
  } else {
    const NcPoly& head = word_image(w.sub(0, w.size() - 1));
    const NcPoly& g = m_.images[w[w.size() - 1]];
    v = sys.normal_form(m_.direction == Direction::antihomomorphism ? g * head : head * g);
  }
  return cache_.emplace(w, std::move(v)).first->second;
}

NcPoly ImageReducer::image(const NcPoly& p) {
  const RewriteSystem& sys = *m_.target->sys;
  NcPoly out = sys.zero();
  for (const auto& [w, c] : p.terms()) out += word_image(w).scaled(c);
  return out;
}

namespace {

CheckEntry check_relation(const GenMap& m, std::size_t k, ImageReducer* red) {
  const NcPoly& rel = m.source.relations[k];
  std::string label = fmt::format("relation {}: {} = 0", k + 1, rel.str(m.source.order));
  if (m.into_matrices()) {
    Matrix r = eval_ncpoly(rel, m.matrix_images, m.direction == Direction::antihomomorphism);
    if (r.is_zero()) return {label, Outcome::verified, ""};
    return {label, Outcome::refuted, "residue " + r.str()};
  }
  NcPoly r = red->image(rel);
  if (r.is_zero()) return {label, Outcome::verified, ""};
  bool exact = m.target->sys->is_confluent();
  return {label, exact ? Outcome::refuted : Outcome::inconclusive, "residue " + r.str(m.target->sys->order())};
}

}  // namespace

CheckReport check_hom(const GenMap& m, unsigned jobs) {
  CheckReport rep;
  rep.tag = m.label;
  const std::size_t n = m.source.relations.size();
  std::vector<CheckEntry> out(n);
  if (jobs <= 1 || n <= 1) {
    std::optional<ImageReducer> red;
    if (!m.into_matrices()) red.emplace(m);
    for (std::size_t k = 0; k < n; ++k) out[k] = check_relation(m, k, red ? &*red : nullptr);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(jobs);
    for (unsigned t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        try {
          std::optional<ImageReducer> red;
          if (!m.into_matrices()) red.emplace(m);
          for (std::size_t k; (k = next++) < n;) out[k] = check_relation(m, k, red ? &*red : nullptr);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
  }
  rep.entries = std::move(out);
  return rep;
}

GenMap compose(const GenMap& m1, const GenMap& m2) {
  if (m1.into_matrices()) throw HomError("compose: first map must have a presented target");
  if (m1.target->pres.alphabet != m2.source.alphabet) throw HomError("compose: carrier mismatch");
  GenMap out;
  out.label = m2.label + " after " + m1.label;
  out.source = m1.source;
  out.direction = (m1.direction == m2.direction) ? Direction::homomorphism : Direction::antihomomorphism;
  if (m2.into_matrices()) {
    for (const auto& img : m1.images)
      out.matrix_images.push_back(eval_ncpoly(img, m2.matrix_images, m2.direction == Direction::antihomomorphism));
    return out;
  }
  out.target = m2.target;
  ImageReducer red(m2);
  for (const auto& img : m1.images) out.images.push_back(red.image(img));
  return out;
}

CheckReport is_identity(const GenMap& m) {
  CheckReport rep;
  rep.tag = m.label + " is the identity";
  if (m.into_matrices() || m.target->pres.alphabet != m.source.alphabet)
    throw HomError("is_identity needs a map from a presentation to itself");
  const RewriteSystem& sys = *m.target->sys;
  for (std::size_t g = 0; g < m.images.size(); ++g) {
    const std::string& name = m.source.alphabet.name(Gen(g));
    NcPoly d = sys.normal_form(m.images[g]) - sys.normal_form(sys.gen(name));
    std::string label = fmt::format("{} -> {}", name, name);
    if (d.is_zero())
      rep.add(label, Outcome::verified);
    else
      rep.add(label, sys.is_confluent() ? Outcome::refuted : Outcome::inconclusive,
              "image " + sys.normal_form(m.images[g]).str(sys.order()));
  }
  if (m.direction != Direction::homomorphism) rep.add("direction", Outcome::refuted, "antihomomorphism");
  return rep;
}

CheckReport same_on_generators(const GenMap& a, const GenMap& b) {
  CheckReport rep;
  rep.tag = a.label + " equals " + b.label;
  if (a.source.alphabet != b.source.alphabet) throw HomError("maps have different sources");
  if (a.direction != b.direction)
    rep.add("direction", Outcome::refuted,
            fmt::format("{} vs {}", direction_name(a.direction), direction_name(b.direction)));
  for (std::size_t g = 0; g < a.source.alphabet.size(); ++g) {
    const std::string& name = a.source.alphabet.name(Gen(g));
    if (a.into_matrices() != b.into_matrices()) throw HomError("maps have different kinds of target");
    if (a.into_matrices()) {
      bool eq = a.matrix_images[g] == b.matrix_images[g];
      rep.add(name, eq ? Outcome::verified : Outcome::refuted);
      continue;
    }
    const RewriteSystem& sys = *a.target->sys;
    NcPoly d = sys.normal_form(a.images[g] - b.images[g]);
    if (d.is_zero())
      rep.add(name, Outcome::verified);
    else
      rep.add(name, sys.is_confluent() ? Outcome::refuted : Outcome::inconclusive, "difference " + d.str(sys.order()));
  }
  return rep;
}

CheckReport ideal_implication(const std::vector<NcPoly>& relations, const RewriteSystem& target) {
  CheckReport rep;
  rep.tag = "ideal membership";
  for (std::size_t k = 0; k < relations.size(); ++k) {
    NcPoly r = target.normal_form(relations[k].lifted(target.params()));
    std::string label = fmt::format("relation {}: {} = 0", k + 1, relations[k].str(target.order()));
    if (r.is_zero())
      rep.add(label, Outcome::verified);
    else
      rep.add(label, Outcome::inconclusive, "residue " + r.str(target.order()));
  }
  return rep;
}

}  // namespace dulab
