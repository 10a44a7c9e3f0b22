#include "dulab/report.hpp"

#include <fmt/format.h>

namespace dulab {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::verified:
      return "verified";
    case Outcome::refuted:
      return "refuted";
    case Outcome::inconclusive:
      return "inconclusive";
  }
  return "?";
}

Outcome CheckReport::verdict() const {
  Outcome v = Outcome::verified;
  for (const auto& e : entries) {
    if (e.outcome == Outcome::refuted) return Outcome::refuted;
    if (e.outcome == Outcome::inconclusive) v = Outcome::inconclusive;
  }
  return v;
}

void CheckReport::add(std::string label, Outcome o, std::string detail) {
  entries.push_back(CheckEntry{std::move(label), o, std::move(detail)});
}

void CheckReport::append(const CheckReport& other, const std::string& prefix) {
  for (const auto& e : other.entries) entries.push_back(CheckEntry{prefix + e.label, e.outcome, e.detail});
}

const CheckEntry* CheckReport::first_failure() const {
  for (const auto& e : entries)
    if (e.outcome != Outcome::verified) return &e;
  return nullptr;
}

std::string CheckReport::summary() const {
  std::size_t good = 0;
  for (const auto& e : entries)
    if (e.outcome == Outcome::verified) ++good;
  std::string s = fmt::format("{}/{} verified", good, entries.size());
  if (const auto* f = first_failure()) {
    s += fmt::format("; {} {}", outcome_name(f->outcome), f->label);
    if (!f->detail.empty()) s += ": " + f->detail;
  }
  return s;
}

}  // namespace dulab
