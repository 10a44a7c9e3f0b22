// Outcomes of symbolic checks.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dulab {

enum class Outcome { verified, refuted, inconclusive };

const char* outcome_name(Outcome o);

struct CheckEntry {
  std::string label;
  Outcome outcome = Outcome::verified;
  // Rendered residue or witness for non-verified entries.
  std::string detail;
};

struct CheckReport {
  std::string tag;
  std::vector<CheckEntry> entries;

  // verified iff every entry is; refuted if any entry is.
  Outcome verdict() const;
  bool ok() const { return verdict() == Outcome::verified; }
  void add(std::string label, Outcome o, std::string detail = {});
  void append(const CheckReport& other, const std::string& prefix = {});
  // First non-verified entry, if any.
  const CheckEntry* first_failure() const;
  std::string summary() const;
};

}  // namespace dulab
