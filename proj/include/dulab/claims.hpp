// The claim suite: one entry per stated identity, homomorphism, basis or
// probe, grouped by topic.
#pragma once

#include "dulab/formats.hpp"

#include <functional>

namespace dulab {

struct ClaimResult {
  std::string id;
  std::string topic;
  // outcome_name or verdict_name, or "error" when the check threw.
  std::string verdict;
  std::string detail;
  long long millis = 0;

  bool failed() const { return verdict == "refuted" || verdict == "counterexample-found" || verdict == "error"; }
};

struct Claim {
  std::string id;
  std::string topic;
  std::string statement;
  std::function<ClaimResult()> run;
};

const std::vector<Claim>& claim_registry();

struct TopicInfo {
  std::string name;
  std::string description;
};
const std::vector<TopicInfo>& claim_topics();

// Runs the claims of the given topics (all when empty), in registry order.
// ClaimError for an unknown topic.
std::vector<ClaimResult> verify_claims(const std::vector<std::string>& topics = {}, unsigned jobs = 1);

class ClaimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json claims_to_json(const std::vector<ClaimResult>& results);
std::string claims_text(const std::vector<ClaimResult>& results);

}  // namespace dulab
