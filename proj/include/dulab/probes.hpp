// Evidence generators: ranks of images, truncated injectivity, finite
// dimension detection and the four-case infinite-dimensionality argument.
#pragma once

#include "dulab/homcheck.hpp"

namespace dulab {

class ProbeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ProbeVerdict { consistent, counterexample, finite_dimension, inconclusive };

const char* verdict_name(ProbeVerdict v);

struct ProbeResult {
  std::string name;
  unsigned degree = 0;
  // Per-degree counts: normal words, source ranks or growth.
  std::vector<std::size_t> counts;
  // Image rank for each degree bound 0..degree (cumulative).
  std::vector<std::size_t> ranks;
  std::size_t count = 0;
  std::size_t rank = 0;
  ProbeVerdict verdict = ProbeVerdict::inconclusive;
  // Kernel element for counterexamples, basis for finite dimension.
  std::string witness;
  std::vector<std::string> basis;
  std::vector<std::string> notes;

  bool consistent() const { return verdict == ProbeVerdict::consistent; }
  std::string summary() const;
};

// Rank of the images of `elements` under the generator images `rep`.
// Entries are expanded in `loop_vars` first. consistent iff the images are
// independent; a dependency among images is not a dependency in the source,
// so the verdict is otherwise inconclusive.
ProbeResult probe_matrix_independence(std::string name, const std::vector<Matrix>& rep,
                                      const std::vector<NcPoly>& elements,
                                      const std::vector<std::string>& loop_vars = {}, bool reverse = false);

// Source normal words up to max_deg (source completed to max_deg), mapped
// and reduced; rank of the images over Q(params). The map must pass
// check_hom. counterexample needs a confluent source and an exact target
// (matrices or confluent).
ProbeResult probe_injectivity(const GenMap& m, unsigned max_deg, const std::vector<std::string>& loop_vars = {});

// Left-normed brackets [x1,[x2,[...,xn]]] of generators, 1 <= n <= max_len.
std::vector<NcPoly> lie_monomials(const GenAlphabet& alpha, const ParamSet& ps, unsigned max_len);

// Injectivity on the span of the Lie monomials: rank of their normal forms
// in the source against the rank of their images. Equal ranks are
// consistent even when the source is not confluent, since the source rank
// is then only an upper bound.
ProbeResult probe_lie_injectivity(const GenMap& m, unsigned max_len, const std::vector<std::string>& loop_vars = {});

// Completes to max_deg. Certified when the system is confluent and has no
// normal word of some length below max_deg.
ProbeResult probe_finite_dimension(const Presentation& pres, unsigned max_deg, std::size_t rule_cap = 4000);

// The four parameter cases in which z3downup(alpha, beta, gamma) is
// infinite-dimensional and noncommutative.
enum class DownUpCase { gamma_zero, alpha_nonzero, alpha_zero_beta_one, alpha_zero_beta_generic };
std::vector<DownUpCase> downup_cases();
const char* case_name(DownUpCase c);
DownUpCase parse_case(std::string_view name);
ProbeResult probe_downup_case(DownUpCase c, unsigned max_deg);

}  // namespace dulab
