// Checking that generator assignments extend to (anti)homomorphisms.
#pragma once

#include "dulab/matrep.hpp"

#include <memory>

namespace dulab {

class HomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Direction { homomorphism, antihomomorphism };

const char* direction_name(Direction d);

// Target rewrite system, oriented and either confluent or completed.
struct Target {
  Presentation pres;
  std::shared_ptr<const RewriteSystem> sys;
};

// Orient; if not confluent, complete to `completion_deg`.
Target prepare_target(const Presentation& pres, unsigned completion_deg, std::size_t rule_cap = 4000);

struct GenMap {
  std::string label;
  Presentation source;
  Direction direction = Direction::homomorphism;
  // Presented target.
  std::optional<Target> target;
  std::vector<NcPoly> images;
  // Matrix target.
  std::vector<Matrix> matrix_images;

  bool into_matrices() const { return !target.has_value(); }
  NcPoly image_of(const NcPoly& p) const;  // presented targets, not reduced
};

// Images as expressions in the target generators, keyed by source generator.
GenMap make_map(std::string label, const Presentation& source, const Target& target,
                const std::map<std::string, std::string>& images, Direction d = Direction::homomorphism);
GenMap make_map(std::string label, const Presentation& source, const Target& target,
                const std::map<std::string, NcPoly>& images, Direction d = Direction::homomorphism);
GenMap make_matrix_map(std::string label, const Presentation& source, const std::vector<Matrix>& images,
                       Direction d = Direction::homomorphism);

// 2 + the largest degree among source relations and images.
unsigned default_completion_degree(const Presentation& source, const std::vector<NcPoly>& images);

// Normal forms of images of words, with prefix products cached.
class ImageReducer {
 public:
  explicit ImageReducer(const GenMap& m) : m_(m) {}
  const NcPoly& word_image(const Word& w);
  NcPoly image(const NcPoly& p);

 private:
  const GenMap& m_;
  std::map<Word, NcPoly> cache_;
};

// One entry per source relation: verified iff the image reduces to zero.
// A nonzero residue is refuted when the target is confluent (or a matrix
// space) and inconclusive otherwise.
CheckReport check_hom(const GenMap& m, unsigned jobs = 1);

// m2 after m1; m1's target must be m2's source.
GenMap compose(const GenMap& m1, const GenMap& m2);
CheckReport is_identity(const GenMap& m);
// Both maps agree on generators (same direction, equal reduced images).
CheckReport same_on_generators(const GenMap& a, const GenMap& b);

// verified iff each relation reduces to zero; never refuted.
CheckReport ideal_implication(const std::vector<NcPoly>& relations, const RewriteSystem& target);

}  // namespace dulab
