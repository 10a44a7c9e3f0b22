// JSON documents: presentations, check specs, check reports and probe
// results. Every document carries format_version.
#pragma once

#include "dulab/probes.hpp"

#include <json.hpp>

#include <filesystem>

namespace dulab {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// {format_version, name, params, generators: [{name, inverse_of?}], order,
//  weights?, relations}. Unit relations of inverse pairs are implied and
// not written.
Json presentation_to_json(const Presentation& p);
// Formal params of the document resolve through `b`; without bindings every
// param is symbolic.
Presentation presentation_from_json(const Json& j);
Presentation presentation_from_json(const Json& j, const Bindings& b);

Json read_json_file(const std::filesystem::path& path);

// Reference to a presentation: a catalog name, an inline document or a file,
// with bindings for its formal params (expressions over CheckSpec::params).
// `dictionary` fills alpha, beta, gamma of a z3downup source.
struct PresentationRef {
  std::string catalog;
  std::string file;
  Json inline_doc;
  std::string dictionary;
  std::map<std::string, std::string> bindings;
};

struct CheckSpec {
  std::string label;
  std::vector<std::string> params;
  PresentationRef source;
  // Absent when the images are matrices.
  std::optional<PresentationRef> target;
  // Expressions over the target; "@name" is a derived element of the target.
  std::map<std::string, std::string> images;
  std::map<std::string, std::vector<std::vector<std::string>>> matrices;
  Direction direction = Direction::homomorphism;
  std::optional<unsigned> completion_degree;
};

CheckSpec check_spec_from_json(const Json& j);
Json check_spec_to_json(const CheckSpec& s);

// Relative file references resolve against `base`.
Presentation resolve(const PresentationRef& ref, const ParamSet& ps, const std::filesystem::path& base = {});
GenMap build_map(const CheckSpec& s, const std::filesystem::path& base = {}, std::size_t rule_cap = 4000);

Json report_to_json(const CheckReport& r);
Json probe_to_json(const ProbeResult& r);
std::string report_text(const CheckReport& r);
std::string probe_text(const ProbeResult& r);

}  // namespace dulab
