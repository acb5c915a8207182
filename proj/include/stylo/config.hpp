#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "stylo/lexical.hpp"
#include "stylo/registry.hpp"
#include "stylo/semantic.hpp"
#include "stylo/syntactic.hpp"
#include "stylo/vectors.hpp"

namespace stylo {

inline constexpr int kConfigSchemaVersion = 1;

/// Every tunable of the pipeline. Defaults reproduce the reference setup:
/// 33 enabled features, the attenuation preset, Original / Aw-SP-SQ, gamma 1.0.
struct PipelineConfig {
  std::optional<std::filesystem::path> resources;
  FeatureRegistry registry = FeatureRegistry::standard();
  WeightConfig weights = WeightConfig::quality_preset();
  Strategy strategy = Strategy::Original;
  std::vector<std::string> formulas{"Aw-SP-SQ"};
  bool transformed_scoring = false;
  double resolution = 1.0;
  std::uint64_t seed = 42;
  double edge_threshold = 0.0;
  semantic::Thresholds thresholds;
  lexical::Options lexical;
  syntactic::Options syntactic;
  std::optional<std::filesystem::path> output;
};

/// Parses a JSON config. Unknown keys, wrong types, unknown feature ids and
/// out-of-range values are ValidationErrors; `schema_version` is required.
/// Relative paths resolve against `base_dir`.
PipelineConfig parse_config(const std::string& text, const std::filesystem::path& base_dir = {});
PipelineConfig load_config(const std::filesystem::path& path);

/// The effective configuration as JSON (stable key order).
std::string dump_config(const PipelineConfig& cfg);

}  // namespace stylo
