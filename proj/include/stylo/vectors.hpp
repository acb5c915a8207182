#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "stylo/registry.hpp"

namespace stylo {

/// Values aligned to a FeatureRegistry. Missing raw values are NaN and
/// flagged; after normalization `active` marks the dimensions that take part
/// in correlations (enabled, not excluded).
struct FeatureVector {
  std::string doc_id;
  std::vector<double> values;
  std::vector<bool> missing;
  std::vector<bool> imputed;
  std::vector<bool> active;

  std::size_t size() const { return values.size(); }
  /// Values of the active dimensions, in registry order.
  std::vector<double> active_values() const;
};

/// Places profile values in registry order. Ids the registry does not know
/// are a ValidationError; registry ids absent from the profile are missing.
FeatureVector assemble_vector(const std::string& doc_id, const FeatureProfile& profile,
                              const FeatureRegistry& registry);

/// Per-feature attenuation coefficients and exclusions.
struct WeightConfig {
  std::map<std::string, double> coefficients;  // c >= 1; absent means 1
  std::set<std::string> excluded;

  /// Coefficient 1 everywhere, nothing excluded.
  static WeightConfig unweighted();
  /// Coefficient 100 on the ten noisy features, four features excluded.
  static WeightConfig quality_preset();

  double coefficient(const std::string& id) const;
  bool is_excluded(const std::string& id) const { return excluded.count(id) > 0; }
  /// Throws ValidationError for unknown ids, c < 1, or an id both weighted and excluded.
  void validate(const FeatureRegistry& registry) const;

  friend bool operator==(const WeightConfig&, const WeightConfig&) = default;
};

/// Grouping strategies over the gold-standard classes.
enum class Strategy { Original, Automatic, Merged };

std::string to_string(Strategy s);
/// Case-insensitive; throws ValidationError on an unknown name.
Strategy parse_strategy(std::string_view name);

/// POS for Aw/HQ, NEG for SQ/SP, nullopt otherwise.
std::optional<std::string> merged_class(const std::string& original);

/// Means, normalized vectors and class memberships of the gold-standard corpus.
struct BaselineProfile {
  FeatureRegistry registry;
  std::vector<double> means;               // NaN where the feature was never present
  std::set<std::string> force_excluded;    // missing everywhere or zero mean
  std::vector<std::string> warnings;
  WeightConfig weights;                    // used for `weighted`
  std::vector<FeatureVector> raw;
  std::vector<FeatureVector> unweighted;   // mean-scaled with coefficient 1, no exclusions
  std::vector<FeatureVector> weighted;     // mean-scaled with `weights`
  std::map<Strategy, std::map<std::string, std::string>> classes;  // strategy -> doc_id -> class

  /// Classes present under a strategy, sorted.
  std::vector<std::string> class_labels(Strategy s) const;
  bool has_strategy(Strategy s) const;
  /// Members of one class under a strategy, in baseline order.
  std::vector<std::size_t> members(Strategy s, const std::string& label) const;
};

/// Mask-aware means of every registry feature (NaN when absent everywhere).
std::vector<double> feature_means(const std::vector<FeatureVector>& vectors);

/// Mean-scales one vector: raw / (mean * c) * 100 on active dimensions; a
/// missing raw value is imputed as 100 / c. Throws ValidationError when an
/// active feature has a zero or undefined mean.
FeatureVector normalize(const FeatureVector& v, const FeatureRegistry& registry, const std::vector<double>& means,
                        const std::set<std::string>& force_excluded, const WeightConfig& w);
FeatureVector normalize(const FeatureVector& v, const BaselineProfile& baseline, const WeightConfig& w);

/// Builds the baseline. `original` must label every vector; `automatic` may
/// be empty (the strategy is then unavailable). Merged is derived from original
/// when every label is one of Aw/HQ/SQ/SP.
BaselineProfile compute_baseline(const std::vector<FeatureVector>& vectors, const FeatureRegistry& registry,
                                 const std::map<std::string, std::string>& original,
                                 const std::map<std::string, std::string>& automatic, const WeightConfig& weights);

/// Clustering normalization: each corpus is scaled by its own means with
/// coefficient 1 and no exclusions.
std::vector<FeatureVector> normalize_internal(const std::vector<FeatureVector>& vectors,
                                              const FeatureRegistry& registry,
                                              std::vector<std::string>* warnings = nullptr);

}  // namespace stylo
