#include "stylo/vectors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "stylo/document.hpp"
#include "stylo/error.hpp"
#include "stylo/stats.hpp"

namespace stylo {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::set<std::string> zero_or_absent(const FeatureRegistry& registry, const std::vector<double>& means,
                                     std::vector<std::string>* warnings) {
  std::set<std::string> out;
  for (std::size_t f = 0; f < registry.size(); ++f) {
    const auto& id = registry[f].id;
    if (std::isnan(means[f])) {
      out.insert(id);
      if (warnings && registry[f].enabled) warnings->push_back("feature '" + id + "' missing in every document; excluded");
    } else if (means[f] == 0.0) {
      out.insert(id);
      if (warnings && registry[f].enabled) warnings->push_back("feature '" + id + "' has zero mean; excluded");
    }
  }
  return out;
}

}  // namespace

std::vector<double> FeatureVector::active_values() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (active[i]) out.push_back(values[i]);
  return out;
}

FeatureVector assemble_vector(const std::string& doc_id, const FeatureProfile& profile,
                              const FeatureRegistry& registry) {
  for (const auto& [id, v] : profile.values)
    if (!registry.contains(id)) throw ValidationError("profile supplies unknown feature id '" + id + "'");
  for (const auto& id : profile.missing)
    if (!registry.contains(id)) throw ValidationError("profile supplies unknown feature id '" + id + "'");

  FeatureVector v;
  v.doc_id = doc_id;
  v.values.assign(registry.size(), kNaN);
  v.missing.assign(registry.size(), true);
  v.imputed.assign(registry.size(), false);
  v.active.assign(registry.size(), false);
  for (std::size_t f = 0; f < registry.size(); ++f) {
    v.active[f] = registry[f].enabled;
    if (auto x = profile.get(registry[f].id); x && std::isfinite(*x)) {
      v.values[f] = *x;
      v.missing[f] = false;
    }
  }
  return v;
}

WeightConfig WeightConfig::unweighted() { return {}; }

WeightConfig WeightConfig::quality_preset() {
  using namespace feature;
  WeightConfig w;
  for (std::string id : {std::string(kDemonstrativeFreq), std::string(kDeicticArticleRatio),
                         std::string(kRelativeRatio), std::string(kPastRatio), std::string("conn_additive_neg"),
                         std::string("conn_causal_pos"), std::string("conn_causal_neg"),
                         std::string("conn_temporal_pos"), std::string("conn_temporal_neg"),
                         std::string("conn_logical_neg")})
    w.coefficients[id] = 100.0;
  w.excluded = {kFirstPersonRatio, kLr1, kLr2, kLr3};
  return w;
}

double WeightConfig::coefficient(const std::string& id) const {
  auto it = coefficients.find(id);
  return it == coefficients.end() ? 1.0 : it->second;
}

void WeightConfig::validate(const FeatureRegistry& registry) const {
  for (const auto& [id, c] : coefficients) {
    if (!registry.contains(id)) throw ValidationError("weight for unknown feature id '" + id + "'");
    if (!(c >= 1.0) || !std::isfinite(c))
      throw ValidationError("coefficient for '" + id + "' must be a finite value >= 1");
    if (excluded.count(id)) throw ValidationError("feature '" + id + "' is both weighted and excluded");
  }
  for (const auto& id : excluded)
    if (!registry.contains(id)) throw ValidationError("exclusion of unknown feature id '" + id + "'");
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Original: return "Original";
    case Strategy::Automatic: return "Automatic";
    case Strategy::Merged: return "Merged";
  }
  return "?";
}

Strategy parse_strategy(std::string_view name) {
  auto n = lowercase(name);
  if (n == "original") return Strategy::Original;
  if (n == "automatic") return Strategy::Automatic;
  if (n == "merged") return Strategy::Merged;
  throw ValidationError("unknown strategy '" + std::string(name) + "' (expected Original, Automatic or Merged)");
}

std::optional<std::string> merged_class(const std::string& original) {
  if (original == "Aw" || original == "HQ") return "POS";
  if (original == "SQ" || original == "SP") return "NEG";
  return std::nullopt;
}

std::vector<std::string> BaselineProfile::class_labels(Strategy s) const {
  std::set<std::string> labels;
  if (auto it = classes.find(s); it != classes.end())
    for (const auto& [doc, label] : it->second) labels.insert(label);
  return {labels.begin(), labels.end()};
}

bool BaselineProfile::has_strategy(Strategy s) const {
  auto it = classes.find(s);
  return it != classes.end() && it->second.size() == raw.size() && !raw.empty();
}

std::vector<std::size_t> BaselineProfile::members(Strategy s, const std::string& label) const {
  std::vector<std::size_t> out;
  auto it = classes.find(s);
  if (it == classes.end()) return out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto c = it->second.find(raw[i].doc_id);
    if (c != it->second.end() && c->second == label) out.push_back(i);
  }
  return out;
}

std::vector<double> feature_means(const std::vector<FeatureVector>& vectors) {
  if (vectors.empty()) return {};
  const std::size_t dims = vectors.front().size();
  std::vector<double> means(dims, kNaN);
  std::vector<double> column;
  for (std::size_t f = 0; f < dims; ++f) {
    column.clear();
    for (const auto& v : vectors)
      if (!v.missing[f]) column.push_back(v.values[f]);
    if (!column.empty()) means[f] = stats::compensated_sum(column) / static_cast<double>(column.size());
  }
  return means;
}

FeatureVector normalize(const FeatureVector& v, const FeatureRegistry& registry, const std::vector<double>& means,
                        const std::set<std::string>& force_excluded, const WeightConfig& w) {
  if (v.size() != registry.size() || means.size() != registry.size())
    throw ValidationError("vector '" + v.doc_id + "' does not match the registry");
  FeatureVector out;
  out.doc_id = v.doc_id;
  out.values.assign(v.size(), kNaN);
  out.missing = v.missing;
  out.imputed.assign(v.size(), false);
  out.active.assign(v.size(), false);
  for (std::size_t f = 0; f < v.size(); ++f) {
    const auto& id = registry[f].id;
    if (!registry[f].enabled || w.is_excluded(id) || force_excluded.count(id)) continue;
    const double c = w.coefficient(id);
    out.active[f] = true;
    if (v.missing[f]) {
      out.values[f] = 100.0 / c;
      out.imputed[f] = true;
      continue;
    }
    if (std::isnan(means[f]) || means[f] == 0.0)
      throw ValidationError("feature '" + id + "' has a zero or undefined baseline mean");
    out.values[f] = v.values[f] / (means[f] * c) * 100.0;
  }
  return out;
}

FeatureVector normalize(const FeatureVector& v, const BaselineProfile& baseline, const WeightConfig& w) {
  return normalize(v, baseline.registry, baseline.means, baseline.force_excluded, w);
}

BaselineProfile compute_baseline(const std::vector<FeatureVector>& vectors, const FeatureRegistry& registry,
                                 const std::map<std::string, std::string>& original,
                                 const std::map<std::string, std::string>& automatic, const WeightConfig& weights) {
  if (vectors.size() < 2) throw ValidationError("a baseline needs at least two documents");
  weights.validate(registry);
  BaselineProfile b;
  b.registry = registry;
  b.weights = weights;
  b.raw = vectors;
  b.means = feature_means(vectors);
  b.force_excluded = zero_or_absent(registry, b.means, &b.warnings);

  bool mergeable = true;
  for (const auto& v : vectors) {
    auto it = original.find(v.doc_id);
    if (it == original.end() || it->second.empty())
      throw ValidationError("baseline document '" + v.doc_id + "' has no class label");
    b.classes[Strategy::Original][v.doc_id] = it->second;
    if (auto m = merged_class(it->second))
      b.classes[Strategy::Merged][v.doc_id] = *m;
    else
      mergeable = false;
    if (auto a = automatic.find(v.doc_id); a != automatic.end()) b.classes[Strategy::Automatic][v.doc_id] = a->second;
  }
  if (!mergeable) {
    b.classes.erase(Strategy::Merged);
    b.warnings.push_back("Merged strategy unavailable: labels other than Aw/HQ/SQ/SP present");
  }
  if (!automatic.empty() && !b.has_strategy(Strategy::Automatic))
    throw ValidationError("automatic class map does not cover every baseline document");

  for (const auto& v : vectors) {
    b.unweighted.push_back(normalize(v, registry, b.means, b.force_excluded, WeightConfig::unweighted()));
    b.weighted.push_back(normalize(v, registry, b.means, b.force_excluded, weights));
  }
  return b;
}

std::vector<FeatureVector> normalize_internal(const std::vector<FeatureVector>& vectors,
                                              const FeatureRegistry& registry, std::vector<std::string>* warnings) {
  auto means = feature_means(vectors);
  auto excluded = zero_or_absent(registry, means, warnings);
  std::vector<FeatureVector> out;
  out.reserve(vectors.size());
  for (const auto& v : vectors) out.push_back(normalize(v, registry, means, excluded, WeightConfig::unweighted()));
  return out;
}

}  // namespace stylo
