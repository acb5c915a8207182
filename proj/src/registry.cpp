#include "stylo/registry.hpp"

#include <unordered_set>

#include "stylo/error.hpp"

namespace stylo {

std::string to_string(FeatureGroup g) {
  switch (g) {
    case FeatureGroup::Lexical: return "lexical";
    case FeatureGroup::Syntactic: return "syntactic";
    case FeatureGroup::Semantic: return "semantic";
  }
  return "?";
}

void FeatureProfile::merge(const FeatureProfile& other) {
  for (const auto& id : other.missing) mark_missing(id);
  for (const auto& [id, v] : other.values) set(id, v);
}

namespace feature {

std::string connective_id(std::string_view category, std::string_view polarity) {
  return "conn_" + std::string(category) + "_" + std::string(polarity);
}

const std::vector<std::string>& connective_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const char* cat : {"additive", "causal", "temporal", "logical"})
      for (const char* pol : {"pos", "neg"}) out.push_back(connective_id(cat, pol));
    return out;
  }();
  return ids;
}

}  // namespace feature

FeatureRegistry::FeatureRegistry(std::vector<FeatureSpec> specs) : specs_(std::move(specs)) {
  std::unordered_set<std::string> seen;
  for (const auto& s : specs_)
    if (!seen.insert(s.id).second) throw ValidationError("duplicate feature id '" + s.id + "'");
}

FeatureRegistry FeatureRegistry::standard() {
  using namespace feature;
  std::vector<FeatureSpec> specs;
  auto add = [&](const std::string& id, FeatureGroup g, bool enabled = true) {
    specs.push_back({id, g, enabled});
  };
  const auto L = FeatureGroup::Lexical;
  const auto S = FeatureGroup::Syntactic;
  const auto M = FeatureGroup::Semantic;

  add(kDTextualValue, L);
  add(kLr1, L);
  add(kLr2, L);
  add(kLr3, L);
  add(kConcreteness, L);
  add(kNounPronounRatio, L);
  add(kDeicticArticleRatio, L);
  add(kDefiniteArticleFreq, L);
  add(kAttributiveAdjFreq, L);
  add(kEmphaticParticleFreq, L);
  add(kDemonstrativeFreq, L);
  add(kFirstPersonRatio, L);
  add(kHapaxRatio, L);
  add(kLexicalOverlap2, L, false);
  add(kLexicalOverlap3, L, false);
  for (const auto& id : connective_ids()) add(id, L);

  add(kRelativeRatio, S);
  add(kSubordinateRatio, S, false);
  add(kPresentRatio, S);
  add(kPastRatio, S);
  add(kParticipleRatio, S);
  add(kModifierPerNoun, S);
  add(kAvgGraphDepth, S);
  add(kVerbDensity, S);
  add(kTemporalStability, S);
  add(kHypotacticDepth, S);

  add(kAvgSemanticOverlap, M);
  add(kTfiPerSent, M);
  add(kTfiPer1000, M);
  return FeatureRegistry(std::move(specs));
}

std::optional<std::size_t> FeatureRegistry::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < specs_.size(); ++i)
    if (specs_[i].id == id) return i;
  return std::nullopt;
}

void FeatureRegistry::set_enabled(std::string_view id, bool enabled) {
  auto i = index_of(id);
  if (!i) throw ValidationError("unknown feature id '" + std::string(id) + "'");
  specs_[*i].enabled = enabled;
}

std::size_t FeatureRegistry::enabled_count() const {
  std::size_t n = 0;
  for (const auto& s : specs_) n += s.enabled ? 1 : 0;
  return n;
}

std::vector<std::string> FeatureRegistry::enabled_ids() const {
  std::vector<std::string> out;
  for (const auto& s : specs_)
    if (s.enabled) out.push_back(s.id);
  return out;
}

std::vector<std::string> FeatureRegistry::ids() const {
  std::vector<std::string> out;
  for (const auto& s : specs_) out.push_back(s.id);
  return out;
}

}  // namespace stylo
