#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace stylo {

enum class FeatureGroup { Lexical, Syntactic, Semantic };

std::string to_string(FeatureGroup g);

/// Feature values computed for one document by one or more families.
/// Every id a family owns is either in `values` or in `missing`.
struct FeatureProfile {
  std::map<std::string, double> values;
  std::set<std::string> missing;

  void set(const std::string& id, double v) {
    values[id] = v;
    missing.erase(id);
  }
  void mark_missing(const std::string& id) {
    values.erase(id);
    missing.insert(id);
  }
  std::optional<double> get(const std::string& id) const {
    auto it = values.find(id);
    return it == values.end() ? std::nullopt : std::optional<double>(it->second);
  }
  /// Union; ids in `other` override ours.
  void merge(const FeatureProfile& other);
};

struct FeatureSpec {
  std::string id;
  FeatureGroup group = FeatureGroup::Lexical;
  bool enabled = true;
  friend bool operator==(const FeatureSpec&, const FeatureSpec&) = default;
};

/// Ordered, authoritative list of feature ids. The order is shared by every
/// FeatureVector built against it.
class FeatureRegistry {
 public:
  FeatureRegistry() = default;
  explicit FeatureRegistry(std::vector<FeatureSpec> specs);

  /// All 36 computed ids; 33 are enabled by default.
  static FeatureRegistry standard();

  std::size_t size() const { return specs_.size(); }
  const std::vector<FeatureSpec>& specs() const { return specs_; }
  const FeatureSpec& operator[](std::size_t i) const { return specs_[i]; }
  std::optional<std::size_t> index_of(std::string_view id) const;
  bool contains(std::string_view id) const { return index_of(id).has_value(); }
  /// Throws ValidationError on an unknown id.
  void set_enabled(std::string_view id, bool enabled);
  std::size_t enabled_count() const;
  std::vector<std::string> enabled_ids() const;
  std::vector<std::string> ids() const;

  friend bool operator==(const FeatureRegistry&, const FeatureRegistry&) = default;

 private:
  std::vector<FeatureSpec> specs_;
};

namespace feature {
// Lexical
inline constexpr const char* kDTextualValue = "d_textual_value";
inline constexpr const char* kLr1 = "lr1";
inline constexpr const char* kLr2 = "lr2";
inline constexpr const char* kLr3 = "lr3";
inline constexpr const char* kConcreteness = "concreteness";
inline constexpr const char* kNounPronounRatio = "noun_pronoun_ratio";
inline constexpr const char* kDeicticArticleRatio = "deictic_article_ratio";
inline constexpr const char* kDefiniteArticleFreq = "definite_article_freq";
inline constexpr const char* kAttributiveAdjFreq = "attributive_adj_freq";
inline constexpr const char* kEmphaticParticleFreq = "emphatic_particle_freq";
inline constexpr const char* kDemonstrativeFreq = "demonstrative_freq";
inline constexpr const char* kFirstPersonRatio = "first_person_ratio";
inline constexpr const char* kHapaxRatio = "hapax_ratio";
inline constexpr const char* kLexicalOverlap2 = "lexical_overlap_2";
inline constexpr const char* kLexicalOverlap3 = "lexical_overlap_3";
// Syntactic
inline constexpr const char* kRelativeRatio = "relative_ratio";
inline constexpr const char* kSubordinateRatio = "subordinate_ratio";
inline constexpr const char* kPresentRatio = "present_ratio";
inline constexpr const char* kPastRatio = "past_ratio";
inline constexpr const char* kParticipleRatio = "participle_ratio";
inline constexpr const char* kModifierPerNoun = "modifier_per_noun";
inline constexpr const char* kAvgGraphDepth = "avg_graph_depth";
inline constexpr const char* kVerbDensity = "verb_density";
inline constexpr const char* kTemporalStability = "temporal_stability";
inline constexpr const char* kHypotacticDepth = "hypotactic_depth";
// Semantic
inline constexpr const char* kAvgSemanticOverlap = "avg_semantic_overlap";
inline constexpr const char* kTfiPerSent = "tfi_per_sent";
inline constexpr const char* kTfiPer1000 = "tfi_per_1000";

/// "conn_<category>_<pos|neg>"
std::string connective_id(std::string_view category, std::string_view polarity);
/// The eight connective ids in registry order.
const std::vector<std::string>& connective_ids();
}  // namespace feature

}  // namespace stylo
