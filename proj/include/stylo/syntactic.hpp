#pragma once

#include <set>
#include <string>
#include <vector>

#include "stylo/document.hpp"
#include "stylo/registry.hpp"

namespace stylo::syntactic {

enum class Tense { Present, Past, Future, Progressive, Participle, Infinitive, Other };

/// Name used in hypotactic schemas: Present, Past, Future, Progressive,
/// Participle, Inf, Other.
std::string schema_name(Tense t);

/// A verb together with the auxiliaries attached to it (aux, aux:pass).
struct VerbGroup {
  int head_token_index = 0;
  std::vector<int> aux_token_indices;
  Tense composite_tense = Tense::Other;
  bool is_root = false;
  bool is_finite = false;
};

enum class StabilityDenominator { RootGroups, AllGroups };

struct Options {
  /// Relations that make a verb group a child of the verb group above it.
  std::set<std::string> clausal_deprels{"ccomp", "xcomp",     "advcl",     "acl",
                                        "acl:relcl", "csubj", "parataxis", "conj"};
  StabilityDenominator stability = StabilityDenominator::RootGroups;
};

/// Composite tense of a head verb given its auxiliaries.
Tense composite_tense(const Sentence& s, int head, const std::vector<int>& aux);

/// Groups ordered by head token index. Heads are VERB tokens and AUX tokens
/// that are not attached as aux/aux:pass/cop; auxiliaries join the group of
/// the head they attach to.
std::vector<VerbGroup> unify_verb_groups(const Sentence& sentence);

/// relative_ratio, subordinate_ratio, present/past/participle ratios,
/// modifier_per_noun, verb_density.
FeatureProfile compute_clause_ratios(const Document& doc);

/// Maximum root-to-node edge count of one sentence's tree.
int sentence_depth(const Sentence& s);
double compute_graph_depth(const Document& doc);

/// Dominant-group share of root tenses; nullopt when no root tense is
/// Present/Future/Progressive/Past.
std::optional<double> compute_temporal_stability(const Document& doc, const Options& opts = {});

struct SentenceSchema {
  int sent_index = 0;
  std::string schema;  // e.g. "*Past*(Past(Inf))"
  int depth = 0;
};

struct HypotacticResult {
  std::optional<double> depth;  // mean over sentences with a root verb group
  std::vector<SentenceSchema> schemas;
};

/// Verb-subordination schema of one sentence, or nullopt without a root verb group.
std::optional<SentenceSchema> hypotactic_schema(const Sentence& s, const Options& opts = {});
HypotacticResult compute_hypotactic_depth(const Document& doc, const Options& opts = {});

/// Maximum parenthesis nesting of a rendered schema.
int schema_depth(std::string_view schema);

/// `doc_id TAB sent_index TAB schema` lines.
std::string format_schemas(const std::string& doc_id, const std::vector<SentenceSchema>& schemas);

/// All ten syntactic features.
FeatureProfile compute_all(const Document& doc, const Options& opts = {});

}  // namespace stylo::syntactic
