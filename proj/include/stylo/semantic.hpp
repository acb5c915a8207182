#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "stylo/document.hpp"
#include "stylo/registry.hpp"

namespace stylo::semantic {

struct SentenceEmbedding {
  std::string doc_id;
  int sent_index = 0;
  std::vector<double> vector;
};

enum class RelationType { SubjVerb, SubjNom, VerbObj, PassiveSubjVerb };

std::string to_string(RelationType r);
/// Throws ValidationError on anything but the four relation names.
RelationType parse_relation_type(std::string_view s);

struct FigurativeRecord {
  std::string doc_id;
  int sent_index = 0;
  RelationType relation_type = RelationType::SubjVerb;
  int target_token_index = 0;
  double topk_mean_similarity = 0.0;
  std::optional<double> neutral_cosine;
  bool figurative = false;
};

struct Thresholds {
  double candidate = 0.40;
  double control = 0.30;
};

/// Reads `*.emb.jsonl`; validates the schema and a constant dimension.
std::vector<SentenceEmbedding> load_embeddings(const std::filesystem::path& path);
std::vector<SentenceEmbedding> parse_embeddings(std::istream& in, const std::string& source = "<stream>");

/// Reads `*.fig.jsonl`; validates field types and value ranges.
std::vector<FigurativeRecord> load_figurative(const std::filesystem::path& path);
std::vector<FigurativeRecord> parse_figurative(std::istream& in, const std::string& source = "<stream>");

/// Plain cosine; throws UndefinedStatistic for a zero vector or mismatched sizes.
double cosine(const std::vector<double>& a, const std::vector<double>& b);

/// Mean cosine of adjacent sentence embeddings; nullopt for a one-sentence
/// document. Throws ValidationError listing sentence indices with no embedding.
std::optional<double> compute_semantic_overlap(const Document& doc, const std::vector<SentenceEmbedding>& embeddings);

/// Candidate when topk_mean_similarity < candidate threshold; a candidate
/// with a neutral-context cosine is figurative only if that cosine is below
/// the control threshold.
bool decide_figurative(double topk_mean_similarity, std::optional<double> neutral_cosine, const Thresholds& t);

struct FigurativeIndices {
  double per_sentence = 0.0;
  double per_1000_tokens = 0.0;
  int figurative_count = 0;
  int flag_mismatches = 0;  // stored flag disagrees with the recomputed decision
};

/// Counts figurative relations of `doc`. When a record carries a neutral
/// cosine the flag is recomputed from the scores and the recomputation wins.
/// Throws ValidationError when token_count is zero or a record names another doc.
FigurativeIndices aggregate_figurative(const Document& doc, const std::vector<FigurativeRecord>& records,
                                       const Thresholds& t = {});

/// avg_semantic_overlap, tfi_per_sent, tfi_per_1000; features whose sidecar
/// input is absent are marked missing.
FeatureProfile compute_all(const Document& doc, const std::optional<std::vector<SentenceEmbedding>>& embeddings,
                           const std::optional<std::vector<FigurativeRecord>>& records, const Thresholds& t = {});

}  // namespace stylo::semantic
