#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stylo/config.hpp"
#include "stylo/graph.hpp"
#include "stylo/manifest.hpp"
#include "stylo/registry.hpp"
#include "stylo/resources.hpp"
#include "stylo/vectors.hpp"

namespace stylo {

struct ExtractionResult {
  std::string doc_id;
  std::optional<FeatureProfile> profile;  // empty when extraction failed
  std::string error;
};

/// Lexical, syntactic and semantic features of one manifest entry. Semantic
/// features are missing when the annotation files are absent.
FeatureProfile extract_document(const ManifestEntry& entry, const LexicalResources& resources,
                                const PipelineConfig& cfg);

/// Extracts every entry, in parallel across documents. Failures are captured
/// per document; results keep manifest order.
std::vector<ExtractionResult> extract_all(const std::vector<ManifestEntry>& entries,
                                          const LexicalResources& resources, const PipelineConfig& cfg);
/// Single-threaded reference for extract_all.
std::vector<ExtractionResult> extract_all_serial(const std::vector<ManifestEntry>& entries,
                                                 const LexicalResources& resources, const PipelineConfig& cfg);

/// `doc_id,<every registry id>`; missing values are empty cells. Failed
/// documents are skipped.
std::string features_csv(const std::vector<ExtractionResult>& results, const FeatureRegistry& registry);
/// `doc_id,feature` for every missing value of every extracted document.
std::string missing_csv(const std::vector<ExtractionResult>& results, const FeatureRegistry& registry);

/// Reads a features CSV into vectors aligned to `registry`. Unknown columns
/// and duplicate doc ids are errors; absent columns and empty cells are missing.
std::vector<FeatureVector> read_features_csv(const std::filesystem::path& path, const FeatureRegistry& registry);

struct ClassLabels {
  std::map<std::string, std::string> original;
  std::map<std::string, std::string> automatic;  // may be empty
};

/// `doc_id,class` (or `original`) with an optional `automatic` column.
ClassLabels read_labels_csv(const std::filesystem::path& path);

struct ClusterResult {
  SimilarityMatrix similarity;  // raw Pearson
  SimilarityMatrix refined;     // Rohde-transformed
  WeightedGraph graph;
  LouvainResult louvain;
  std::vector<std::string> warnings;
};

/// Internal normalization, Pearson matrix, Rohde refinement and Louvain.
ClusterResult cluster_vectors(const std::vector<FeatureVector>& vectors, const FeatureRegistry& registry,
                              const PipelineConfig& cfg);

/// Labels "C0", "C1", ... from a clustering (C0 is the largest community).
std::map<std::string, std::string> automatic_labels(const ClusterResult& r);

}  // namespace stylo
