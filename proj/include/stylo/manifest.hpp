#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace stylo {

struct ManifestEntry {
  std::string doc_id;
  std::filesystem::path conllu;
  std::optional<std::string> class_label;
  std::optional<double> human_rating;
  std::optional<std::filesystem::path> embeddings;
  std::optional<std::filesystem::path> figurative;
};

/// Reads a `doc_id,path,class,rating,embeddings,figurative` CSV. Relative
/// paths resolve against the manifest's directory. Paths are not checked
/// here; unreadable files surface at extraction time.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);

}  // namespace stylo
