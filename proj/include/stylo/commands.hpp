#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stylo/config.hpp"

namespace stylo {

enum ExitCode : int { kExitOk = 0, kExitPartial = 1, kExitInvalid = 2 };

/// Writes features.csv, missing.csv and errors.log into `out_dir`.
/// Returns kExitPartial when any document failed.
int cmd_extract(const std::filesystem::path& manifest, const PipelineConfig& cfg, const std::filesystem::path& out_dir,
                std::ostream& log);

/// Writes a baseline file. Without an `automatic` column in the labels, the
/// Automatic classes come from clustering the baseline corpus itself.
int cmd_baseline(const std::filesystem::path& features, const std::filesystem::path& labels,
                 const PipelineConfig& cfg, const std::filesystem::path& out_file, std::ostream& log);

/// Writes communities.csv, modularity.txt, edges.csv, similarity.csv and graph.gexf.
int cmd_cluster(const std::filesystem::path& features, const PipelineConfig& cfg, const std::filesystem::path& out_dir,
                std::ostream& log);

/// Scores candidates with each (strategy, formula) pair. With `all_presets`,
/// every built-in formula of every strategy the baseline supports is used.
/// Returns kExitPartial when a candidate could not be scored.
int cmd_score(const std::filesystem::path& candidates, const std::filesystem::path& baseline,
              const PipelineConfig& cfg, bool all_presets, const std::filesystem::path& out_file, std::ostream& log);

/// Writes the correlation report and prints a summary.
int cmd_evaluate(const std::filesystem::path& scores, const std::filesystem::path& ratings,
                 const std::filesystem::path& out_file, std::ostream& log);

/// Loads a resource directory and prints entry counts.
int cmd_resources_check(const std::filesystem::path& dir, std::ostream& log);

}  // namespace stylo
