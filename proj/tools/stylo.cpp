#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stylo/commands.hpp"
#include "stylo/config.hpp"
#include "stylo/error.hpp"
#include "stylo/vectors.hpp"

namespace fs = std::filesystem;

namespace {

struct Common {
  std::string config;
  std::string resources;
  std::string out;
  std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* app, Common& c, bool needs_resources) {
  app->add_option("--config", c.config, "JSON configuration file")->check(CLI::ExistingFile);
  if (needs_resources) app->add_option("--resources", c.resources, "Lexical resource directory");
  app->add_option("--out", c.out, "Output path")->required();
}

stylo::PipelineConfig effective(const Common& c) {
  auto cfg = c.config.empty() ? stylo::PipelineConfig{} : stylo::load_config(c.config);
  if (!c.resources.empty()) cfg.resources = c.resources;
  if (c.seed) cfg.seed = *c.seed;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stylometric narrative-quality engine"};
  app.require_subcommand(1);

  Common common;
  std::string manifest, features, labels, baseline, candidates, scores, ratings, strategy;
  std::vector<std::string> formulas;
  bool all_presets = false;

  auto* extract = app.add_subcommand("extract", "Extract raw features for every document of a manifest");
  add_common(extract, common, true);
  extract->add_option("--manifest", manifest, "Manifest CSV")->required()->check(CLI::ExistingFile);

  auto* base = app.add_subcommand("baseline", "Build the gold-standard baseline profile");
  add_common(base, common, false);
  base->add_option("--features", features, "Raw features CSV")->required()->check(CLI::ExistingFile);
  base->add_option("--labels", labels, "Class labels CSV")->required()->check(CLI::ExistingFile);
  base->add_option("--seed", common.seed, "Louvain seed for derived automatic classes");

  auto* cluster = app.add_subcommand("cluster", "Similarity network and modularity communities");
  add_common(cluster, common, false);
  cluster->add_option("--features", features, "Raw features CSV")->required()->check(CLI::ExistingFile);
  cluster->add_option("--seed", common.seed, "Louvain seed");

  auto* score = app.add_subcommand("score", "DPI scores of candidates against a baseline");
  add_common(score, common, false);
  score->add_option("--features", candidates, "Candidate raw features CSV")->required()->check(CLI::ExistingFile);
  score->add_option("--baseline", baseline, "Baseline file")->required()->check(CLI::ExistingFile);
  score->add_option("--strategy", strategy, "Original, Automatic or Merged");
  score->add_option("--formula", formulas, "DPI formula (repeatable)");
  score->add_flag("--all-presets", all_presets, "Score every built-in formula of every available strategy");

  auto* evaluate = app.add_subcommand("evaluate", "Correlate scores with human ratings");
  evaluate->add_option("--scores", scores, "Scores CSV")->required()->check(CLI::ExistingFile);
  evaluate->add_option("--ratings", ratings, "Ratings CSV")->required()->check(CLI::ExistingFile);
  evaluate->add_option("--out", common.out, "Report CSV")->required();

  auto* check = app.add_subcommand("resources-check", "Validate a lexical resource directory");
  std::string res_dir;
  check->add_option("--resources", res_dir, "Lexical resource directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : stylo::kExitInvalid;
  }

  stylo::PipelineConfig cfg;
  try {
    cfg = effective(common);
    if (!strategy.empty()) cfg.strategy = stylo::parse_strategy(strategy);
    if (!formulas.empty()) cfg.formulas = formulas;
  } catch (const stylo::Error& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return stylo::kExitInvalid;
  }

  try {
    if (*extract) return stylo::cmd_extract(manifest, cfg, common.out, std::cerr);
    if (*base) return stylo::cmd_baseline(features, labels, cfg, common.out, std::cerr);
    if (*cluster) return stylo::cmd_cluster(features, cfg, common.out, std::cerr);
    if (*score) return stylo::cmd_score(candidates, baseline, cfg, all_presets, common.out, std::cerr);
    if (*evaluate) return stylo::cmd_evaluate(scores, ratings, common.out, std::cerr);
    if (*check) return stylo::cmd_resources_check(res_dir, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return stylo::kExitPartial;
  }
  return stylo::kExitInvalid;
}
