#include "stylo/commands.hpp"

#include <ostream>
#include <sstream>

#include "stylo/baseline_io.hpp"
#include "stylo/csv.hpp"
#include "stylo/dpi.hpp"
#include "stylo/error.hpp"
#include "stylo/evaluation.hpp"
#include "stylo/graph.hpp"
#include "stylo/pipeline.hpp"
#include "stylo/similarity.hpp"

namespace stylo {
namespace {

LexicalResources resources_for(const PipelineConfig& cfg) {
  if (!cfg.resources) throw ValidationError("no resource directory configured (use --resources or 'resources')");
  return load_resources(*cfg.resources);
}

void warn_all(const std::vector<std::string>& warnings, std::ostream& log) {
  for (const auto& w : warnings) log << "warning: " << w << '\n';
}

}  // namespace

int cmd_extract(const std::filesystem::path& manifest, const PipelineConfig& cfg, const std::filesystem::path& out_dir,
                std::ostream& log) {
  const auto entries = load_manifest(manifest);
  const auto res = resources_for(cfg);
  const auto results = extract_all(entries, res, cfg);

  std::ostringstream errors;
  std::size_t failed = 0;
  for (const auto& r : results)
    if (!r.profile) {
      ++failed;
      errors << r.doc_id << '\t' << r.error << '\n';
      log << "error: " << r.doc_id << ": " << r.error << '\n';
    }
  csv::write_text_file(out_dir / "features.csv", features_csv(results, cfg.registry));
  csv::write_text_file(out_dir / "missing.csv", missing_csv(results, cfg.registry));
  csv::write_text_file(out_dir / "errors.log", errors.str());
  log << "extracted " << results.size() - failed << " of " << results.size() << " documents\n";
  return failed ? kExitPartial : kExitOk;
}

int cmd_baseline(const std::filesystem::path& features, const std::filesystem::path& labels,
                 const PipelineConfig& cfg, const std::filesystem::path& out_file, std::ostream& log) {
  const auto vectors = read_features_csv(features, cfg.registry);
  auto classes = read_labels_csv(labels);
  for (const auto& v : vectors)
    if (!classes.original.count(v.doc_id) || classes.original[v.doc_id].empty())
      throw ValidationError("baseline document '" + v.doc_id + "' has no class label");
  if (classes.automatic.empty()) {
    const auto c = cluster_vectors(vectors, cfg.registry, cfg);
    classes.automatic = automatic_labels(c);
    log << "automatic classes derived by clustering (" << community_count(c.louvain.partition) << " communities)\n";
  }
  const auto b = compute_baseline(vectors, cfg.registry, classes.original, classes.automatic, cfg.weights);
  warn_all(b.warnings, log);
  save_baseline(b, out_file);
  log << "baseline of " << b.raw.size() << " documents, normalization residual "
      << normalization_residual(b) << '\n';
  return kExitOk;
}

int cmd_cluster(const std::filesystem::path& features, const PipelineConfig& cfg, const std::filesystem::path& out_dir,
                std::ostream& log) {
  const auto vectors = read_features_csv(features, cfg.registry);
  if (vectors.size() < 2) throw ValidationError("clustering needs at least two documents");
  const auto r = cluster_vectors(vectors, cfg.registry, cfg);
  warn_all(r.warnings, log);
  csv::write_text_file(out_dir / "communities.csv", communities_csv(r.graph, r.louvain.partition));
  csv::write_text_file(out_dir / "modularity.txt", csv::fixed6(r.louvain.modularity) + "\n");
  csv::write_text_file(out_dir / "edges.csv", edges_csv(r.graph));
  csv::write_text_file(out_dir / "similarity.csv", similarity_csv(r.similarity));
  csv::write_text_file(out_dir / "graph.gexf", gexf(r.graph, r.louvain.partition));
  log << community_count(r.louvain.partition) << " communities, Q = " << csv::fixed6(r.louvain.modularity) << '\n';
  return kExitOk;
}

int cmd_score(const std::filesystem::path& candidates, const std::filesystem::path& baseline_path,
              const PipelineConfig& cfg, bool all_presets, const std::filesystem::path& out_file, std::ostream& log) {
  const auto baseline = load_baseline(baseline_path);
  const auto vectors = read_features_csv(candidates, baseline.registry);
  if (vectors.empty()) throw ValidationError("candidate file '" + candidates.string() + "' has no rows");

  std::vector<std::pair<Strategy, DpiFormula>> formulas;
  if (all_presets) {
    for (auto s : {Strategy::Original, Strategy::Automatic, Strategy::Merged}) {
      if (!baseline.has_strategy(s)) continue;
      for (const auto& f : preset_formulas(s)) {
        try {
          formulas.emplace_back(s, parse_formula(f, baseline, s));
        } catch (const ValidationError& e) {
          log << "warning: skipping preset " << f << ": " << e.what() << '\n';
        }
      }
    }
  } else {
    for (const auto& f : cfg.formulas) formulas.emplace_back(cfg.strategy, parse_formula(f, baseline, cfg.strategy));
  }
  if (formulas.empty()) throw ValidationError("no usable DPI formula");

  std::vector<DpiScore> scores;
  std::size_t failed = 0;
  for (const auto& v : vectors) {
    try {
      const auto n = normalize(v, baseline, baseline.weights);
      std::map<Strategy, std::map<std::string, double>> sims;
      for (const auto& [s, f] : formulas) {
        if (!sims.count(s)) sims[s] = class_similarities(n, baseline, s, cfg.transformed_scoring);
        DpiScore d;
        d.doc_id = v.doc_id;
        d.class_similarities = sims[s];
        d.score = combine(f, d.class_similarities);
        d.formula = f.text;
        d.strategy = s;
        scores.push_back(std::move(d));
      }
    } catch (const Error& e) {
      ++failed;
      log << "error: candidate " << v.doc_id << ": " << e.what() << '\n';
    }
  }
  // Group rows by formula, candidates in input order within each.
  std::vector<DpiScore> ordered;
  for (const auto& [s, f] : formulas)
    for (const auto& d : scores)
      if (d.strategy == s && d.formula == f.text) ordered.push_back(d);
  csv::write_text_file(out_file, scores_csv(ordered));
  log << "scored " << vectors.size() - failed << " of " << vectors.size() << " candidates with " << formulas.size()
      << " formula(s)\n";
  return failed ? kExitPartial : kExitOk;
}

int cmd_evaluate(const std::filesystem::path& scores_path, const std::filesystem::path& ratings_path,
                 const std::filesystem::path& out_file, std::ostream& log) {
  const auto scores = read_scores_csv(scores_path.string());
  const auto ratings = load_ratings(ratings_path);
  const auto rows = evaluate_all(scores, ratings);
  for (const auto& r : rows) {
    if (!r.report.unrated.empty())
      log << "warning: " << r.report.unrated.size() << " scored documents have no rating (first: "
          << r.report.unrated.front() << ")\n";
    log << to_string(r.strategy) << ' ' << r.formula << ": pearson " << csv::fixed6(r.report.pearson_r) << " (p "
        << csv::fixed6(r.report.pearson_p) << "), kendall " << csv::fixed6(r.report.kendall_tau) << " (p "
        << csv::fixed6(r.report.kendall_p) << "), n " << r.report.n << '\n';
  }
  csv::write_text_file(out_file, report_csv(rows));
  return kExitOk;
}

int cmd_resources_check(const std::filesystem::path& dir, std::ostream& log) {
  const auto res = load_resources(dir);
  for (const auto& [name, count] : res.summary()) log << name << '\t' << count << '\n';
  return kExitOk;
}

}  // namespace stylo
