#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "stylo/dpi.hpp"

namespace stylo {

struct RatedPair {
  std::string doc_id;
  double system_score = 0.0;
  double human_rating = 0.0;
};

struct CorrelationReport {
  std::int64_t n = 0;
  double pearson_r = 0.0;
  double pearson_p = 1.0;
  double kendall_tau = 0.0;
  double kendall_p = 1.0;
  std::vector<std::string> unrated;  // scored docs without a rating
};

/// Inner join of scores and ratings on doc_id, in score order. Throws
/// ValidationError on a doc scored twice.
std::vector<RatedPair> join(const std::vector<DpiScore>& scores, const std::map<std::string, double>& ratings,
                            std::vector<std::string>* unrated = nullptr);

/// Pearson and Kendall tau-b with two-sided p. Throws ValidationError when
/// fewer than 3 documents are in both inputs.
CorrelationReport evaluate(const std::vector<DpiScore>& scores, const std::map<std::string, double>& ratings);

/// The six HANNA dimensions.
const std::vector<std::string>& hanna_dimensions();

/// Loads per-document ratings. Accepts either a `doc_id,rating` table or a
/// HANNA annotation table (`doc_id` or `Story ID`, the six dimension columns,
/// one row per annotator). HANNA ratings are averaged over annotators per
/// dimension, then over the dimensions.
std::map<std::string, double> load_ratings(const std::filesystem::path& path);

struct ReportRow {
  Strategy strategy = Strategy::Original;
  std::string formula;
  CorrelationReport report;
};

/// Groups scores by (strategy, formula), in first-seen order, and evaluates each.
std::vector<ReportRow> evaluate_all(const std::vector<DpiScore>& scores, const std::map<std::string, double>& ratings);

/// `strategy,formula,pearson,pearson_p,kendall,kendall_p,n`
std::string report_csv(const std::vector<ReportRow>& rows);

}  // namespace stylo
