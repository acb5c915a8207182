#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "stylo/vectors.hpp"

namespace stylo {

struct DpiTerm {
  std::string label;
  int sign = 1;  // +1 or -1
  friend bool operator==(const DpiTerm&, const DpiTerm&) = default;
};

/// Signed combination of class-average similarities, e.g. "Aw-SP-SQ".
struct DpiFormula {
  std::vector<DpiTerm> terms;
  std::string text;
};

struct DpiScore {
  std::string doc_id;
  std::map<std::string, double> class_similarities;
  double score = 0.0;
  std::string formula;
  Strategy strategy = Strategy::Original;
};

/// Grammar: term (("+"|"-") term)*, the first term implicitly positive.
/// Labels must be in `labels`; a repeated label is a ValidationError.
DpiFormula parse_formula(std::string_view text, const std::vector<std::string>& labels);
DpiFormula parse_formula(std::string_view text, const BaselineProfile& baseline, Strategy strategy);

/// Mean Pearson similarity of the candidate to each class's weighted baseline
/// vectors. With `transformed`, each similarity goes through the Rohde
/// transform before averaging.
std::map<std::string, double> class_similarities(const FeatureVector& candidate, const BaselineProfile& baseline,
                                                 Strategy strategy, bool transformed = false);

/// Sum of signed class similarities.
double combine(const DpiFormula& formula, const std::map<std::string, double>& similarities);

DpiScore score(const FeatureVector& candidate, const BaselineProfile& baseline, Strategy strategy,
               const DpiFormula& formula, bool transformed = false);

/// Built-in formulas per strategy.
std::vector<std::string> preset_formulas(Strategy strategy);

/// `doc_id,score,sim_<class>...,formula,strategy`; one row per score. The sim
/// columns are the sorted union of classes; cells of other strategies are empty.
std::string scores_csv(const std::vector<DpiScore>& scores);

/// Reads a scores CSV written by scores_csv.
std::vector<DpiScore> read_scores_csv(const std::string& path);

}  // namespace stylo
