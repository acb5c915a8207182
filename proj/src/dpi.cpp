#include "stylo/dpi.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "stylo/csv.hpp"
#include "stylo/error.hpp"
#include "stylo/similarity.hpp"
#include "stylo/stats.hpp"

namespace stylo {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

DpiFormula parse_formula(std::string_view text, const std::vector<std::string>& labels) {
  DpiFormula f;
  f.text = trim(text);
  if (f.text.empty()) throw ValidationError("empty DPI formula");
  std::set<std::string> seen;
  int sign = 1;
  std::size_t pos = 0;
  const std::string& t = f.text;
  while (true) {
    auto next = t.find_first_of("+-", pos);
    auto label = trim(std::string_view(t).substr(pos, next == std::string::npos ? std::string::npos : next - pos));
    if (label.empty()) throw ValidationError("malformed DPI formula '" + t + "': empty term");
    if (std::find(labels.begin(), labels.end(), label) == labels.end())
      throw ValidationError("unknown class '" + label + "' in formula '" + t + "'");
    if (!seen.insert(label).second) throw ValidationError("class '" + label + "' repeated in formula '" + t + "'");
    f.terms.push_back({label, sign});
    if (next == std::string::npos) break;
    sign = t[next] == '+' ? 1 : -1;
    pos = next + 1;
  }
  return f;
}

DpiFormula parse_formula(std::string_view text, const BaselineProfile& baseline, Strategy strategy) {
  if (!baseline.has_strategy(strategy))
    throw ValidationError("strategy " + to_string(strategy) + " is not available in the baseline");
  return parse_formula(text, baseline.class_labels(strategy));
}

std::map<std::string, double> class_similarities(const FeatureVector& candidate, const BaselineProfile& baseline,
                                                 Strategy strategy, bool transformed) {
  if (!baseline.has_strategy(strategy))
    throw ValidationError("strategy " + to_string(strategy) + " is not available in the baseline");

  std::vector<std::size_t> dims;
  for (std::size_t f = 0; f < candidate.size(); ++f) {
    bool all = candidate.active[f];
    for (const auto& b : baseline.weighted) all = all && b.active[f];
    if (all) dims.push_back(f);
  }
  if (dims.size() < 2) throw ValidationError("fewer than two shared active dimensions");
  auto project = [&](const FeatureVector& v) {
    std::vector<double> out;
    out.reserve(dims.size());
    for (auto d : dims) out.push_back(v.values[d]);
    return out;
  };
  const auto cand = project(candidate);
  if (std::all_of(cand.begin(), cand.end(), [&](double x) { return x == cand.front(); }))
    throw UndefinedStatistic("vector of candidate '" + candidate.doc_id + "' is constant; correlation undefined");

  std::map<std::string, double> out;
  for (const auto& label : baseline.class_labels(strategy)) {
    const auto members = baseline.members(strategy, label);
    if (members.empty()) throw ValidationError("class '" + label + "' has no members");
    std::vector<double> sims;
    for (auto i : members) {
      double r = stats::pearson(cand, project(baseline.weighted[i]));
      sims.push_back(transformed ? rohde(r) : r);
    }
    out[label] = stats::compensated_sum(sims) / static_cast<double>(sims.size());
  }
  return out;
}

double combine(const DpiFormula& formula, const std::map<std::string, double>& similarities) {
  double s = 0.0;
  for (const auto& t : formula.terms) {
    auto it = similarities.find(t.label);
    if (it == similarities.end()) throw ValidationError("no similarity for class '" + t.label + "'");
    s += t.sign * it->second;
  }
  return s;
}

DpiScore score(const FeatureVector& candidate, const BaselineProfile& baseline, Strategy strategy,
               const DpiFormula& formula, bool transformed) {
  DpiScore s;
  s.doc_id = candidate.doc_id;
  s.class_similarities = class_similarities(candidate, baseline, strategy, transformed);
  s.score = combine(formula, s.class_similarities);
  s.formula = formula.text;
  s.strategy = strategy;
  return s;
}

std::vector<std::string> preset_formulas(Strategy strategy) {
  switch (strategy) {
    case Strategy::Original: return {"Aw+HQ-SQ-SP", "Aw-SP", "Aw-SP-SQ", "Aw-SP+HQ"};
    case Strategy::Automatic: return {"C0-C1-C2", "C0-C2", "C0-C2+C1"};
    case Strategy::Merged: return {"POS-NEG"};
  }
  return {};
}

std::string scores_csv(const std::vector<DpiScore>& scores) {
  std::set<std::string> classes;
  for (const auto& s : scores)
    for (const auto& [c, v] : s.class_similarities) classes.insert(c);
  std::vector<std::string> header{"doc_id", "score"};
  for (const auto& c : classes) header.push_back("sim_" + c);
  header.push_back("formula");
  header.push_back("strategy");
  std::ostringstream out;
  out << csv::join_row(header) << '\n';
  for (const auto& s : scores) {
    std::vector<std::string> row{s.doc_id, csv::fixed6(s.score)};
    for (const auto& c : classes) {
      auto it = s.class_similarities.find(c);
      row.push_back(it == s.class_similarities.end() ? "" : csv::fixed6(it->second));
    }
    row.push_back(s.formula);
    row.push_back(to_string(s.strategy));
    out << csv::join_row(row) << '\n';
  }
  return out.str();
}

std::vector<DpiScore> read_scores_csv(const std::string& path) {
  const auto t = csv::read_file(path);
  auto id = t.column("doc_id"), sc = t.column("score"), fo = t.column("formula"), st = t.column("strategy");
  if (!id || !sc || !fo || !st) throw ParseError("scores file '" + path + "' lacks doc_id/score/formula/strategy");
  std::vector<DpiScore> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    DpiScore s;
    s.doc_id = row[*id];
    auto v = csv::parse_number(row[*sc]);
    if (!v) throw ParseError("malformed score '" + row[*sc] + "' in '" + path + "'", t.row_lines[r]);
    s.score = *v;
    s.formula = row[*fo];
    s.strategy = parse_strategy(row[*st]);
    for (std::size_t c = 0; c < t.header.size(); ++c)
      if (t.header[c].rfind("sim_", 0) == 0)
        if (auto x = csv::parse_number(row[c])) s.class_similarities[t.header[c].substr(4)] = *x;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace stylo
