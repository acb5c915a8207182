#include "stylo/evaluation.hpp"

#include <set>
#include <sstream>

#include "stylo/csv.hpp"
#include "stylo/error.hpp"
#include "stylo/stats.hpp"

namespace stylo {

std::vector<RatedPair> join(const std::vector<DpiScore>& scores, const std::map<std::string, double>& ratings,
                            std::vector<std::string>* unrated) {
  std::vector<RatedPair> out;
  std::set<std::string> seen;
  for (const auto& s : scores) {
    if (!seen.insert(s.doc_id).second) throw ValidationError("document '" + s.doc_id + "' scored twice");
    auto it = ratings.find(s.doc_id);
    if (it == ratings.end()) {
      if (unrated) unrated->push_back(s.doc_id);
      continue;
    }
    out.push_back({s.doc_id, s.score, it->second});
  }
  return out;
}

CorrelationReport evaluate(const std::vector<DpiScore>& scores, const std::map<std::string, double>& ratings) {
  CorrelationReport r;
  const auto pairs = join(scores, ratings, &r.unrated);
  if (pairs.size() < 3)
    throw ValidationError("only " + std::to_string(pairs.size()) + " documents have both a score and a rating (need 3)");
  std::vector<double> x, y;
  for (const auto& p : pairs) {
    x.push_back(p.system_score);
    y.push_back(p.human_rating);
  }
  const auto pr = stats::pearson_with_p(x, y);
  const auto kr = stats::kendall(x, y);
  r.n = static_cast<std::int64_t>(pairs.size());
  r.pearson_r = pr.r;
  r.pearson_p = pr.p;
  r.kendall_tau = kr.tau;
  r.kendall_p = stats::kendall_p(kr.tau, kr.n, kr.ties);
  return r;
}

const std::vector<std::string>& hanna_dimensions() {
  static const std::vector<std::string> dims{"Relevance", "Coherence", "Empathy", "Surprise", "Engagement", "Complexity"};
  return dims;
}

std::map<std::string, double> load_ratings(const std::filesystem::path& path) {
  const auto t = csv::read_file(path);
  auto id = t.column("doc_id");
  if (!id) id = t.column("Story ID");
  if (!id) throw ParseError("ratings file '" + path.string() + "' has no doc_id or 'Story ID' column");

  auto bad = [&](std::size_t r, const std::string& cell) {
    return ParseError("malformed rating '" + cell + "' in '" + path.string() + "'", t.row_lines[r]);
  };

  std::map<std::string, double> out;
  if (auto rc = t.column("rating")) {
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
      const auto& row = t.rows[r];
      auto v = csv::parse_number(row[*rc]);
      if (!v) throw bad(r, row[*rc]);
      if (!out.emplace(row[*id], *v).second)
        throw ValidationError("duplicate rating for '" + row[*id] + "' in '" + path.string() + "'");
    }
    return out;
  }

  std::vector<std::size_t> cols;
  for (const auto& d : hanna_dimensions()) {
    auto c = t.column(d);
    if (!c) throw ParseError("ratings file '" + path.string() + "' lacks a 'rating' column or HANNA column '" + d + "'");
    cols.push_back(*c);
  }
  // doc -> per-dimension values over annotators
  std::map<std::string, std::vector<std::vector<double>>> acc;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    auto& dims = acc[row[*id]];
    dims.resize(cols.size());
    for (std::size_t k = 0; k < cols.size(); ++k) {
      auto v = csv::parse_number(row[cols[k]]);
      if (!v) throw bad(r, row[cols[k]]);
      dims[k].push_back(*v);
    }
  }
  for (const auto& [doc, dims] : acc) {
    std::vector<double> per_dim;
    for (const auto& vals : dims) per_dim.push_back(stats::compensated_sum(vals) / static_cast<double>(vals.size()));
    out[doc] = stats::compensated_sum(per_dim) / static_cast<double>(per_dim.size());
  }
  return out;
}

std::vector<ReportRow> evaluate_all(const std::vector<DpiScore>& scores, const std::map<std::string, double>& ratings) {
  std::vector<std::pair<Strategy, std::string>> order;
  std::map<std::pair<Strategy, std::string>, std::vector<DpiScore>> groups;
  for (const auto& s : scores) {
    auto key = std::make_pair(s.strategy, s.formula);
    auto [it, fresh] = groups.try_emplace(key);
    if (fresh) order.push_back(key);
    it->second.push_back(s);
  }
  std::vector<ReportRow> out;
  for (const auto& key : order) out.push_back({key.first, key.second, evaluate(groups[key], ratings)});
  return out;
}

std::string report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "strategy,formula,pearson,pearson_p,kendall,kendall_p,n\n";
  for (const auto& r : rows)
    out << csv::join_row({to_string(r.strategy), r.formula, csv::fixed6(r.report.pearson_r),
                          csv::fixed6(r.report.pearson_p), csv::fixed6(r.report.kendall_tau),
                          csv::fixed6(r.report.kendall_p), std::to_string(r.report.n)})
        << '\n';
  return out.str();
}

}  // namespace stylo
