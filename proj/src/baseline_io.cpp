#include "stylo/baseline_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "stylo/csv.hpp"
#include "stylo/error.hpp"
#include "stylo/stats.hpp"

namespace stylo {
namespace {

using json = nlohmann::json;

json number(double x) { return std::isnan(x) ? json(nullptr) : json(x); }

double number(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (!j.is_number()) throw ParseError("baseline: expected a number");
  return j.get<double>();
}

json bits(const std::vector<bool>& v) {
  std::string s;
  for (bool b : v) s.push_back(b ? '1' : '0');
  return s;
}

std::vector<bool> bits(const json& j, std::size_t n) {
  auto s = j.get<std::string>();
  if (s.size() != n) throw ParseError("baseline: mask length mismatch");
  std::vector<bool> out;
  for (char c : s) out.push_back(c == '1');
  return out;
}

json vector_json(const FeatureVector& v) {
  json values = json::array();
  for (double x : v.values) values.push_back(number(x));
  return {{"doc_id", v.doc_id}, {"values", values}, {"missing", bits(v.missing)},
          {"imputed", bits(v.imputed)}, {"active", bits(v.active)}};
}

FeatureVector vector_from(const json& j, std::size_t n) {
  FeatureVector v;
  v.doc_id = j.at("doc_id").get<std::string>();
  for (const auto& x : j.at("values")) v.values.push_back(number(x));
  if (v.values.size() != n) throw ParseError("baseline: vector '" + v.doc_id + "' has the wrong length");
  v.missing = bits(j.at("missing"), n);
  v.imputed = bits(j.at("imputed"), n);
  v.active = bits(j.at("active"), n);
  return v;
}

FeatureGroup parse_group(const std::string& s) {
  if (s == "lexical") return FeatureGroup::Lexical;
  if (s == "syntactic") return FeatureGroup::Syntactic;
  if (s == "semantic") return FeatureGroup::Semantic;
  throw ParseError("baseline: unknown feature group '" + s + "'");
}

}  // namespace

double normalization_residual(const BaselineProfile& b) {
  double worst = 0.0;
  if (b.unweighted.empty()) return worst;
  std::vector<double> col;
  for (std::size_t f = 0; f < b.registry.size(); ++f) {
    if (!b.unweighted.front().active[f]) continue;
    col.clear();
    for (const auto& v : b.unweighted) col.push_back(v.values[f]);
    double mean = stats::compensated_sum(col) / static_cast<double>(col.size());
    worst = std::max(worst, std::abs(mean - 100.0));
  }
  return worst;
}

std::string baseline_to_json(const BaselineProfile& b) {
  const double residual = normalization_residual(b);
  if (!(residual <= 1e-9))
    throw ValidationError("baseline self-test failed: normalized column mean deviates from 100 by " +
                          std::to_string(residual));
  json j;
  j["format"] = "stylo-baseline";
  j["version"] = kBaselineFormatVersion;
  json reg = json::array();
  for (const auto& s : b.registry.specs()) reg.push_back({{"id", s.id}, {"group", to_string(s.group)}, {"enabled", s.enabled}});
  j["registry"] = reg;
  json means = json::array();
  for (double m : b.means) means.push_back(number(m));
  j["means"] = means;
  j["force_excluded"] = b.force_excluded;
  j["warnings"] = b.warnings;
  j["weights"] = {{"coefficients", b.weights.coefficients}, {"excluded", b.weights.excluded}};
  for (const auto* name : {"raw", "unweighted", "weighted"}) j[name] = json::array();
  for (const auto& v : b.raw) j["raw"].push_back(vector_json(v));
  for (const auto& v : b.unweighted) j["unweighted"].push_back(vector_json(v));
  for (const auto& v : b.weighted) j["weighted"].push_back(vector_json(v));
  json classes = json::object();
  for (const auto& [s, m] : b.classes) classes[to_string(s)] = m;
  j["classes"] = classes;
  return j.dump(1) + "\n";
}

BaselineProfile baseline_from_json(const std::string& text) {
  BaselineProfile b;
  try {
    const auto j = json::parse(text);
    if (j.value("format", "") != "stylo-baseline") throw ParseError("not a baseline file");
    if (j.at("version").get<int>() != kBaselineFormatVersion)
      throw ParseError("unsupported baseline version " + std::to_string(j.at("version").get<int>()));
    std::vector<FeatureSpec> specs;
    for (const auto& s : j.at("registry"))
      specs.push_back({s.at("id").get<std::string>(), parse_group(s.at("group").get<std::string>()),
                       s.at("enabled").get<bool>()});
    b.registry = FeatureRegistry(std::move(specs));
    const auto n = b.registry.size();
    for (const auto& m : j.at("means")) b.means.push_back(number(m));
    if (b.means.size() != n) throw ParseError("baseline: means have the wrong length");
    b.force_excluded = j.at("force_excluded").get<std::set<std::string>>();
    b.warnings = j.at("warnings").get<std::vector<std::string>>();
    b.weights.coefficients = j.at("weights").at("coefficients").get<std::map<std::string, double>>();
    b.weights.excluded = j.at("weights").at("excluded").get<std::set<std::string>>();
    for (const auto& v : j.at("raw")) b.raw.push_back(vector_from(v, n));
    for (const auto& v : j.at("unweighted")) b.unweighted.push_back(vector_from(v, n));
    for (const auto& v : j.at("weighted")) b.weighted.push_back(vector_from(v, n));
    if (b.unweighted.size() != b.raw.size() || b.weighted.size() != b.raw.size())
      throw ParseError("baseline: vector counts disagree");
    for (const auto& [s, m] : j.at("classes").items())
      b.classes[parse_strategy(s)] = m.get<std::map<std::string, std::string>>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("baseline: ") + e.what());
  }
  b.weights.validate(b.registry);
  return b;
}

void save_baseline(const BaselineProfile& b, const std::filesystem::path& path) {
  csv::write_text_file(path, baseline_to_json(b));
}

BaselineProfile load_baseline(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read baseline '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return baseline_from_json(ss.str());
}

}  // namespace stylo
