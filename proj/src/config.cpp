#include "stylo/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "stylo/error.hpp"

namespace stylo {
namespace {

using json = nlohmann::json;

void check_keys(const json& obj, const std::string& where, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ValidationError("config: '" + where + "' must be an object");
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) throw ValidationError("config: unknown key '" + (where.empty() ? k : where + "." + k) + "'");
}

template <typename T>
T get(const json& obj, const std::string& key, const std::string& where) {
  const auto& v = obj.at(key);
  auto name = where.empty() ? key : where + "." + key;
  if constexpr (std::is_same_v<T, bool>) {
    if (!v.is_boolean()) throw ValidationError("config: '" + name + "' must be a boolean");
  } else if constexpr (std::is_same_v<T, std::string>) {
    if (!v.is_string()) throw ValidationError("config: '" + name + "' must be a string");
  } else if constexpr (std::is_same_v<T, std::uint64_t>) {
    if (!v.is_number_unsigned()) throw ValidationError("config: '" + name + "' must be a non-negative integer");
  } else {
    if (!v.is_number()) throw ValidationError("config: '" + name + "' must be a number");
  }
  return v.get<T>();
}

std::vector<std::string> string_list(const json& obj, const std::string& key, const std::string& where) {
  const auto& v = obj.at(key);
  auto name = where + "." + key;
  if (!v.is_array()) throw ValidationError("config: '" + name + "' must be a list of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw ValidationError("config: '" + name + "' must be a list of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

void require_feature(const FeatureRegistry& reg, const std::string& id, const std::string& where) {
  if (!reg.contains(id)) throw ValidationError("config: unknown feature id '" + id + "' in '" + where + "'");
}

std::filesystem::path resolve(const std::string& p, const std::filesystem::path& base) {
  std::filesystem::path path(p);
  return path.is_relative() && !base.empty() ? base / path : path;
}

}  // namespace

PipelineConfig parse_config(const std::string& text, const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  check_keys(root, "", {"schema_version", "resources", "features", "weights", "dpi", "louvain", "clustering",
                        "figurative", "lexical", "temporal", "hypotactic", "output"});
  if (!root.contains("schema_version")) throw ValidationError("config: 'schema_version' is required");
  if (!root["schema_version"].is_number_integer() || root["schema_version"].get<int>() != kConfigSchemaVersion)
    throw ValidationError("config: unsupported schema_version (expected " + std::to_string(kConfigSchemaVersion) + ")");

  PipelineConfig cfg;
  if (root.contains("resources")) cfg.resources = resolve(get<std::string>(root, "resources", ""), base_dir);
  if (root.contains("output")) cfg.output = resolve(get<std::string>(root, "output", ""), base_dir);

  if (root.contains("features")) {
    const auto& f = root["features"];
    check_keys(f, "features", {"enable", "disable"});
    if (f.contains("enable"))
      for (const auto& id : string_list(f, "enable", "features")) {
        require_feature(cfg.registry, id, "features.enable");
        cfg.registry.set_enabled(id, true);
      }
    if (f.contains("disable"))
      for (const auto& id : string_list(f, "disable", "features")) {
        require_feature(cfg.registry, id, "features.disable");
        cfg.registry.set_enabled(id, false);
      }
  }

  if (root.contains("weights")) {
    const auto& w = root["weights"];
    check_keys(w, "weights", {"preset", "exclude", "coefficients"});
    if (w.contains("preset")) {
      auto p = get<std::string>(w, "preset", "weights");
      if (p == "quality")
        cfg.weights = WeightConfig::quality_preset();
      else if (p == "none")
        cfg.weights = WeightConfig::unweighted();
      else
        throw ValidationError("config: 'weights.preset' must be \"quality\" or \"none\"");
    }
    if (w.contains("exclude"))
      for (const auto& id : string_list(w, "exclude", "weights")) {
        require_feature(cfg.registry, id, "weights.exclude");
        cfg.weights.coefficients.erase(id);
        cfg.weights.excluded.insert(id);
      }
    if (w.contains("coefficients")) {
      const auto& c = w["coefficients"];
      if (!c.is_object()) throw ValidationError("config: 'weights.coefficients' must be an object");
      for (const auto& [id, v] : c.items()) {
        require_feature(cfg.registry, id, "weights.coefficients");
        if (!v.is_number()) throw ValidationError("config: coefficient for '" + id + "' must be a number");
        cfg.weights.excluded.erase(id);
        cfg.weights.coefficients[id] = v.get<double>();
      }
    }
    cfg.weights.validate(cfg.registry);
  }

  if (root.contains("dpi")) {
    const auto& d = root["dpi"];
    check_keys(d, "dpi", {"strategy", "formulas", "use_transformed"});
    if (d.contains("strategy")) cfg.strategy = parse_strategy(get<std::string>(d, "strategy", "dpi"));
    if (d.contains("formulas")) {
      cfg.formulas = string_list(d, "formulas", "dpi");
      if (cfg.formulas.empty()) throw ValidationError("config: 'dpi.formulas' must not be empty");
    }
    if (d.contains("use_transformed")) cfg.transformed_scoring = get<bool>(d, "use_transformed", "dpi");
  }

  if (root.contains("louvain")) {
    const auto& l = root["louvain"];
    check_keys(l, "louvain", {"resolution", "seed"});
    if (l.contains("resolution")) {
      cfg.resolution = get<double>(l, "resolution", "louvain");
      if (!(cfg.resolution > 0.0)) throw ValidationError("config: 'louvain.resolution' must be positive");
    }
    if (l.contains("seed")) cfg.seed = get<std::uint64_t>(l, "seed", "louvain");
  }

  if (root.contains("clustering")) {
    const auto& c = root["clustering"];
    check_keys(c, "clustering", {"edge_threshold"});
    if (c.contains("edge_threshold")) {
      cfg.edge_threshold = get<double>(c, "edge_threshold", "clustering");
      if (cfg.edge_threshold < 0.0 || cfg.edge_threshold >= 1.0)
        throw ValidationError("config: 'clustering.edge_threshold' must be in [0, 1)");
    }
  }

  if (root.contains("figurative")) {
    const auto& f = root["figurative"];
    check_keys(f, "figurative", {"tau_candidate", "tau_control"});
    if (f.contains("tau_candidate")) cfg.thresholds.candidate = get<double>(f, "tau_candidate", "figurative");
    if (f.contains("tau_control")) cfg.thresholds.control = get<double>(f, "tau_control", "figurative");
    for (double t : {cfg.thresholds.candidate, cfg.thresholds.control})
      if (t < -1.0 || t > 1.0) throw ValidationError("config: figurative thresholds must be in [-1, 1]");
  }

  if (root.contains("lexical")) {
    const auto& l = root["lexical"];
    check_keys(l, "lexical", {"d_textual_formula", "connective_norm"});
    if (l.contains("d_textual_formula")) {
      auto v = get<std::string>(l, "d_textual_formula", "lexical");
      if (v == "paragraph_polysyllabic")
        cfg.lexical.d_textual = lexical::DTextualFormula::ParagraphPolysyllabic;
      else if (v == "type_token")
        cfg.lexical.d_textual = lexical::DTextualFormula::TypeToken;
      else
        throw ValidationError("config: 'lexical.d_textual_formula' must be paragraph_polysyllabic or type_token");
    }
    if (l.contains("connective_norm")) {
      auto v = get<std::string>(l, "connective_norm", "lexical");
      if (v == "per_sentence")
        cfg.lexical.connectives = lexical::ConnectiveNorm::PerSentence;
      else if (v == "per_1000_tokens")
        cfg.lexical.connectives = lexical::ConnectiveNorm::Per1000Tokens;
      else
        throw ValidationError("config: 'lexical.connective_norm' must be per_sentence or per_1000_tokens");
    }
  }

  if (root.contains("temporal")) {
    const auto& t = root["temporal"];
    check_keys(t, "temporal", {"denominator"});
    if (t.contains("denominator")) {
      auto v = get<std::string>(t, "denominator", "temporal");
      if (v == "root_groups")
        cfg.syntactic.stability = syntactic::StabilityDenominator::RootGroups;
      else if (v == "all_groups")
        cfg.syntactic.stability = syntactic::StabilityDenominator::AllGroups;
      else
        throw ValidationError("config: 'temporal.denominator' must be root_groups or all_groups");
    }
  }

  if (root.contains("hypotactic")) {
    const auto& h = root["hypotactic"];
    check_keys(h, "hypotactic", {"clausal_deprels"});
    if (h.contains("clausal_deprels")) {
      auto list = string_list(h, "clausal_deprels", "hypotactic");
      if (list.empty()) throw ValidationError("config: 'hypotactic.clausal_deprels' must not be empty");
      cfg.syntactic.clausal_deprels = {list.begin(), list.end()};
    }
  }
  return cfg;
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.parent_path());
}

std::string dump_config(const PipelineConfig& cfg) {
  json j;
  j["schema_version"] = kConfigSchemaVersion;
  if (cfg.resources) j["resources"] = cfg.resources->string();
  if (cfg.output) j["output"] = cfg.output->string();
  json enable = json::array(), disable = json::array();
  const auto standard = FeatureRegistry::standard();
  for (std::size_t i = 0; i < cfg.registry.size(); ++i)
    if (cfg.registry[i].enabled != standard[i].enabled)
      (cfg.registry[i].enabled ? enable : disable).push_back(cfg.registry[i].id);
  j["features"] = {{"enable", enable}, {"disable", disable}};
  j["weights"] = {{"preset", "none"},
                  {"exclude", std::vector<std::string>(cfg.weights.excluded.begin(), cfg.weights.excluded.end())},
                  {"coefficients", cfg.weights.coefficients}};
  j["dpi"] = {{"strategy", to_string(cfg.strategy)}, {"formulas", cfg.formulas}, {"use_transformed", cfg.transformed_scoring}};
  j["louvain"] = {{"resolution", cfg.resolution}, {"seed", cfg.seed}};
  j["clustering"] = {{"edge_threshold", cfg.edge_threshold}};
  j["figurative"] = {{"tau_candidate", cfg.thresholds.candidate}, {"tau_control", cfg.thresholds.control}};
  j["lexical"] = {{"d_textual_formula", cfg.lexical.d_textual == lexical::DTextualFormula::TypeToken ? "type_token"
                                                                                                 : "paragraph_polysyllabic"},
                  {"connective_norm", cfg.lexical.connectives == lexical::ConnectiveNorm::Per1000Tokens ? "per_1000_tokens"
                                                                                                       : "per_sentence"}};
  j["temporal"] = {{"denominator", cfg.syntactic.stability == syntactic::StabilityDenominator::AllGroups ? "all_groups"
                                                                                                       : "root_groups"}};
  j["hypotactic"] = {{"clausal_deprels", std::vector<std::string>(cfg.syntactic.clausal_deprels.begin(),
                                                                  cfg.syntactic.clausal_deprels.end())}};
  return j.dump(2) + "\n";
}

}  // namespace stylo
