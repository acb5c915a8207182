#include "stylo/semantic.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include "json.hpp"

#include "stylo/error.hpp"

namespace stylo::semantic {
namespace {

using nlohmann::json;

json parse_line(const std::string& line, const std::string& source, std::size_t line_no) {
  try {
    auto j = json::parse(line);
    if (!j.is_object()) throw ParseError(source + ": record is not a JSON object", line_no);
    return j;
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": " + e.what(), line_no);
  }
}

const json& require(const json& j, const char* key, const std::string& source, std::size_t line_no) {
  auto it = j.find(key);
  if (it == j.end()) throw ValidationError(source + " line " + std::to_string(line_no) + ": missing field '" + key + "'");
  return *it;
}

[[noreturn]] void bad_field(const char* key, const char* expected, const std::string& source, std::size_t line_no) {
  throw ValidationError(source + " line " + std::to_string(line_no) + ": field '" + key + "' must be " + expected);
}

int require_index(const json& j, const char* key, const std::string& source, std::size_t line_no) {
  const auto& v = require(j, key, source, line_no);
  if (!v.is_number_integer() || v.get<long long>() < 0) bad_field(key, "a non-negative integer", source, line_no);
  return v.get<int>();
}

double require_unit(const json& v, const char* key, const std::string& source, std::size_t line_no) {
  if (!v.is_number()) bad_field(key, "a number", source, line_no);
  double x = v.get<double>();
  if (!(x >= -1.0 && x <= 1.0)) bad_field(key, "in [-1, 1]", source, line_no);
  return x;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

std::string to_string(RelationType r) {
  switch (r) {
    case RelationType::SubjVerb: return "subj_verb";
    case RelationType::SubjNom: return "subj_nom";
    case RelationType::VerbObj: return "verb_obj";
    case RelationType::PassiveSubjVerb: return "passive_subj_verb";
  }
  return "?";
}

RelationType parse_relation_type(std::string_view s) {
  if (s == "subj_verb") return RelationType::SubjVerb;
  if (s == "subj_nom") return RelationType::SubjNom;
  if (s == "verb_obj") return RelationType::VerbObj;
  if (s == "passive_subj_verb") return RelationType::PassiveSubjVerb;
  throw ValidationError("unknown relation_type '" + std::string(s) + "'");
}

std::vector<SentenceEmbedding> parse_embeddings(std::istream& in, const std::string& source) {
  std::vector<SentenceEmbedding> out;
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    auto j = parse_line(line, source, line_no);
    SentenceEmbedding e;
    const auto& id = require(j, "doc_id", source, line_no);
    if (!id.is_string()) bad_field("doc_id", "a string", source, line_no);
    e.doc_id = id.get<std::string>();
    e.sent_index = require_index(j, "sent_index", source, line_no);
    const auto& vec = require(j, "embedding", source, line_no);
    if (!vec.is_array() || vec.empty()) bad_field("embedding", "a non-empty array", source, line_no);
    for (const auto& x : vec) {
      if (!x.is_number()) bad_field("embedding", "an array of numbers", source, line_no);
      e.vector.push_back(x.get<double>());
    }
    if (dim == 0) dim = e.vector.size();
    if (e.vector.size() != dim)
      throw ValidationError(source + " line " + std::to_string(line_no) + ": embedding dimension " +
                            std::to_string(e.vector.size()) + " differs from " + std::to_string(dim));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<SentenceEmbedding> load_embeddings(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open embeddings file " + path.string());
  return parse_embeddings(in, path.string());
}

std::vector<FigurativeRecord> parse_figurative(std::istream& in, const std::string& source) {
  std::vector<FigurativeRecord> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    auto j = parse_line(line, source, line_no);
    FigurativeRecord r;
    const auto& id = require(j, "doc_id", source, line_no);
    if (!id.is_string()) bad_field("doc_id", "a string", source, line_no);
    r.doc_id = id.get<std::string>();
    r.sent_index = require_index(j, "sent_index", source, line_no);
    const auto& rel = require(j, "relation_type", source, line_no);
    if (!rel.is_string()) bad_field("relation_type", "a string", source, line_no);
    try {
      r.relation_type = parse_relation_type(rel.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(source + " line " + std::to_string(line_no) + ": " + e.what());
    }
    r.target_token_index = require_index(j, "target_token_index", source, line_no);
    r.topk_mean_similarity =
        require_unit(require(j, "topk_mean_similarity", source, line_no), "topk_mean_similarity", source, line_no);
    const auto& neutral = require(j, "neutral_cosine", source, line_no);
    if (!neutral.is_null()) r.neutral_cosine = require_unit(neutral, "neutral_cosine", source, line_no);
    const auto& fig = require(j, "figurative", source, line_no);
    if (!fig.is_boolean()) bad_field("figurative", "a boolean", source, line_no);
    r.figurative = fig.get<bool>();
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<FigurativeRecord> load_figurative(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open figurative file " + path.string());
  return parse_figurative(in, path.string());
}

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw UndefinedStatistic("cosine of vectors with different dimensions");
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) throw UndefinedStatistic("cosine with a zero vector");
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

std::optional<double> compute_semantic_overlap(const Document& doc, const std::vector<SentenceEmbedding>& embeddings) {
  std::map<int, const SentenceEmbedding*> by_index;
  for (const auto& e : embeddings)
    if (e.doc_id == doc.doc_id) by_index[e.sent_index] = &e;

  std::string absent;
  for (int i = 0; i < doc.sentence_count; ++i) {
    if (!by_index.count(i)) absent += (absent.empty() ? "" : ",") + std::to_string(i);
  }
  if (!absent.empty())
    throw ValidationError("document '" + doc.doc_id + "' lacks embeddings for sentences " + absent);
  if (doc.sentence_count < 2) return std::nullopt;

  double sum = 0;
  for (int i = 0; i + 1 < doc.sentence_count; ++i) {
    try {
      sum += cosine(by_index[i]->vector, by_index[i + 1]->vector);
    } catch (const UndefinedStatistic& e) {
      throw UndefinedStatistic("document '" + doc.doc_id + "', sentences " + std::to_string(i) + "-" +
                               std::to_string(i + 1) + ": " + e.what());
    }
  }
  return sum / (doc.sentence_count - 1);
}

bool decide_figurative(double topk_mean_similarity, std::optional<double> neutral_cosine, const Thresholds& t) {
  if (!(topk_mean_similarity < t.candidate)) return false;
  if (neutral_cosine) return *neutral_cosine < t.control;
  return true;
}

FigurativeIndices aggregate_figurative(const Document& doc, const std::vector<FigurativeRecord>& records,
                                       const Thresholds& t) {
  if (doc.token_count == 0) throw ValidationError("document '" + doc.doc_id + "' has no tokens");
  FigurativeIndices out;
  for (const auto& r : records) {
    if (r.doc_id != doc.doc_id)
      throw ValidationError("figurative record for '" + r.doc_id + "' given to document '" + doc.doc_id + "'");
    bool fig = r.figurative;
    if (r.neutral_cosine) {
      fig = decide_figurative(r.topk_mean_similarity, r.neutral_cosine, t);
      if (fig != r.figurative) ++out.flag_mismatches;
    }
    out.figurative_count += fig ? 1 : 0;
  }
  out.per_sentence = static_cast<double>(out.figurative_count) / doc.sentence_count;
  out.per_1000_tokens = 1000.0 * out.figurative_count / doc.token_count;
  return out;
}

FeatureProfile compute_all(const Document& doc, const std::optional<std::vector<SentenceEmbedding>>& embeddings,
                           const std::optional<std::vector<FigurativeRecord>>& records, const Thresholds& t) {
  using namespace feature;
  FeatureProfile p;
  std::optional<double> overlap;
  if (embeddings) overlap = compute_semantic_overlap(doc, *embeddings);
  if (overlap)
    p.set(kAvgSemanticOverlap, *overlap);
  else
    p.mark_missing(kAvgSemanticOverlap);

  if (records && doc.token_count > 0) {
    auto fi = aggregate_figurative(doc, *records, t);
    p.set(kTfiPerSent, fi.per_sentence);
    p.set(kTfiPer1000, fi.per_1000_tokens);
  } else {
    p.mark_missing(kTfiPerSent);
    p.mark_missing(kTfiPer1000);
  }
  return p;
}

}  // namespace stylo::semantic
