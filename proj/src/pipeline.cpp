#include "stylo/pipeline.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "stylo/conllu.hpp"
#include "stylo/csv.hpp"
#include "stylo/error.hpp"
#include "stylo/lexical.hpp"
#include "stylo/semantic.hpp"
#include "stylo/similarity.hpp"
#include "stylo/syntactic.hpp"

namespace stylo {
namespace {

ExtractionResult extract_one(const ManifestEntry& e, const LexicalResources& res, const PipelineConfig& cfg) {
  ExtractionResult r;
  r.doc_id = e.doc_id;
  try {
    r.profile = extract_document(e, res, cfg);
  } catch (const std::exception& ex) {
    r.error = ex.what();
  }
  return r;
}

}  // namespace

FeatureProfile extract_document(const ManifestEntry& entry, const LexicalResources& resources,
                                const PipelineConfig& cfg) {
  auto doc = read_conllu_file(entry.conllu, entry.doc_id);
  doc.class_label = entry.class_label;
  doc.human_rating = entry.human_rating;

  std::optional<std::vector<semantic::SentenceEmbedding>> emb;
  std::optional<std::vector<semantic::FigurativeRecord>> fig;
  if (entry.embeddings) emb = semantic::load_embeddings(*entry.embeddings);
  if (entry.figurative) fig = semantic::load_figurative(*entry.figurative);

  FeatureProfile p = lexical::compute_all(doc, resources, cfg.lexical);
  p.merge(syntactic::compute_all(doc, cfg.syntactic));
  p.merge(semantic::compute_all(doc, emb, fig, cfg.thresholds));
  for (const auto& id : cfg.registry.ids())
    if (!p.values.count(id) && !p.missing.count(id)) p.mark_missing(id);
  return p;
}

std::vector<ExtractionResult> extract_all(const std::vector<ManifestEntry>& entries,
                                          const LexicalResources& resources, const PipelineConfig& cfg) {
  std::vector<ExtractionResult> out(entries.size());
  const auto n = static_cast<std::ptrdiff_t>(entries.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = extract_one(entries[static_cast<std::size_t>(i)], resources, cfg);
  return out;
}

std::vector<ExtractionResult> extract_all_serial(const std::vector<ManifestEntry>& entries,
                                                 const LexicalResources& resources, const PipelineConfig& cfg) {
  std::vector<ExtractionResult> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back(extract_one(e, resources, cfg));
  return out;
}

std::string features_csv(const std::vector<ExtractionResult>& results, const FeatureRegistry& registry) {
  std::ostringstream out;
  std::vector<std::string> header{"doc_id"};
  for (const auto& id : registry.ids()) header.push_back(id);
  out << csv::join_row(header) << '\n';
  for (const auto& r : results) {
    if (!r.profile) continue;
    std::vector<std::string> row{r.doc_id};
    for (const auto& id : registry.ids()) {
      auto v = r.profile->get(id);
      row.push_back(v && std::isfinite(*v) ? csv::fixed6(*v) : "");
    }
    out << csv::join_row(row) << '\n';
  }
  return out.str();
}

std::string missing_csv(const std::vector<ExtractionResult>& results, const FeatureRegistry& registry) {
  std::ostringstream out;
  out << "doc_id,feature\n";
  for (const auto& r : results) {
    if (!r.profile) continue;
    for (const auto& id : registry.ids()) {
      auto v = r.profile->get(id);
      if (!v || !std::isfinite(*v)) out << csv::join_row({r.doc_id, id}) << '\n';
    }
  }
  return out.str();
}

std::vector<FeatureVector> read_features_csv(const std::filesystem::path& path, const FeatureRegistry& registry) {
  const auto t = csv::read_file(path);
  auto id_col = t.column("doc_id");
  if (!id_col) throw ParseError("features file '" + path.string() + "' has no doc_id column");
  for (const auto& h : t.header)
    if (h != "doc_id" && !registry.contains(h))
      throw ValidationError("features file '" + path.string() + "' has unknown column '" + h + "'");
  std::set<std::string> seen;
  std::vector<FeatureVector> out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    const auto& doc = row[*id_col];
    if (doc.empty()) throw ParseError("empty doc_id in '" + path.string() + "'", t.row_lines[r]);
    if (!seen.insert(doc).second) throw ValidationError("duplicate doc_id '" + doc + "' in '" + path.string() + "'");
    FeatureProfile p;
    for (std::size_t c = 0; c < t.header.size(); ++c) {
      if (c == *id_col) continue;
      if (row[c].empty()) {
        p.mark_missing(t.header[c]);
        continue;
      }
      auto v = csv::parse_number(row[c]);
      if (!v) throw ParseError("malformed value '" + row[c] + "' for " + t.header[c], t.row_lines[r]);
      p.set(t.header[c], *v);
    }
    out.push_back(assemble_vector(doc, p, registry));
  }
  return out;
}

ClassLabels read_labels_csv(const std::filesystem::path& path) {
  const auto t = csv::read_file(path);
  auto id = t.column("doc_id");
  auto orig = t.column("class");
  if (!orig) orig = t.column("original");
  auto autom = t.column("automatic");
  if (!id || !orig) throw ParseError("labels file '" + path.string() + "' needs doc_id and class columns");
  ClassLabels l;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (!l.original.emplace(row[*id], row[*orig]).second)
      throw ValidationError("duplicate doc_id '" + row[*id] + "' in '" + path.string() + "'");
    if (autom && !row[*autom].empty()) l.automatic[row[*id]] = row[*autom];
  }
  return l;
}

ClusterResult cluster_vectors(const std::vector<FeatureVector>& vectors, const FeatureRegistry& registry,
                              const PipelineConfig& cfg) {
  ClusterResult r;
  const auto normalized = normalize_internal(vectors, registry, &r.warnings);
  r.similarity = build_similarity_matrix(normalized);
  r.refined = rohde_transform(r.similarity);
  r.graph = build_graph(r.refined, cfg.edge_threshold);
  if (vectors.size() < 3) {
    r.warnings.push_back("fewer than three documents; every document placed in one community");
    r.louvain.partition.assign(vectors.size(), 0);
    r.louvain.modularity = 0.0;
    return r;
  }
  if (r.graph.edges().empty()) r.warnings.push_back("similarity graph has no edges; every document is its own community");
  r.louvain = louvain(r.graph, cfg.resolution, cfg.seed);
  return r;
}

std::map<std::string, std::string> automatic_labels(const ClusterResult& r) {
  std::map<std::string, std::string> out;
  const auto& nodes = r.graph.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) out[nodes[i]] = "C" + std::to_string(r.louvain.partition[i]);
  return out;
}

}  // namespace stylo
