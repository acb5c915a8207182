#include "stylo/manifest.hpp"

#include <unordered_set>

#include "stylo/csv.hpp"
#include "stylo/error.hpp"

namespace stylo {

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  auto table = csv::read_file(path);
  auto id_col = table.column("doc_id");
  auto path_col = table.column("path");
  if (!id_col || !path_col) throw ValidationError(path.string() + ": manifest header needs doc_id and path");
  auto class_col = table.column("class");
  auto rating_col = table.column("rating");
  auto emb_col = table.column("embeddings");
  auto fig_col = table.column("figurative");
  const auto base = path.parent_path();

  auto resolve = [&](const std::string& p) {
    std::filesystem::path fp(p);
    return fp.is_absolute() ? fp : base / fp;
  };
  auto optional_field = [&](const std::vector<std::string>& row, std::optional<std::size_t> col) {
    return (col && !row[*col].empty()) ? std::optional<std::string>(row[*col]) : std::nullopt;
  };

  std::vector<ManifestEntry> entries;
  std::unordered_set<std::string> seen;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    const auto line = std::to_string(table.row_lines[r]);
    ManifestEntry e;
    e.doc_id = row[*id_col];
    if (e.doc_id.empty()) throw ValidationError(path.string() + " line " + line + ": empty doc_id");
    if (!seen.insert(e.doc_id).second)
      throw ValidationError(path.string() + " line " + line + ": duplicate doc_id '" + e.doc_id + "'");
    if (row[*path_col].empty()) throw ValidationError(path.string() + " line " + line + ": empty path");
    e.conllu = resolve(row[*path_col]);
    e.class_label = optional_field(row, class_col);
    if (auto r = optional_field(row, rating_col)) {
      e.human_rating = csv::parse_number(*r);
      if (!e.human_rating)
        throw ValidationError(path.string() + " line " + line + ": malformed rating '" + *r + "'");
    }
    if (auto p = optional_field(row, emb_col)) e.embeddings = resolve(*p);
    if (auto p = optional_field(row, fig_col)) e.figurative = resolve(*p);
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace stylo
