#include "stylo/similarity.hpp"

#include <cmath>
#include <exception>
#include <sstream>

#include "stylo/csv.hpp"
#include "stylo/error.hpp"
#include "stylo/stats.hpp"

namespace stylo {
namespace {

struct Packed {
  std::vector<std::vector<double>> rows;
  std::vector<std::string> ids;
};

Packed pack(const std::vector<FeatureVector>& vectors) {
  if (vectors.size() < 2) throw ValidationError("a similarity matrix needs at least two vectors");
  const auto dims = shared_active_dims(vectors);
  if (dims.size() < 2) throw ValidationError("fewer than two shared active dimensions");
  Packed p;
  for (const auto& v : vectors) {
    std::vector<double> row;
    row.reserve(dims.size());
    for (auto d : dims) row.push_back(v.values[d]);
    bool constant = true;
    for (double x : row) constant = constant && x == row.front();
    if (constant) throw UndefinedStatistic("vector of document '" + v.doc_id + "' is constant; correlation undefined");
    p.rows.push_back(std::move(row));
    p.ids.push_back(v.doc_id);
  }
  return p;
}

SimilarityMatrix empty_matrix(const std::vector<std::string>& ids) {
  SimilarityMatrix m;
  m.ids = ids;
  m.data.assign(ids.size() * ids.size(), 0.0);
  for (std::size_t i = 0; i < ids.size(); ++i) m(i, i) = 1.0;
  return m;
}

}  // namespace

std::vector<std::size_t> shared_active_dims(const std::vector<FeatureVector>& vectors) {
  std::vector<std::size_t> dims;
  if (vectors.empty()) return dims;
  for (std::size_t f = 0; f < vectors.front().size(); ++f) {
    bool all = true;
    for (const auto& v : vectors) all = all && f < v.active.size() && v.active[f];
    if (all) dims.push_back(f);
  }
  return dims;
}

SimilarityMatrix build_similarity_matrix(const std::vector<FeatureVector>& vectors) {
  const auto packed = pack(vectors);
  auto m = empty_matrix(packed.ids);
  const auto n = static_cast<std::ptrdiff_t>(packed.rows.size());
  std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    for (std::ptrdiff_t j = i + 1; j < n; ++j) {
      try {
        const double r = stats::pearson(packed.rows[static_cast<std::size_t>(i)], packed.rows[static_cast<std::size_t>(j)]);
        m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = r;
        m(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = r;
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);
  return m;
}

SimilarityMatrix build_similarity_matrix_serial(const std::vector<FeatureVector>& vectors) {
  const auto packed = pack(vectors);
  auto m = empty_matrix(packed.ids);
  for (std::size_t i = 0; i < packed.rows.size(); ++i)
    for (std::size_t j = i + 1; j < packed.rows.size(); ++j) {
      const double r = stats::pearson(packed.rows[i], packed.rows[j]);
      m(i, j) = r;
      m(j, i) = r;
    }
  return m;
}

double rohde(double x) { return x <= 0.0 ? 0.0 : std::sqrt(x); }

SimilarityMatrix rohde_transform(const SimilarityMatrix& m) {
  SimilarityMatrix out = m;
  for (auto& x : out.data) x = rohde(x);
  for (std::size_t i = 0; i < out.size(); ++i) out(i, i) = 1.0;
  return out;
}

std::string similarity_csv(const SimilarityMatrix& m) {
  std::ostringstream out;
  std::vector<std::string> header{"doc_id"};
  header.insert(header.end(), m.ids.begin(), m.ids.end());
  out << csv::join_row(header) << '\n';
  for (std::size_t i = 0; i < m.size(); ++i) {
    std::vector<std::string> row{m.ids[i]};
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(csv::fixed6(m(i, j)));
    out << csv::join_row(row) << '\n';
  }
  return out.str();
}

}  // namespace stylo
