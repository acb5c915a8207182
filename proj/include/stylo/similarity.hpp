#pragma once

#include <string>
#include <vector>

#include "stylo/vectors.hpp"

namespace stylo {

/// Dense symmetric matrix over documents.
struct SimilarityMatrix {
  std::vector<std::string> ids;
  std::vector<double> data;  // row-major n x n

  std::size_t size() const { return ids.size(); }
  double operator()(std::size_t i, std::size_t j) const { return data[i * ids.size() + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data[i * ids.size() + j]; }
};

/// Indices of dimensions active in every vector.
std::vector<std::size_t> shared_active_dims(const std::vector<FeatureVector>& vectors);

/// M[i][j] = pearson(v_i, v_j) over the shared active dimensions; diagonal 1.
/// Rows are computed in parallel with OpenMP. Throws UndefinedStatistic naming
/// the document whose vector is constant.
SimilarityMatrix build_similarity_matrix(const std::vector<FeatureVector>& vectors);

/// Single-threaded reference; bit-identical to build_similarity_matrix.
SimilarityMatrix build_similarity_matrix_serial(const std::vector<FeatureVector>& vectors);

/// x <= 0 -> 0, x > 0 -> sqrt(x); the diagonal stays 1.
SimilarityMatrix rohde_transform(const SimilarityMatrix& m);
double rohde(double x);

/// CSV with doc_id row and column headers, 6 decimals.
std::string similarity_csv(const SimilarityMatrix& m);

}  // namespace stylo
