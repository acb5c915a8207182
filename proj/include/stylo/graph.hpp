#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "stylo/similarity.hpp"

namespace stylo {

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 0.0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected weighted graph without self-loops; at most one edge per pair.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::vector<std::string> nodes) : nodes_(std::move(nodes)) {}

  /// Throws ValidationError for self-loops, duplicate pairs, or non-positive weights.
  void add_edge(std::size_t u, std::size_t v, double weight);

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t node_count() const { return nodes_.size(); }
  double total_weight() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
};

/// node -> dense 0-based community id.
using Partition = std::vector<int>;

/// Edge (i, j) for every i < j with M[i][j] > threshold.
WeightedGraph build_graph(const SimilarityMatrix& m, double edge_threshold = 0.0);

/// Weighted modularity with resolution. Throws ValidationError when the graph
/// has no edges or the partition size differs from the node count.
double modularity(const WeightedGraph& g, const Partition& p, double resolution = 1.0);

struct LouvainResult {
  Partition partition;
  double modularity = 0.0;
  int levels = 0;
};

inline constexpr int kLouvainRestarts = 8;

/// Two-phase Louvain: local moves in a seeded order until no move improves
/// modularity, then aggregation, repeated until the gain drops below 1e-9.
/// The converged partition is refined by node moves on the original graph
/// (and aggregated again if anything moved). `restarts` visit orders are
/// drawn from `seed` and the highest-modularity result is kept.
/// Community ids are ordered by descending size (ties: smallest node first).
LouvainResult louvain(const WeightedGraph& g, double resolution = 1.0, std::uint64_t seed = 42,
                      int restarts = kLouvainRestarts);

/// Renumbers communities densely, largest first.
Partition canonical_partition(const Partition& p);
std::size_t community_count(const Partition& p);

/// `source,target,weight` rows (node ids, 6 decimals).
std::string edges_csv(const WeightedGraph& g);
/// `node,community` rows; an empty partition emits the header and node ids with empty community.
std::string communities_csv(const WeightedGraph& g, const Partition& p);
std::string gexf(const WeightedGraph& g, const Partition& p);

/// Rebuilds a graph from an edge list, taking node order from the
/// community table (which also lists isolated nodes).
WeightedGraph import_graph(const std::filesystem::path& edges, const std::filesystem::path& communities);

}  // namespace stylo
