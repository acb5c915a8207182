#include "stylo/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "stylo/csv.hpp"
#include "stylo/error.hpp"

namespace stylo {

void WeightedGraph::add_edge(std::size_t u, std::size_t v, double weight) {
  if (u >= nodes_.size() || v >= nodes_.size()) throw ValidationError("edge endpoint out of range");
  if (u == v) throw ValidationError("self-loop on node '" + nodes_[u] + "'");
  if (!(weight > 0.0) || !std::isfinite(weight)) throw ValidationError("edge weight must be finite and positive");
  if (u > v) std::swap(u, v);
  for (const auto& e : edges_)
    if (e.u == u && e.v == v) throw ValidationError("duplicate edge " + nodes_[u] + " - " + nodes_[v]);
  edges_.push_back({u, v, weight});
}

double WeightedGraph::total_weight() const {
  double m = 0;
  for (const auto& e : edges_) m += e.weight;
  return m;
}

WeightedGraph build_graph(const SimilarityMatrix& m, double edge_threshold) {
  WeightedGraph g(m.ids);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m(i, j) > edge_threshold && m(i, j) > 0.0) g.add_edge(i, j, m(i, j));
  return g;
}

double modularity(const WeightedGraph& g, const Partition& p, double resolution) {
  if (p.size() != g.node_count()) throw ValidationError("partition does not cover every node");
  const double m = g.total_weight();
  if (m <= 0.0) throw ValidationError("modularity undefined on a graph without edges");
  const int communities = p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1;
  std::vector<double> internal(static_cast<std::size_t>(communities), 0.0);
  std::vector<double> degree(static_cast<std::size_t>(communities), 0.0);
  for (const auto& e : g.edges()) {
    degree[static_cast<std::size_t>(p[e.u])] += e.weight;
    degree[static_cast<std::size_t>(p[e.v])] += e.weight;
    if (p[e.u] == p[e.v]) internal[static_cast<std::size_t>(p[e.u])] += 2.0 * e.weight;
  }
  const double two_m = 2.0 * m;
  double q = 0;
  for (std::size_t c = 0; c < internal.size(); ++c) q += internal[c] - resolution * degree[c] * degree[c] / two_m;
  return q / two_m;
}

Partition canonical_partition(const Partition& p) {
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < p.size(); ++i) groups[p[i]].push_back(i);
  std::vector<const std::vector<std::size_t>*> order;
  for (const auto& [c, members] : groups) order.push_back(&members);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    if (a->size() != b->size()) return a->size() > b->size();
    return a->front() < b->front();
  });
  Partition out(p.size(), 0);
  for (std::size_t c = 0; c < order.size(); ++c)
    for (auto node : *order[c]) out[node] = static_cast<int>(c);
  return out;
}

std::size_t community_count(const Partition& p) { return std::set<int>(p.begin(), p.end()).size(); }

namespace {

// Symmetric adjacency of one aggregation level. `self` holds A_ii, which for an
// aggregated node is twice the internal edge weight of the community it represents.
struct LevelGraph {
  std::vector<std::vector<std::pair<std::size_t, double>>> adj;
  std::vector<double> self;
  std::vector<double> degree;  // k_i = sum_j A_ij including A_ii
  double two_m = 0.0;

  std::size_t size() const { return adj.size(); }
};

LevelGraph from_graph(const WeightedGraph& g) {
  LevelGraph lg;
  lg.adj.resize(g.node_count());
  lg.self.assign(g.node_count(), 0.0);
  lg.degree.assign(g.node_count(), 0.0);
  for (const auto& e : g.edges()) {
    lg.adj[e.u].emplace_back(e.v, e.weight);
    lg.adj[e.v].emplace_back(e.u, e.weight);
    lg.degree[e.u] += e.weight;
    lg.degree[e.v] += e.weight;
    lg.two_m += 2.0 * e.weight;
  }
  return lg;
}

LevelGraph aggregate(const LevelGraph& lg, const std::vector<std::size_t>& community, std::size_t count) {
  std::vector<std::map<std::size_t, double>> links(count);
  LevelGraph out;
  out.self.assign(count, 0.0);
  out.degree.assign(count, 0.0);
  out.two_m = lg.two_m;
  for (std::size_t i = 0; i < lg.size(); ++i) {
    const auto ci = community[i];
    out.self[ci] += lg.self[i];
    out.degree[ci] += lg.degree[i];
    for (const auto& [j, w] : lg.adj[i]) {
      const auto cj = community[j];
      if (ci == cj)
        out.self[ci] += w;  // each internal edge is seen from both ends
      else
        links[ci][cj] += w;
    }
  }
  out.adj.resize(count);
  for (std::size_t c = 0; c < count; ++c)
    for (const auto& [d, w] : links[c]) out.adj[c].emplace_back(d, w);
  return out;
}

double level_modularity(const LevelGraph& lg, const std::vector<std::size_t>& community, double resolution) {
  std::map<std::size_t, double> internal, total;
  for (std::size_t i = 0; i < lg.size(); ++i) {
    internal[community[i]] += lg.self[i];
    total[community[i]] += lg.degree[i];
    for (const auto& [j, w] : lg.adj[i])
      if (community[j] == community[i]) internal[community[i]] += w;
  }
  double q = 0;
  for (const auto& [c, in] : internal) q += in - resolution * total[c] * total[c] / lg.two_m;
  return q / lg.two_m;
}

class SplitMix {
 public:
  explicit SplitMix(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Local moving phase. Returns true if any node changed community.
bool local_moves(const LevelGraph& lg, std::vector<std::size_t>& community, double resolution, SplitMix& rng) {
  const std::size_t n = lg.size();
  std::vector<double> tot(n, 0.0);
  std::vector<std::size_t> members(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    tot[community[i]] += lg.degree[i];
    ++members[community[i]];
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.next() % i]);

  std::vector<double> link(n, 0.0);
  std::vector<std::size_t> touched;
  bool any_move = false;
  constexpr double kEps = 1e-12;
  while (true) {
    bool moved = false;
    for (auto i : order) {
      const auto current = community[i];
      touched.clear();
      for (const auto& [j, w] : lg.adj[i]) {
        const auto c = community[j];
        if (link[c] == 0.0) touched.push_back(c);
        link[c] += w;
      }
      tot[current] -= lg.degree[i];
      --members[current];
      const double k = lg.degree[i];
      auto gain = [&](std::size_t c) { return link[c] - resolution * k * tot[c] / lg.two_m; };

      // Candidates: stay, join a neighbouring community, or leave for an empty one (gain 0).
      std::size_t best = current;
      double best_gain = gain(current);
      for (auto c : touched) {
        if (c == current) continue;
        const double gc = gain(c);
        if (gc > best_gain + kEps) {
          best = c;
          best_gain = gc;
        }
      }
      if (best_gain < -kEps) {
        for (std::size_t c = 0; c < n; ++c) {
          if (members[c] == 0) {
            best = c;
            best_gain = 0.0;
            break;
          }
        }
      }
      tot[best] += lg.degree[i];
      ++members[best];
      if (best != current) {
        community[i] = best;
        moved = true;
        any_move = true;
      }
      for (auto c : touched) link[c] = 0.0;
    }
    if (!moved) break;
  }
  return any_move;
}

}  // namespace

namespace {

std::vector<std::size_t> dense_ids(std::vector<std::size_t> c, std::size_t* count) {
  std::map<std::size_t, std::size_t> dense;
  for (auto x : c) dense.emplace(x, dense.size());
  for (auto& x : c) x = dense[x];
  *count = dense.size();
  return c;
}

// Multilevel phase starting from `membership` over the base graph: local
// moves, aggregation, repeated until the gain stalls.
int multilevel(const LevelGraph& base, std::vector<std::size_t>& membership, double resolution, SplitMix& rng) {
  std::size_t count = 0;
  membership = dense_ids(membership, &count);
  LevelGraph level = aggregate(base, membership, count);
  double q = level_modularity(base, membership, resolution);
  int levels = 0;
  while (true) {
    std::vector<std::size_t> community(level.size());
    std::iota(community.begin(), community.end(), 0);
    if (!local_moves(level, community, resolution, rng)) break;
    community = dense_ids(community, &count);
    const double q_new = level_modularity(level, community, resolution);
    for (auto& m : membership) m = community[m];
    level = aggregate(level, community, count);
    ++levels;
    const bool stalled = q_new - q < 1e-9;
    q = q_new;
    if (stalled || count == 1) break;
  }
  return levels;
}

struct Run {
  std::vector<std::size_t> membership;
  int levels = 0;
};

// Multilevel phase followed by node-level refinement on the base graph; a
// refinement that moves anything is aggregated again.
Run run_once(const LevelGraph& base, double resolution, SplitMix& rng) {
  Run r;
  r.membership.resize(base.size());
  std::iota(r.membership.begin(), r.membership.end(), 0);
  while (true) {
    r.levels += multilevel(base, r.membership, resolution, rng);
    if (!local_moves(base, r.membership, resolution, rng)) break;
  }
  return r;
}

}  // namespace

LouvainResult louvain(const WeightedGraph& g, double resolution, std::uint64_t seed, int restarts) {
  LouvainResult result;
  const std::size_t n = g.node_count();
  result.partition.assign(n, 0);
  if (n == 0) return result;
  std::iota(result.partition.begin(), result.partition.end(), 0);
  if (g.total_weight() <= 0.0) {
    result.partition = canonical_partition(result.partition);
    return result;
  }

  const LevelGraph base = from_graph(g);
  SplitMix seeds(seed);
  bool first = true;
  for (int restart = 0; restart < std::max(restarts, 1); ++restart) {
    SplitMix rng(seeds.next());
    const Run r = run_once(base, resolution, rng);
    Partition p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(r.membership[i]);
    p = canonical_partition(p);
    const double q = modularity(g, p, resolution);
    if (first || q > result.modularity + 1e-12) {
      result.partition = p;
      result.modularity = q;
      result.levels = r.levels;
      first = false;
    }
  }
  return result;
}

std::string edges_csv(const WeightedGraph& g) {
  std::ostringstream out;
  out << "source,target,weight\n";
  for (const auto& e : g.edges())
    out << csv::join_row({g.nodes()[e.u], g.nodes()[e.v], csv::fixed6(e.weight)}) << '\n';
  return out.str();
}

std::string communities_csv(const WeightedGraph& g, const Partition& p) {
  std::ostringstream out;
  out << "node,community\n";
  for (std::size_t i = 0; i < g.node_count(); ++i)
    out << csv::join_row({g.nodes()[i], p.empty() ? std::string() : std::to_string(p[i])}) << '\n';
  return out.str();
}

namespace {
std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}
}  // namespace

std::string gexf(const WeightedGraph& g, const Partition& p) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<gexf xmlns=\"http://gexf.net/1.3\" version=\"1.3\">\n"
      << "  <graph defaultedgetype=\"undirected\">\n"
      << "    <attributes class=\"node\">\n"
      << "      <attribute id=\"0\" title=\"community\" type=\"integer\"/>\n"
      << "    </attributes>\n    <nodes>\n";
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    out << "      <node id=\"" << i << "\" label=\"" << xml_escape(g.nodes()[i]) << "\">";
    if (!p.empty()) out << "<attvalues><attvalue for=\"0\" value=\"" << p[i] << "\"/></attvalues>";
    out << "</node>\n";
  }
  out << "    </nodes>\n    <edges>\n";
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto& e = g.edges()[k];
    out << "      <edge id=\"" << k << "\" source=\"" << e.u << "\" target=\"" << e.v << "\" weight=\""
        << csv::fixed6(e.weight) << "\"/>\n";
  }
  out << "    </edges>\n  </graph>\n</gexf>\n";
  return out.str();
}

WeightedGraph import_graph(const std::filesystem::path& edges, const std::filesystem::path& communities) {
  auto nodes_table = csv::read_file(communities);
  auto node_col = nodes_table.column("node");
  if (!node_col) throw ValidationError(communities.string() + ": missing 'node' column");
  std::vector<std::string> nodes;
  std::map<std::string, std::size_t> index;
  for (const auto& row : nodes_table.rows) {
    index.emplace(row[*node_col], nodes.size());
    nodes.push_back(row[*node_col]);
  }
  WeightedGraph g(nodes);
  auto edge_table = csv::read_file(edges);
  auto s = edge_table.column("source"), t = edge_table.column("target"), w = edge_table.column("weight");
  if (!s || !t || !w) throw ValidationError(edges.string() + ": expected source,target,weight");
  for (const auto& row : edge_table.rows) {
    auto u = index.find(row[*s]);
    auto v = index.find(row[*t]);
    if (u == index.end() || v == index.end()) throw ValidationError(edges.string() + ": edge references unknown node");
    auto weight = csv::parse_number(row[*w]);
    if (!weight) throw ValidationError(edges.string() + ": malformed weight '" + row[*w] + "'");
    g.add_edge(u->second, v->second, *weight);
  }
  return g;
}

}  // namespace stylo
