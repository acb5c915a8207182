#pragma once

// Reference implementations used only by the tests. They follow the textbook
// definitions directly and share nothing with the library kernels.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "stylo/conllu.hpp"
#include "stylo/graph.hpp"

namespace oracle {

inline std::filesystem::path data_dir() { return STYLO_TEST_DATA_DIR; }

/// Rows of "ID FORM LEMMA UPOS FEATS HEAD DEPREL" (space separated, FEATS "_"
/// when empty) become one CoNLL-U sentence block.
inline std::string block(const std::vector<std::string>& rows, const std::string& comment = "") {
  std::ostringstream out;
  if (!comment.empty()) out << comment << '\n';
  for (const auto& r : rows) {
    std::istringstream in(r);
    std::string id, form, lemma, upos, feats, head, rel;
    in >> id >> form >> lemma >> upos >> feats >> head >> rel;
    out << id << '\t' << form << '\t' << lemma << '\t' << upos << "\t_\t" << feats << '\t' << head << '\t' << rel
        << "\t_\t_\n";
  }
  out << '\n';
  return out.str();
}

inline stylo::Document doc(const std::vector<std::vector<std::string>>& sentences, const std::string& id = "d") {
  std::string text;
  for (const auto& s : sentences) text += block(s);
  return stylo::parse_conllu_string(text, id);
}

/// Raw-sum Pearson formula in long double.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  long double n = x.size(), sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += (long double)x[i] * x[i];
    syy += (long double)y[i] * y[i];
    sxy += (long double)x[i] * y[i];
  }
  long double num = n * sxy - sx * sy;
  long double den = std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy));
  return static_cast<double>(num / den);
}

/// Tau-b by counting all n(n-1)/2 pairs.
inline double kendall_tau_b(const std::vector<double>& x, const std::vector<double>& y) {
  std::int64_t concordant = 0, discordant = 0, only_x = 0, only_y = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      double dx = x[i] - x[j], dy = y[i] - y[j];
      if (dx == 0 && dy == 0) continue;
      if (dx == 0) ++only_x;
      else if (dy == 0) ++only_y;
      else if ((dx > 0) == (dy > 0)) ++concordant;
      else ++discordant;
    }
  const double untied_x = static_cast<double>(concordant + discordant + only_y);
  const double untied_y = static_cast<double>(concordant + discordant + only_x);
  return static_cast<double>(concordant - discordant) / std::sqrt(untied_x * untied_y);
}

/// Modularity straight from the definition: (1/2m) sum_ij [A_ij - g k_i k_j / 2m] delta(c_i, c_j).
inline double modularity(const stylo::WeightedGraph& g, const std::vector<int>& p, double gamma = 1.0) {
  const std::size_t n = g.node_count();
  std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
  for (const auto& e : g.edges()) a[e.u][e.v] = a[e.v][e.u] = e.weight;
  std::vector<double> k(n, 0.0);
  double two_m = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      k[i] += a[i][j];
      two_m += a[i][j];
    }
  double q = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (p[i] == p[j]) q += a[i][j] - gamma * k[i] * k[j] / two_m;
  return q / two_m;
}

/// Best modularity over every set partition (restricted growth strings).
/// `argmax` receives the first partition reaching it.
inline double exhaustive_max_modularity(const stylo::WeightedGraph& g, double gamma = 1.0,
                                        std::vector<int>* argmax = nullptr) {
  const std::size_t n = g.node_count();
  std::vector<int> rgs(n, 0), max_prefix(n, 0);
  double best = -1e300;
  while (true) {
    const double q = oracle::modularity(g, rgs, gamma);
    if (q > best) {
      best = q;
      if (argmax) *argmax = rgs;
    }
    std::size_t i = n;
    while (i-- > 1) {
      if (rgs[i] <= max_prefix[i - 1]) break;
    }
    if (i == 0 || i >= n) break;
    ++rgs[i];
    for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
    for (std::size_t j = i; j < n; ++j) max_prefix[j] = std::max(max_prefix[j - 1], rgs[j]);
  }
  return best;
}

inline stylo::WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, double density) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("n" + std::to_string(i));
  stylo::WeightedGraph g(ids);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (u(rng) < density) g.add_edge(i, j, 0.05 + u(rng));
  return g;
}

}  // namespace oracle
