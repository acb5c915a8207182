#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stylo/error.hpp"
#include "stylo/graph.hpp"
#include "stylo/registry.hpp"
#include "stylo/similarity.hpp"
#include "stylo/stats.hpp"
#include "stylo/vectors.hpp"

using namespace stylo;
namespace fs = std::filesystem;

namespace {

FeatureRegistry two_features() {
  return FeatureRegistry({{"f", FeatureGroup::Lexical, true}, {"g", FeatureGroup::Syntactic, true}});
}

FeatureVector vec(const std::string& id, std::vector<double> values) {
  FeatureVector v;
  v.doc_id = id;
  v.missing.assign(values.size(), false);
  v.imputed.assign(values.size(), false);
  v.active.assign(values.size(), true);
  v.values = std::move(values);
  return v;
}

FeatureVector raw(const std::string& id, std::vector<double> values) {
  auto v = vec(id, values);
  for (std::size_t i = 0; i < v.size(); ++i) v.missing[i] = std::isnan(v.values[i]);
  v.active.assign(v.size(), false);
  return v;
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> d(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

WeightedGraph clique_pair(double bridge) {
  WeightedGraph g({"a", "b", "c", "d", "e", "f"});
  for (std::size_t base : {0u, 3u})
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j) g.add_edge(base + i, base + j, 1.0);
  if (bridge > 0) g.add_edge(2, 3, bridge);
  return g;
}

}  // namespace

TEST_CASE("standard registry") {
  auto r = FeatureRegistry::standard();
  CHECK(r.size() == 36);
  CHECK(r.enabled_count() == 33);
  CHECK(r.index_of("hapax_ratio").has_value());
  CHECK_THROWS_AS(r.set_enabled("foo", true), ValidationError);
  CHECK(feature::connective_ids().size() == 8);
}

TEST_CASE("assemble vector") {
  auto reg = two_features();
  FeatureProfile p;
  p.set("f", 1.5);
  auto v = assemble_vector("d", p, reg);
  CHECK(v.values[0] == 1.5);
  CHECK(v.missing[1]);
  p.set("foo", 1.0);
  CHECK_THROWS_AS(assemble_vector("d", p, reg), ValidationError);
}

TEST_CASE("mask-aware means") {
  auto m = feature_means({raw("a", {2, 1}), raw("b", {4, NAN})});
  CHECK(m[0] == 3.0);
  CHECK(m[1] == 1.0);
  auto none = feature_means({raw("a", {2, NAN}), raw("b", {4, NAN})});
  CHECK(std::isnan(none[1]));
}

TEST_CASE("normalize values") {
  auto reg = two_features();
  std::vector<double> means{0.22, 3.0};
  auto plain = normalize(raw("d", {0.44, NAN}), reg, means, {}, WeightConfig::unweighted());
  CHECK(plain.values[0] == doctest::Approx(200.0).epsilon(1e-12));
  CHECK(plain.values[1] == 100.0);
  CHECK(plain.imputed[1]);

  WeightConfig w;
  w.coefficients["f"] = 100.0;
  w.coefficients["g"] = 4.0;
  auto attenuated = normalize(raw("d", {0.44, NAN}), reg, means, {}, w);
  CHECK(attenuated.values[0] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(attenuated.values[1] == 25.0);

  CHECK_THROWS_AS(normalize(raw("d", {1, 1}), reg, {0.0, 1.0}, {}, WeightConfig::unweighted()), ValidationError);
  auto skipped = normalize(raw("d", {1, 1}), reg, {0.0, 1.0}, {"f"}, WeightConfig::unweighted());
  CHECK_FALSE(skipped.active[0]);
}

TEST_CASE("internal normalization of two docs") {
  auto reg = two_features();
  std::vector<std::string> warnings;
  auto n = normalize_internal({raw("a", {2, NAN}), raw("b", {4, NAN})}, reg, &warnings);
  CHECK(n[0].values[0] == doctest::Approx(200.0 / 3.0));
  CHECK(n[1].values[0] == doctest::Approx(400.0 / 3.0));
  CHECK_FALSE(n[0].active[1]);
  CHECK(warnings.size() == 1);
}

TEST_CASE("weight validation") {
  auto reg = FeatureRegistry::standard();
  WeightConfig::quality_preset().validate(reg);
  CHECK(WeightConfig::quality_preset().coefficients.size() == 10);
  CHECK(WeightConfig::quality_preset().excluded.size() == 4);
  WeightConfig bad;
  bad.coefficients["lr1"] = 0.5;
  CHECK_THROWS_AS(bad.validate(reg), ValidationError);
  WeightConfig unknown;
  unknown.excluded.insert("nope");
  CHECK_THROWS_AS(unknown.validate(reg), ValidationError);
  WeightConfig both;
  both.coefficients["lr1"] = 2;
  both.excluded.insert("lr1");
  CHECK_THROWS_AS(both.validate(reg), ValidationError);
}

TEST_CASE("baseline classes and strategies") {
  auto reg = two_features();
  std::vector<FeatureVector> v{raw("a", {1, 2}), raw("b", {2, 1}), raw("c", {3, 5}), raw("d", {4, 2})};
  auto b = compute_baseline(v, reg, {{"a", "Aw"}, {"b", "HQ"}, {"c", "SQ"}, {"d", "SP"}}, {},
                            WeightConfig::unweighted());
  CHECK(b.class_labels(Strategy::Original) == std::vector<std::string>{"Aw", "HQ", "SP", "SQ"});
  CHECK(b.class_labels(Strategy::Merged) == std::vector<std::string>{"NEG", "POS"});
  CHECK_FALSE(b.has_strategy(Strategy::Automatic));
  CHECK(b.members(Strategy::Merged, "POS") == std::vector<std::size_t>{0, 1});
  CHECK_THROWS_AS(compute_baseline(v, reg, {{"a", "Aw"}}, {}, WeightConfig::unweighted()), ValidationError);
  CHECK(parse_strategy("automatic") == Strategy::Automatic);
  CHECK_THROWS_AS(parse_strategy("other"), ValidationError);
}

TEST_CASE("pearson examples") {
  std::vector<double> a{1, 2, 3}, b{2, 4, 6}, c{3, 2, 1};
  CHECK(stats::pearson(a, b) == doctest::Approx(1.0));
  CHECK(stats::pearson(a, c) == doctest::Approx(-1.0));
  std::vector<double> x{1, 2, 3, 4}, y{1, 3, 2, 4};
  CHECK(stats::pearson(x, y) == doctest::Approx(0.8).epsilon(1e-14));
  std::vector<double> flat{5, 5, 5};
  CHECK_THROWS_AS(stats::pearson(a, flat), UndefinedStatistic);
}

TEST_CASE("kendall examples") {
  std::vector<double> x{1, 2, 3, 4}, y{1, 3, 2, 4}, rev{4, 3, 2, 1};
  CHECK(stats::kendall_tau_b(x, x) == 1.0);
  CHECK(stats::kendall_tau_b(x, rev) == -1.0);
  auto k = stats::kendall(x, y);
  CHECK(k.s == 4);
  CHECK(k.tau == doctest::Approx(4.0 / 6.0));
  std::vector<double> tied{2, 2, 2, 2};
  CHECK_THROWS_AS(stats::kendall(x, tied), UndefinedStatistic);
}

TEST_CASE("kendall exact p for n=4") {
  CHECK(stats::kendall_p(1.0, 4, {}) == doctest::Approx(2.0 / 24.0).epsilon(1e-14));
  CHECK(stats::kendall_p_exact(1.0, 4, {}) == doctest::Approx(2.0 / 24.0).epsilon(1e-14));
}

TEST_CASE("kendall p against frozen reference values") {
  // scipy.stats.kendalltau(..., variant='b', method='asymptotic')
  std::vector<double> x{1, 2, 2, 3, 4, 5, 5, 5, 6, 7, 8, 9}, y{2, 1, 3, 3, 5, 4, 6, 6, 8, 7, 9, 9};
  auto k = stats::kendall(x, y);
  CHECK(k.tau == doctest::Approx(0.8640276493271748).epsilon(1e-12));
  CHECK(stats::kendall_p(k.tau, k.n, k.ties) == doctest::Approx(0.00016334425586048802).epsilon(1e-9));
  // scipy.stats.kendalltau(..., method='exact')
  std::vector<double> a{1, 2, 3, 4, 5, 6, 7}, b{2, 1, 4, 3, 7, 5, 6};
  auto e = stats::kendall(a, b);
  CHECK(e.tau == doctest::Approx(0.6190476190476191).epsilon(1e-12));
  CHECK(stats::kendall_p(e.tau, e.n, e.ties) == doctest::Approx(0.06904761904761905).epsilon(1e-12));
  CHECK(stats::kendall_p(0.345, 1056, {}) == doctest::Approx(2.9408150232586855e-63).epsilon(1e-6));
  CHECK(stats::kendall_p(0.345, 1056, {}) < 0.05);
  CHECK(stats::kendall_p(0.0, 500, {}) == doctest::Approx(1.0));
}

TEST_CASE("exact and normal p agree in the tail for moderate n") {
  std::vector<double> x, y;
  for (int i = 0; i < 9; ++i) {
    x.push_back(i);
    y.push_back((i * 4) % 9);
  }
  auto k = stats::kendall(x, y);
  CHECK(stats::kendall_p_exact(k.tau, k.n, k.ties) == doctest::Approx(stats::kendall_p_normal(k.tau, k.n, k.ties)).epsilon(0.25));
}

TEST_CASE("pearson p") {
  CHECK(stats::pearson_p(0.0, 10) == 1.0);
  CHECK(stats::pearson_p(0.0, 1000) == 1.0);
  // df = 1: t is Cauchy, p = 1 - 2/pi atan(t)
  const double pi = std::acos(-1.0);
  for (double r : {0.1, 0.5, 0.9}) {
    double t = r / std::sqrt(1 - r * r);
    CHECK(stats::pearson_p(r, 3) == doctest::Approx(1 - 2 / pi * std::atan(t)).epsilon(1e-12));
  }
  // df = 2: F(t) = 1/2 + t / (2 sqrt(2 + t^2))
  for (double r : {0.2, 0.6, 0.95}) {
    double t = r * std::sqrt(2 / (1 - r * r));
    CHECK(stats::pearson_p(r, 4) == doctest::Approx(1 - t / std::sqrt(2 + t * t)).epsilon(1e-12));
  }
  // scipy.stats.t.sf
  CHECK(stats::pearson_p(0.3, 20) == doctest::Approx(0.1987577173445536).epsilon(1e-10));
  CHECK(stats::pearson_p(0.5237, 1056) == doctest::Approx(2.0014211223045552e-75).epsilon(1e-6));
  std::vector<double> x{1, 2, 2, 3, 4, 5, 5, 5, 6, 7, 8, 9}, y{2, 1, 3, 3, 5, 4, 6, 6, 8, 7, 9, 9};
  auto pr = stats::pearson_with_p(x, y);
  CHECK(pr.r == doctest::Approx(0.9424761383922893).epsilon(1e-12));
  CHECK(pr.p == doctest::Approx(4.501855011806484e-06).epsilon(1e-9));
  std::vector<double> lx, ly;
  for (int i = 0; i < 10; ++i) {
    lx.push_back(i);
    ly.push_back(3 * i + 1);
  }
  auto lin = stats::pearson_with_p(lx, ly);
  CHECK(lin.r == doctest::Approx(1.0));
  CHECK(lin.p < 1e-12);
}

TEST_CASE("p decreases as |r| grows") {
  double prev = 1.0;
  for (int i = 1; i < 100; ++i) {
    double p = stats::pearson_p(i / 100.0, 30);
    CHECK(p <= prev);
    prev = p;
  }
}

TEST_CASE("compensated sum") {
  std::vector<double> v{1e16, 1.0, -1e16, 1.0};
  CHECK(stats::compensated_sum(v) == 2.0);
}

TEST_CASE("similarity matrix") {
  std::mt19937_64 rng(7);
  std::vector<FeatureVector> v;
  for (int i = 0; i < 3; ++i) v.push_back(vec("d" + std::to_string(i), random_vector(rng, 10)));
  auto m = build_similarity_matrix(v);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(m(i, i) == 1.0);
    for (std::size_t j = 0; j < 3; ++j) {
      CHECK(m(i, j) == m(j, i));
      if (i != j) CHECK(m(i, j) == doctest::Approx(oracle::pearson(v[i].values, v[j].values)).epsilon(1e-12));
    }
  }
  auto shifted = v[0];
  for (auto& x : shifted.values) x = 2 * x - 7;
  auto pair = build_similarity_matrix({v[0], shifted});
  CHECK(pair(0, 1) == doctest::Approx(1.0).epsilon(1e-14));
  auto same = build_similarity_matrix({v[1], v[1], v[1]});
  CHECK(same(0, 2) == doctest::Approx(1.0));
  CHECK_THROWS_AS(build_similarity_matrix({v[0], vec("flat", std::vector<double>(10, 3.0))}), UndefinedStatistic);
}

TEST_CASE("parallel similarity matches serial bit for bit") {
  std::mt19937_64 rng(11);
  std::vector<FeatureVector> v;
  for (int i = 0; i < 60; ++i) v.push_back(vec("d" + std::to_string(i), random_vector(rng, 33)));
  v[5].active[3] = false;
  auto a = build_similarity_matrix(v);
  auto b = build_similarity_matrix_serial(v);
  CHECK(a.data == b.data);
  CHECK(shared_active_dims(v).size() == 32);
}

TEST_CASE("rohde transform") {
  CHECK(rohde(-0.5) == 0.0);
  CHECK(rohde(0.0) == 0.0);
  CHECK(rohde(0.25) == 0.5);
  CHECK(rohde(1.0) == 1.0);
  SimilarityMatrix m{{"a", "b"}, {1.0, -0.3, -0.3, 1.0}};
  auto t = rohde_transform(m);
  CHECK(t(0, 1) == 0.0);
  CHECK(t(0, 0) == 1.0);
}

TEST_CASE("graph construction") {
  SimilarityMatrix tri{{"a", "b", "c"}, {1, 0.8, 0.8, 0.8, 1, 0.8, 0.8, 0.8, 1}};
  CHECK(build_graph(tri).edges().size() == 3);
  SimilarityMatrix zero{{"a", "b"}, {1, 0.0, 0.0, 1}};
  CHECK(build_graph(zero).edges().empty());
  SimilarityMatrix mixed{{"a", "b", "c"}, {1, 0.8, 0.95, 0.8, 1, 0.0, 0.95, 0.0, 1}};
  CHECK(build_graph(mixed, 0.9).edges().size() == 1);
  WeightedGraph g({"a", "b"});
  CHECK_THROWS_AS(g.add_edge(0, 0, 1.0), ValidationError);
  g.add_edge(0, 1, 1.0);
  CHECK_THROWS_AS(g.add_edge(1, 0, 1.0), ValidationError);
  WeightedGraph h({"a", "b"});
  CHECK_THROWS_AS(h.add_edge(0, 1, 0.0), ValidationError);
}

TEST_CASE("modularity examples") {
  WeightedGraph one({"a", "b"});
  one.add_edge(0, 1, 1.0);
  CHECK(modularity(one, {0, 0}) == doctest::Approx(0.0));
  auto cliques = clique_pair(0.0);
  CHECK(modularity(cliques, {0, 0, 0, 1, 1, 1}) == doctest::Approx(0.5));
  CHECK(modularity(cliques, {0, 1, 2, 3, 4, 5}) <= 0.0);
  WeightedGraph empty({"a", "b"});
  CHECK_THROWS_AS(modularity(empty, {0, 1}), ValidationError);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto g = oracle::random_graph(rng, 7, 0.6);
    if (g.edges().empty()) continue;
    Partition p(7);
    for (auto& c : p) c = static_cast<int>(rng() % 3);
    for (double gamma : {0.5, 1.0, 2.0}) CHECK(modularity(g, p, gamma) == doctest::Approx(oracle::modularity(g, p, gamma)).epsilon(1e-12));
  }
}

TEST_CASE("louvain on small graphs") {
  auto split = louvain(clique_pair(0.1));
  CHECK(split.partition == Partition{0, 0, 0, 1, 1, 1});
  CHECK(split.modularity == doctest::Approx(oracle::exhaustive_max_modularity(clique_pair(0.1))).epsilon(1e-12));

  WeightedGraph k4({"a", "b", "c", "d"});
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) k4.add_edge(i, j, 1.0);
  auto whole = louvain(k4);
  CHECK(community_count(whole.partition) == 1);
  CHECK(whole.modularity == doctest::Approx(oracle::exhaustive_max_modularity(k4)).epsilon(1e-12));
}

TEST_CASE("louvain is deterministic per seed") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    auto g = oracle::random_graph(rng, 12, 0.3);
    if (g.edges().empty()) continue;
    for (std::uint64_t seed : {1u, 42u, 1234u}) {
      auto a = louvain(g, 1.0, seed);
      auto b = louvain(g, 1.0, seed);
      CHECK(a.partition == b.partition);
      CHECK(a.modularity == b.modularity);
      CHECK(a.modularity == doctest::Approx(modularity(g, a.partition)).epsilon(1e-12));
      CHECK(canonical_partition(a.partition) == a.partition);
    }
  }
}

TEST_CASE("canonical partition numbering") {
  CHECK(canonical_partition({5, 5, 2, 9, 2, 2}) == Partition{1, 1, 0, 2, 0, 0});
  CHECK(canonical_partition({3, 1, 3, 1}) == Partition{0, 1, 0, 1});
  CHECK(community_count({0, 2, 1, 2}) == 3);
}

TEST_CASE("graph export and import") {
  auto g = clique_pair(0.1);
  auto p = louvain(g).partition;
  auto dir = fs::temp_directory_path() / "stylo_graph_io";
  fs::create_directories(dir);
  std::ofstream(dir / "edges.csv") << edges_csv(g);
  std::ofstream(dir / "communities.csv") << communities_csv(g, p);
  CHECK(edges_csv(g).rfind("source,target,weight\n", 0) == 0);
  auto back = import_graph(dir / "edges.csv", dir / "communities.csv");
  CHECK(back.nodes() == g.nodes());
  CHECK(back.edges().size() == g.edges().size());
  CHECK(edges_csv(back) == edges_csv(g));
  auto x = gexf(g, p);
  CHECK(x.find("<gexf") != std::string::npos);
  CHECK(x.find("community") != std::string::npos);
}

TEST_CASE("pinned louvain shortfall") {
  // Every visit order converges to {0,4} {1,3} {2,5}; the optimum is {0,4,5} {1,2,3}.
  WeightedGraph g({"n0", "n1", "n2", "n3", "n4", "n5"});
  const double w[][3] = {{0, 1, 0.212}, {0, 2, 0.143}, {0, 3, 0.341}, {0, 4, 1.045}, {0, 5, 0.799}, {1, 2, 0.267},
                         {1, 3, 0.688}, {1, 4, 0.632}, {2, 3, 0.451}, {2, 5, 0.724}, {4, 5, 0.230}};
  for (const auto& e : w) g.add_edge(static_cast<std::size_t>(e[0]), static_cast<std::size_t>(e[1]), e[2]);
  std::vector<int> best_partition;
  const double best = oracle::exhaustive_max_modularity(g, 1.0, &best_partition);
  CHECK(best == doctest::Approx(0.121776723764).epsilon(1e-10));
  CHECK(canonical_partition(best_partition) == Partition{0, 1, 1, 1, 0, 0});
  for (std::uint64_t seed : {1u, 7u, 42u}) {
    auto r = louvain(g, 1.0, seed);
    CHECK(r.partition == Partition{0, 1, 2, 1, 0, 2});
    CHECK(r.modularity == doctest::Approx(0.103736496759).epsilon(1e-10));
  }
}

TEST_CASE("louvain beats the trivial partitions") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    auto g = oracle::random_graph(rng, 2 + rng() % 10, 0.5);
    if (g.edges().empty()) continue;
    auto r = louvain(g);
    Partition singletons(g.node_count()), together(g.node_count(), 0);
    std::iota(singletons.begin(), singletons.end(), 0);
    CHECK(r.modularity >= modularity(g, singletons) - 1e-12);
    CHECK(r.modularity >= modularity(g, together) - 1e-12);
    // relabeling leaves Q unchanged
    Partition shuffled = r.partition;
    for (auto& c : shuffled) c = 100 - c;
    CHECK(modularity(g, shuffled) == doctest::Approx(r.modularity).epsilon(1e-12));
  }
}
