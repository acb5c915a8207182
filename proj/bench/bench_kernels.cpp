#include <benchmark/benchmark.h>

#include <random>

#include "stylo/manifest.hpp"
#include "stylo/pipeline.hpp"
#include "stylo/resources.hpp"
#include "stylo/similarity.hpp"

using namespace stylo;

namespace {

std::vector<FeatureVector> random_vectors(std::size_t docs, std::size_t dims) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> d(100.0, 20.0);
  std::vector<FeatureVector> out;
  for (std::size_t i = 0; i < docs; ++i) {
    FeatureVector v;
    v.doc_id = "d" + std::to_string(i);
    for (std::size_t f = 0; f < dims; ++f) v.values.push_back(d(rng));
    v.missing.assign(dims, false);
    v.imputed.assign(dims, false);
    v.active.assign(dims, true);
    out.push_back(std::move(v));
  }
  return out;
}

void BM_SimilarityParallel(benchmark::State& state) {
  auto v = random_vectors(static_cast<std::size_t>(state.range(0)), 33);
  for (auto _ : state) benchmark::DoNotOptimize(build_similarity_matrix(v));
  state.SetComplexityN(state.range(0));
}

void BM_SimilaritySerial(benchmark::State& state) {
  auto v = random_vectors(static_cast<std::size_t>(state.range(0)), 33);
  for (auto _ : state) benchmark::DoNotOptimize(build_similarity_matrix_serial(v));
  state.SetComplexityN(state.range(0));
}

struct MicroCorpus {
  std::vector<ManifestEntry> entries;
  LexicalResources resources;
  PipelineConfig cfg;
  MicroCorpus() {
    const std::filesystem::path data = STYLO_TEST_DATA_DIR;
    auto base = load_manifest(data / "micro" / "manifest.csv");
    for (int copy = 0; copy < 20; ++copy)
      for (auto e : base) {
        e.doc_id += "_" + std::to_string(copy);
        entries.push_back(e);
      }
    resources = load_resources(data / "resources");
  }
};

const MicroCorpus& corpus() {
  static const MicroCorpus c;
  return c;
}

void BM_ExtractParallel(benchmark::State& state) {
  const auto& c = corpus();
  for (auto _ : state) benchmark::DoNotOptimize(extract_all(c.entries, c.resources, c.cfg));
}

void BM_ExtractSerial(benchmark::State& state) {
  const auto& c = corpus();
  for (auto _ : state) benchmark::DoNotOptimize(extract_all_serial(c.entries, c.resources, c.cfg));
}

}  // namespace

BENCHMARK(BM_SimilarityParallel)->RangeMultiplier(4)->Range(16, 1024)->Complexity();
BENCHMARK(BM_SimilaritySerial)->RangeMultiplier(4)->Range(16, 1024)->Complexity();
BENCHMARK(BM_ExtractParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtractSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
