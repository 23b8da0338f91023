#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "hyperhom/embedded.hpp"
#include "hyperhom/lattice.hpp"
#include "hyperhom/persistence.hpp"

using namespace hyperhom;

namespace {

// Chain of overlapping triples with sparse pairs: closures grow steadily with
// the vertex count without exploding.
Hypergraph strip(int vertices) {
  std::vector<Hyperedge> edges;
  auto v = [](int i) { return "v" + std::to_string(i); };
  for (int i = 0; i + 2 < vertices; ++i)
    edges.push_back(make_edge({v(i), v(i + 1), v(i + 2)}));
  for (int i = 0; i + 1 < vertices; i += 2)
    edges.push_back(make_edge({v(i), v(i + 1)}));
  for (int i = 0; i < vertices; i += 3)
    edges.push_back(make_edge({v(i)}));
  return Hypergraph::from_edges(edges);
}

Matrix random_integer_matrix(int n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  Matrix a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) a.at(r, c) = entry(rng);
  return a;
}

void bm_embedded_homology_z(benchmark::State& state) {
  Hypergraph h = strip(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(embedded_homology(h, Coefficients::Z()));
}
BENCHMARK(bm_embedded_homology_z)->Arg(6)->Arg(9)->Arg(12);

void bm_embedded_homology_q(benchmark::State& state) {
  Hypergraph h = strip(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(embedded_homology(h, Coefficients::Q()));
}
BENCHMARK(bm_embedded_homology_q)->Arg(6)->Arg(9)->Arg(12);

void bm_smith_normal_form(benchmark::State& state) {
  Matrix a = random_integer_matrix(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a));
}
BENCHMARK(bm_smith_normal_form)->Arg(8)->Arg(16)->Arg(24);

void bm_persistent_betti(benchmark::State& state) {
  Hypergraph h = strip(static_cast<int>(state.range(0)));
  const auto& verts = h.universe();
  int n = static_cast<int>(verts.size());
  Matrix dist(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) dist.at(i, j) = i < j ? j - i : i - j;
  VertexMetric metric = VertexMetric::from_distances(verts, dist);
  std::vector<Rat> radii{Rat(1, 2), Rat(3, 2), Rat(5, 2), Rat(7, 2)};
  Filtration f = metric_filtration(h, metric, radii);
  for (auto _ : state) benchmark::DoNotOptimize(persistent_betti(f, Coefficients::Q()));
}
BENCHMARK(bm_persistent_betti)->Arg(6)->Arg(9);

}  // namespace

BENCHMARK_MAIN();
