// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>

#include "jsj/kernels.hpp"

namespace {

using namespace jsj;

// Random connected bipartite multigraph: a tree plus n/2 extra bundles.
BipartiteMultigraph random_graph(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  BipartiteMultigraph g;
  g.add_vertex("c0", VertexKind::TwoEnded);
  for (std::size_t i = 1; i < n; ++i) {
    const VertexIndex parent = rng() % i;
    const VertexKind k = g.kind(parent) == VertexKind::TwoEnded ? VertexKind::Fuchsian : VertexKind::TwoEnded;
    g.add_edge(parent, g.add_vertex("v" + std::to_string(i), k), 1 + rng() % 3);
  }
  const auto curves = g.vertices_of_kind(VertexKind::TwoEnded);
  const auto surfaces = g.vertices_of_kind(VertexKind::Fuchsian);
  for (std::size_t i = 0; i < n / 2; ++i)
    g.add_edge(curves[rng() % curves.size()], surfaces[rng() % surfaces.size()], 1 + rng() % 3);
  return g;
}

kernels::CoverInstance random_cover(std::size_t surfaces, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  kernels::CoverInstance inst;
  inst.surface_count = surfaces;
  for (std::size_t c = 0; c < surfaces / 3; ++c) {
    auto& row = inst.curves.emplace_back();
    for (std::size_t s = 0; s < surfaces; ++s)
      if (rng() % 4 == 0) row.emplace_back(s, 1);
  }
  return inst;
}

template <bool Parallel>
void BM_Signatures(benchmark::State& state) {
  const auto g = random_graph(static_cast<std::size_t>(state.range(0)), 1);
  std::vector<std::size_t> block_of(g.vertex_count());
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) block_of[v] = v % 16;
  for (auto _ : state) {
    auto sig = Parallel ? kernels::block_signatures_parallel(g, block_of) : kernels::block_signatures_serial(g, block_of);
    benchmark::DoNotOptimize(sig);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_ExactCover(benchmark::State& state) {
  const auto inst = random_cover(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) {
    auto subsets = Parallel ? kernels::exact_cover_subsets_parallel(inst) : kernels::exact_cover_subsets_serial(inst);
    benchmark::DoNotOptimize(subsets);
  }
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

}  // namespace

BENCHMARK(BM_Signatures<false>)->Name("signatures/serial")->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_Signatures<true>)->Name("signatures/parallel")->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_ExactCover<false>)->Name("exact_cover/serial")->Arg(16)->Arg(20);
BENCHMARK(BM_ExactCover<true>)->Name("exact_cover/parallel")->Arg(16)->Arg(20);

BENCHMARK_MAIN();
