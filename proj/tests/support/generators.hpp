#pragma once

// Random instance generators shared by the unit tests and the acceptance suite.

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "jsj/graph.hpp"

namespace jsj::testing {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline std::string fresh_id(VertexKind k, std::size_t i) {
  return (k == VertexKind::TwoEnded ? "c" : "s") + std::to_string(i);
}

// Tree grown by attaching each new vertex to a random earlier one of the
// opposite kind. The first vertex is a curve.
inline BipartiteMultigraph random_tree(Rng& rng, std::size_t vertices, std::uint64_t max_mult = 1) {
  BipartiteMultigraph g;
  g.add_vertex("c0", VertexKind::TwoEnded);
  for (std::size_t i = 1; i < vertices; ++i) {
    VertexIndex parent = uniform(rng, 0, i - 1);
    const VertexKind k = g.kind(parent) == VertexKind::TwoEnded ? VertexKind::Fuchsian : VertexKind::TwoEnded;
    const VertexIndex v = g.add_vertex(fresh_id(k, i), k);
    g.add_edge(parent, v, uniform(rng, 1, max_mult));
  }
  return g;
}

// Connected JSJ graph: a random tree plus `extra` random curve-surface edges.
inline BipartiteMultigraph random_connected(Rng& rng, std::size_t vertices, std::size_t extra,
                                            std::uint64_t max_mult = 3) {
  BipartiteMultigraph g = random_tree(rng, std::max<std::size_t>(vertices, 2), max_mult);
  const auto curves = g.vertices_of_kind(VertexKind::TwoEnded);
  const auto surfaces = g.vertices_of_kind(VertexKind::Fuchsian);
  for (std::size_t i = 0; i < extra; ++i)
    g.add_edge(curves[uniform(rng, 0, curves.size() - 1)], surfaces[uniform(rng, 0, surfaces.size() - 1)],
               uniform(rng, 1, max_mult));
  return g;
}

// Any bipartite multigraph on the given number of vertices, possibly
// disconnected, with edge multiplicities up to max_mult.
inline BipartiteMultigraph random_bipartite(Rng& rng, std::size_t vertices, std::uint64_t max_mult) {
  BipartiteMultigraph g;
  for (std::size_t i = 0; i < vertices; ++i) {
    const VertexKind k = uniform(rng, 0, 1) ? VertexKind::TwoEnded : VertexKind::Fuchsian;
    g.add_vertex(fresh_id(k, i), k);
  }
  for (VertexIndex a = 0; a < vertices; ++a)
    for (VertexIndex b = a + 1; b < vertices; ++b)
      if (g.kind(a) != g.kind(b) && uniform(rng, 0, 1)) g.add_edge(a, b, uniform(rng, 1, max_mult));
  return g;
}

// Forest with every curve of degree n and all multiplicities 1, plus
// random negative chi. Each component starts at a curve and branches
// through surfaces of one to three boundary curves.
inline PManifold random_uniform_forest(Rng& rng, std::uint64_t n, std::size_t components, std::size_t max_curves) {
  BipartiteMultigraph g;
  std::size_t next = 0;
  for (std::size_t comp = 0; comp < components; ++comp) {
    std::vector<VertexIndex> open_curves{g.add_vertex(fresh_id(VertexKind::TwoEnded, next++), VertexKind::TwoEnded)};
    std::size_t curves = 1;
    std::vector<std::uint64_t> missing{n};
    std::vector<VertexIndex> todo{open_curves.front()};
    while (!todo.empty()) {
      const VertexIndex c = todo.back();
      todo.pop_back();
      const std::uint64_t need = missing.back();
      missing.pop_back();
      for (std::uint64_t k = 0; k < need; ++k) {
        const VertexIndex s = g.add_vertex(fresh_id(VertexKind::Fuchsian, next++), VertexKind::Fuchsian);
        g.add_edge(c, s);
        const std::uint64_t more = curves < max_curves ? uniform(rng, 0, 2) : 0;
        for (std::uint64_t m = 0; m < more && curves < max_curves; ++m, ++curves) {
          const VertexIndex d = g.add_vertex(fresh_id(VertexKind::TwoEnded, next++), VertexKind::TwoEnded);
          g.add_edge(d, s);
          todo.push_back(d);
          missing.push_back(n - 1);
        }
      }
    }
  }
  std::vector<std::int64_t> chi(g.vertex_count(), 0);
  for (VertexIndex v : g.vertices_of_kind(VertexKind::Fuchsian))
    chi[v] = -static_cast<std::int64_t>(uniform(rng, 1, 6));
  return PManifold(std::move(g), std::move(chi));
}

// Copy of g with vertices in shuffled order and fresh ids; order[i] is the
// old index of new vertex i.
struct Relabelled {
  BipartiteMultigraph graph;
  std::vector<VertexIndex> order;
};

inline Relabelled relabel(Rng& rng, const BipartiteMultigraph& g) {
  Relabelled out;
  out.order.resize(g.vertex_count());
  std::iota(out.order.begin(), out.order.end(), VertexIndex{0});
  std::shuffle(out.order.begin(), out.order.end(), rng);
  std::vector<VertexIndex> position(g.vertex_count());
  for (VertexIndex i = 0; i < out.order.size(); ++i) {
    position[out.order[i]] = i;
    out.graph.add_vertex("v" + std::to_string(i) + "_" + g.id(out.order[i]), g.kind(out.order[i]));
  }
  std::vector<Edge> edges = g.edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  for (const Edge& e : edges) out.graph.add_edge(position[e.u], position[e.v], e.multiplicity);
  return out;
}

}  // namespace jsj::testing
