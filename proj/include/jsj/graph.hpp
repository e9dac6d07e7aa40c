#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "jsj/rational.hpp"

namespace jsj {

/// Two-ended ("curve", Type I) or maximal hanging Fuchsian ("surface", Type II).
enum class VertexKind : std::uint8_t { TwoEnded, Fuchsian };

constexpr char kind_letter(VertexKind k) { return k == VertexKind::TwoEnded ? 'T' : 'F'; }
constexpr std::string_view kind_name(VertexKind k) {
  return k == VertexKind::TwoEnded ? "curve" : "surface";
}

using VertexIndex = std::size_t;

struct Vertex {
  std::string id;
  VertexKind kind;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// A bundle of parallel edges between two vertices.
struct Edge {
  VertexIndex u;
  VertexIndex v;
  std::uint64_t multiplicity;

  VertexIndex other(VertexIndex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Adjacency {
  VertexIndex vertex;
  std::uint64_t multiplicity;
  std::size_t edge;
};

/// Finite multigraph whose vertices carry a VertexKind. Edges are stored as
/// bundles (one record per unordered vertex pair, in order of first
/// appearance). The bipartite-by-kind property is checked by validation, not
/// enforced, so that malformed inputs can be reported rather than rejected.
/// Self-loops are rejected outright.
class BipartiteMultigraph {
public:
  VertexIndex add_vertex(std::string id, VertexKind kind);
  /// Adds `multiplicity` parallel edges; repeated pairs accumulate.
  void add_edge(VertexIndex a, VertexIndex b, std::uint64_t multiplicity = 1);
  void add_edge(std::string_view a, std::string_view b, std::uint64_t multiplicity = 1);

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t bundle_count() const { return edges_.size(); }
  std::uint64_t edge_count() const;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(VertexIndex i) const { return vertices_.at(i); }
  VertexKind kind(VertexIndex i) const { return vertices_.at(i).kind; }
  const std::string& id(VertexIndex i) const { return vertices_.at(i).id; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::optional<VertexIndex> find(std::string_view id) const;
  /// Throws InvalidInput for unknown ids.
  VertexIndex index_of(std::string_view id) const;

  std::span<const Adjacency> neighbors(VertexIndex i) const { return adjacency_.at(i); }
  std::uint64_t multiplicity(VertexIndex a, VertexIndex b) const;
  /// Number of edge ends at `i`, counted with multiplicity.
  std::uint64_t valence(VertexIndex i) const;

  std::vector<VertexIndex> vertices_of_kind(VertexKind k) const;

  friend bool operator==(const BipartiteMultigraph& a, const BipartiteMultigraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Adjacency>> adjacency_;
  std::unordered_map<std::string, VertexIndex> by_id_;
  std::map<std::pair<VertexIndex, VertexIndex>, std::size_t> bundle_of_;
};

/// Connected components as vertex lists, each sorted, ordered by smallest member.
std::vector<std::vector<VertexIndex>> connected_components(const BipartiteMultigraph& g);
bool is_connected(const BipartiteMultigraph& g);
/// Underlying simple graph (bundles collapsed to single edges) has no cycle.
bool simple_graph_is_forest(const BipartiteMultigraph& g);
/// The multigraph itself is a forest: simple graph acyclic and every multiplicity 1.
bool is_forest(const BipartiteMultigraph& g);
/// Connected forest in the multigraph sense.
bool is_tree(const BipartiteMultigraph& g);

/// Subgraph on the vertices with keep[i] set, preserving vertex and edge order.
/// `projection`, when given, receives the original index of each kept vertex.
BipartiteMultigraph induced_subgraph(const BipartiteMultigraph& g, const std::vector<bool>& keep,
                                     std::vector<VertexIndex>* projection = nullptr);

using ValidationReport = std::vector<std::string>;

/// Empty iff g is non-empty, connected, bipartite by kind, with at least one
/// vertex of each kind.
ValidationReport validate_jsj_graph(const BipartiteMultigraph& g);

/// Rational Euler characteristics attached to the Fuchsian vertices of a graph.
class ChiDecoration {
public:
  ChiDecoration() = default;
  explicit ChiDecoration(std::size_t vertex_count) : values_(vertex_count) {}

  void set(VertexIndex v, Rational chi);
  const std::optional<Rational>& get(VertexIndex v) const { return values_.at(v); }
  std::size_t size() const { return values_.size(); }

  friend bool operator==(const ChiDecoration&, const ChiDecoration&) = default;

private:
  std::vector<std::optional<Rational>> values_;
};

/// Empty iff every Fuchsian vertex carries a negative value.
ValidationReport validate_chi(const BipartiteMultigraph& g, const ChiDecoration& chi);

/// Surfaces glued along branching curves. Surfaces store their Euler
/// characteristic directly.
class PManifold {
public:
  /// `chi` is indexed by vertex; entries for curve vertices are ignored.
  PManifold(BipartiteMultigraph graph, std::vector<std::int64_t> chi);

  const BipartiteMultigraph& graph() const { return graph_; }
  std::int64_t chi(VertexIndex surface) const { return chi_.at(surface); }
  const std::vector<std::int64_t>& chi_values() const { return chi_; }

  ChiDecoration decoration() const;

  friend bool operator==(const PManifold&, const PManifold&) = default;

private:
  BipartiteMultigraph graph_;
  std::vector<std::int64_t> chi_;
};

/// Builds a PManifold when every surface chi is present and integral.
std::optional<PManifold> make_pmanifold(const BipartiteMultigraph& g, const ChiDecoration& chi);

/// Graph checks plus chi < 0 and non-empty boundary on every surface; with
/// `strict`, every curve must also have valence at least three.
ValidationReport validate_pmanifold(const PManifold& p, bool strict);

}  // namespace jsj
