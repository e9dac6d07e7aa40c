#include "jsj/graph.hpp"

#include <algorithm>
#include <numeric>

#include "jsj/errors.hpp"

namespace jsj {

VertexIndex BipartiteMultigraph::add_vertex(std::string id, VertexKind kind) {
  if (by_id_.contains(id)) throw InvalidInput("duplicate vertex id: " + id);
  const VertexIndex i = vertices_.size();
  by_id_.emplace(id, i);
  vertices_.push_back({std::move(id), kind});
  adjacency_.emplace_back();
  return i;
}

void BipartiteMultigraph::add_edge(VertexIndex a, VertexIndex b, std::uint64_t multiplicity) {
  if (a >= vertices_.size() || b >= vertices_.size()) throw InvalidInput("edge endpoint out of range");
  if (a == b) throw InvalidInput("self-loop at vertex " + vertices_[a].id);
  if (multiplicity == 0) throw InvalidInput("edge multiplicity must be positive");
  // Curve endpoint first when the kinds differ, else lower index first.
  if ((vertices_[a].kind == VertexKind::Fuchsian && vertices_[b].kind == VertexKind::TwoEnded) ||
      (vertices_[a].kind == vertices_[b].kind && b < a))
    std::swap(a, b);
  const auto key = std::minmax(a, b);
  if (auto it = bundle_of_.find(key); it != bundle_of_.end()) {
    Edge& e = edges_[it->second];
    e.multiplicity += multiplicity;
    for (auto& adj : adjacency_[a])
      if (adj.edge == it->second) adj.multiplicity = e.multiplicity;
    for (auto& adj : adjacency_[b])
      if (adj.edge == it->second) adj.multiplicity = e.multiplicity;
    return;
  }
  const std::size_t idx = edges_.size();
  edges_.push_back({a, b, multiplicity});
  bundle_of_.emplace(key, idx);
  adjacency_[a].push_back({b, multiplicity, idx});
  adjacency_[b].push_back({a, multiplicity, idx});
}

void BipartiteMultigraph::add_edge(std::string_view a, std::string_view b, std::uint64_t multiplicity) {
  add_edge(index_of(a), index_of(b), multiplicity);
}

std::uint64_t BipartiteMultigraph::edge_count() const {
  std::uint64_t n = 0;
  for (const auto& e : edges_) n += e.multiplicity;
  return n;
}

std::optional<VertexIndex> BipartiteMultigraph::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

VertexIndex BipartiteMultigraph::index_of(std::string_view id) const {
  if (auto i = find(id)) return *i;
  throw InvalidInput("unknown vertex id: " + std::string(id));
}

std::uint64_t BipartiteMultigraph::multiplicity(VertexIndex a, VertexIndex b) const {
  auto it = bundle_of_.find(std::minmax(a, b));
  return it == bundle_of_.end() ? 0 : edges_[it->second].multiplicity;
}

std::uint64_t BipartiteMultigraph::valence(VertexIndex i) const {
  std::uint64_t n = 0;
  for (const auto& adj : adjacency_.at(i)) n += adj.multiplicity;
  return n;
}

std::vector<VertexIndex> BipartiteMultigraph::vertices_of_kind(VertexKind k) const {
  std::vector<VertexIndex> out;
  for (VertexIndex i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].kind == k) out.push_back(i);
  return out;
}

std::vector<std::vector<VertexIndex>> connected_components(const BipartiteMultigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<VertexIndex>> out;
  for (VertexIndex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<VertexIndex> comp{s};
    seen[s] = true;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (const auto& adj : g.neighbors(comp[k]))
        if (!seen[adj.vertex]) {
          seen[adj.vertex] = true;
          comp.push_back(adj.vertex);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const BipartiteMultigraph& g) {
  return g.vertex_count() > 0 && connected_components(g).size() == 1;
}

bool simple_graph_is_forest(const BipartiteMultigraph& g) {
  return g.bundle_count() + connected_components(g).size() == g.vertex_count();
}

bool is_forest(const BipartiteMultigraph& g) {
  return simple_graph_is_forest(g) &&
         std::all_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.multiplicity == 1; });
}

bool is_tree(const BipartiteMultigraph& g) { return is_connected(g) && is_forest(g); }

BipartiteMultigraph induced_subgraph(const BipartiteMultigraph& g, const std::vector<bool>& keep,
                                     std::vector<VertexIndex>* projection) {
  BipartiteMultigraph out;
  std::vector<VertexIndex> remap(g.vertex_count(), 0);
  if (projection) projection->clear();
  for (VertexIndex i = 0; i < g.vertex_count(); ++i) {
    if (!keep.at(i)) continue;
    remap[i] = out.add_vertex(g.id(i), g.kind(i));
    if (projection) projection->push_back(i);
  }
  for (const auto& e : g.edges())
    if (keep[e.u] && keep[e.v]) out.add_edge(remap[e.u], remap[e.v], e.multiplicity);
  return out;
}

ValidationReport validate_jsj_graph(const BipartiteMultigraph& g) {
  ValidationReport report;
  if (g.vertex_count() == 0) {
    report.emplace_back("graph has no vertices");
    return report;
  }
  if (g.vertices_of_kind(VertexKind::TwoEnded).empty()) report.emplace_back("no TwoEnded vertex");
  if (g.vertices_of_kind(VertexKind::Fuchsian).empty()) report.emplace_back("no Fuchsian vertex");
  for (const auto& e : g.edges()) {
    if (g.kind(e.u) != g.kind(e.v)) continue;
    const char* what = g.kind(e.u) == VertexKind::TwoEnded ? "edge joins two TwoEnded vertices"
                                                           : "edge joins two Fuchsian vertices";
    report.push_back(std::string(what) + ": " + g.id(e.u) + " " + g.id(e.v));
  }
  if (!is_connected(g)) report.emplace_back("disconnected");
  return report;
}

void ChiDecoration::set(VertexIndex v, Rational chi) { values_.at(v) = std::move(chi); }

ValidationReport validate_chi(const BipartiteMultigraph& g, const ChiDecoration& chi) {
  ValidationReport report;
  if (chi.size() != g.vertex_count()) {
    report.emplace_back("chi decoration size mismatch");
    return report;
  }
  for (VertexIndex v : g.vertices_of_kind(VertexKind::Fuchsian)) {
    const auto& x = chi.get(v);
    if (!x)
      report.push_back("missing chi: " + g.id(v));
    else if (x->sign() >= 0)
      report.push_back("chi must be negative: " + g.id(v));
  }
  return report;
}

PManifold::PManifold(BipartiteMultigraph graph, std::vector<std::int64_t> chi)
    : graph_(std::move(graph)), chi_(std::move(chi)) {
  if (chi_.size() != graph_.vertex_count()) throw InvalidInput("chi vector size mismatch");
  for (VertexIndex v = 0; v < chi_.size(); ++v)
    if (graph_.kind(v) == VertexKind::TwoEnded) chi_[v] = 0;
}

ChiDecoration PManifold::decoration() const {
  ChiDecoration d(graph_.vertex_count());
  for (VertexIndex v : graph_.vertices_of_kind(VertexKind::Fuchsian)) d.set(v, Rational(chi_[v]));
  return d;
}

std::optional<PManifold> make_pmanifold(const BipartiteMultigraph& g, const ChiDecoration& chi) {
  if (chi.size() != g.vertex_count()) return std::nullopt;
  std::vector<std::int64_t> values(g.vertex_count(), 0);
  for (VertexIndex v : g.vertices_of_kind(VertexKind::Fuchsian)) {
    const auto& x = chi.get(v);
    if (!x || !x->is_integer()) return std::nullopt;
    const BigInt n = x->numerator();
    if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
      return std::nullopt;
    values[v] = static_cast<std::int64_t>(n);
  }
  return PManifold(g, std::move(values));
}

ValidationReport validate_pmanifold(const PManifold& p, bool strict) {
  const auto& g = p.graph();
  ValidationReport report = validate_jsj_graph(g);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (g.kind(v) == VertexKind::Fuchsian) {
      if (p.chi(v) >= 0) report.push_back("chi must be negative: " + g.id(v));
      if (g.valence(v) == 0) report.push_back("surface has empty boundary: " + g.id(v));
    } else if (strict && g.valence(v) < 3) {
      report.push_back("curve valence < 3: " + g.id(v));
    }
  }
  return report;
}

}  // namespace jsj
