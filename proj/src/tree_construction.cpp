#include "jsj/tree_construction.hpp"

#include <algorithm>
#include <map>

#include "jsj/blocks.hpp"
#include "jsj/errors.hpp"

namespace jsj {

namespace {

// Vertices reachable from `start` without crossing bundle `skip`, sorted.
std::vector<VertexIndex> reach_without(const BipartiteMultigraph& g, VertexIndex start, std::size_t skip) {
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexIndex> out{start};
  seen[start] = true;
  for (std::size_t k = 0; k < out.size(); ++k)
    for (const auto& adj : g.neighbors(out[k]))
      if (adj.edge != skip && !seen[adj.vertex]) {
        seen[adj.vertex] = true;
        out.push_back(adj.vertex);
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<SplitSite> site_for_bundle(const BipartiteMultigraph& g, std::size_t edge) {
  const Edge& e = g.edges()[edge];
  if (g.kind(e.u) == g.kind(e.v)) return std::nullopt;
  const VertexIndex t = g.kind(e.u) == VertexKind::TwoEnded ? e.u : e.v;
  const VertexIndex f = e.other(t);
  auto f_side = reach_without(g, f, edge);
  if (std::binary_search(f_side.begin(), f_side.end(), t)) return std::nullopt;
  return SplitSite{t, f, e.multiplicity, std::move(f_side), reach_without(g, t, edge)};
}

std::size_t bundle_index(const BipartiteMultigraph& g, VertexIndex a, VertexIndex b) {
  for (const auto& adj : g.neighbors(a))
    if (adj.vertex == b) return adj.edge;
  throw InvalidInput("split site names a missing bundle");
}

bool inside(const std::vector<VertexIndex>& side, const Edge& e) {
  return std::binary_search(side.begin(), side.end(), e.u) && std::binary_search(side.begin(), side.end(), e.v);
}

std::size_t multi_bundle_count(const BipartiteMultigraph& g) {
  return static_cast<std::size_t>(
      std::count_if(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.multiplicity > 1; }));
}

void check_unwrap_preconditions(const BipartiteMultigraph& g0) {
  const auto report = validate_jsj_graph(g0);
  if (!report.empty()) throw InvalidInput("unwrap_to_tree: invalid graph: " + report.front());
  const auto m = degree_refinement(g0);
  if (m.order() != g0.vertex_count())
    throw InvalidInput("unwrap_to_tree: degree partition is not all singletons");
  if (!check_m1(m).holds) throw InvalidInput("unwrap_to_tree: condition M1 fails");
  if (!check_m2(m).holds) throw InvalidInput("unwrap_to_tree: condition M2 fails");
}

// Picks the next bundle to split among the separating multi-edge bundles.
std::optional<SplitSite> select_site(const BipartiteMultigraph& g, SplitOrder order) {
  std::vector<SplitSite> multi;
  std::vector<std::size_t> edge_of;
  for (std::size_t e = 0; e < g.bundle_count(); ++e) {
    if (g.edges()[e].multiplicity < 2) continue;
    auto site = site_for_bundle(g, e);
    if (!site) throw InternalError("multi-edge bundle does not separate the graph");
    multi.push_back(std::move(*site));
    edge_of.push_back(e);
  }
  if (multi.empty()) return std::nullopt;
  for (std::size_t a = 0; a < multi.size(); ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < multi.size() && ok; ++b) {
      if (a == b) continue;
      if (order == SplitOrder::Extremal)
        ok = !inside(multi[a].f_side, g.edges()[edge_of[b]]);
      else
        ok = !inside(multi[b].f_side, g.edges()[edge_of[a]]);
    }
    if (ok) return multi[a];
  }
  throw InternalError("no selectable multi-edge bundle although M1 and M2 hold");
}

}  // namespace

std::vector<SplitSite> find_split_sites(const BipartiteMultigraph& g) {
  std::vector<SplitSite> sites;
  for (std::size_t e = 0; e < g.bundle_count(); ++e)
    if (auto s = site_for_bundle(g, e)) sites.push_back(std::move(*s));
  return sites;
}

SplitResult split_vertex(const BipartiteMultigraph& g, const SplitSite& site) {
  if (site.t >= g.vertex_count() || site.f >= g.vertex_count() || g.kind(site.t) != VertexKind::TwoEnded ||
      g.kind(site.f) != VertexKind::Fuchsian)
    throw InvalidInput("split site endpoints do not match the graph");
  const std::size_t bundle = bundle_index(g, site.t, site.f);
  auto fresh = site_for_bundle(g, bundle);
  if (!fresh || *fresh != site) throw InvalidInput("stale split site");

  const std::vector<VertexIndex>& c = site.f_side;
  std::vector<bool> in_c(g.vertex_count(), false);
  for (VertexIndex v : c) in_c[v] = true;

  SplitResult out;
  std::vector<VertexIndex> t_side_index(g.vertex_count(), 0);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    if (in_c[v]) continue;
    t_side_index[v] = out.graph.add_vertex(g.id(v), g.kind(v));
    out.projection.push_back(v);
  }
  // copy_index[k][v] for v in C
  std::vector<std::vector<VertexIndex>> copy_index(site.r, std::vector<VertexIndex>(g.vertex_count(), 0));
  for (std::uint64_t k = 0; k < site.r; ++k)
    for (VertexIndex v : c) {
      copy_index[k][v] = out.graph.add_vertex(g.id(v) + "#" + std::to_string(k + 1), g.kind(v));
      out.projection.push_back(v);
    }
  for (std::size_t e = 0; e < g.bundle_count(); ++e) {
    const Edge& edge = g.edges()[e];
    if (e == bundle || in_c[edge.u]) continue;
    out.graph.add_edge(t_side_index[edge.u], t_side_index[edge.v], edge.multiplicity);
  }
  for (std::uint64_t k = 0; k < site.r; ++k) out.graph.add_edge(t_side_index[site.t], copy_index[k][site.f], 1);
  for (std::uint64_t k = 0; k < site.r; ++k)
    for (std::size_t e = 0; e < g.bundle_count(); ++e) {
      const Edge& edge = g.edges()[e];
      if (e == bundle || !in_c[edge.u]) continue;
      out.graph.add_edge(copy_index[k][edge.u], copy_index[k][edge.v], edge.multiplicity);
    }
  return out;
}

UnwrapResult unwrap_to_tree(const BipartiteMultigraph& g0, const UnwrapOptions& options) {
  check_unwrap_preconditions(g0);
  UnwrapResult result{g0, {}, {}};
  result.projection.resize(g0.vertex_count());
  for (VertexIndex v = 0; v < g0.vertex_count(); ++v) result.projection[v] = v;

  const std::size_t budget = multi_bundle_count(g0) + 1;
  while (auto site = select_site(result.tree, options.order)) {
    if (options.order == SplitOrder::Extremal && result.trace.size() >= budget)
      throw InternalError("unwrap_to_tree exceeded its split budget of " + std::to_string(budget));
    const std::size_t before = multi_bundle_count(result.tree);
    SplitRecord record{result.tree.id(site->t), result.tree.id(site->f), site->r, 0};
    auto split = split_vertex(result.tree, *site);
    if (options.order == SplitOrder::Extremal && multi_bundle_count(split.graph) + 1 != before)
      throw InternalError("extremal split did not remove exactly one multi-edge bundle");
    if (split.graph.vertex_count() > options.vertex_limit)
      throw ResourceLimit("unwrap_to_tree output exceeds " + std::to_string(options.vertex_limit) + " vertices");
    std::vector<VertexIndex> projection(split.projection.size());
    for (std::size_t v = 0; v < projection.size(); ++v) projection[v] = result.projection[split.projection[v]];
    result.tree = std::move(split.graph);
    result.projection = std::move(projection);
    record.vertices_after = result.tree.vertex_count();
    result.trace.push_back(std::move(record));
  }
  if (!is_tree(result.tree)) throw InternalError("unwrap_to_tree output is not a tree");
  return result;
}

std::string format_trace(const std::vector<SplitRecord>& trace) {
  std::string out;
  for (const auto& r : trace)
    out += "split " + r.t + " " + r.f + " r=" + std::to_string(r.r) + " vertices=" +
           std::to_string(r.vertices_after) + "\n";
  return out;
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Subtree {
  std::uint64_t code;
  std::uint64_t nodes;
};

class Truncator {
public:
  Truncator(const DegreeRefinement& m, std::uint64_t cap) : m_(m), cap_(cap) {}

  std::uint64_t child_count(std::size_t block, std::size_t parent, std::size_t j) const {
    const ExtNat x = m_.at(block, j);
    std::uint64_t c = x.is_infinite() ? cap_ : std::min<std::uint64_t>(x.value(), cap_);
    if (j == parent && c > 0) --c;
    return c;
  }

  Subtree code(std::size_t block, std::size_t parent, std::size_t depth) {
    const auto key = std::make_tuple(block, parent, depth);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<std::uint64_t> children;
    std::uint64_t nodes = 1;
    if (depth > 0)
      for (std::size_t j = 0; j < m_.order(); ++j) {
        const std::uint64_t c = child_count(block, parent, j);
        if (c == 0) continue;
        const Subtree sub = code(j, block, depth - 1);
        children.insert(children.end(), c, sub.code);
        nodes += c * sub.nodes;
      }
    std::sort(children.begin(), children.end());
    std::uint64_t h = mix(m_.kind(block) == VertexKind::TwoEnded ? 1 : 2);
    for (std::uint64_t c : children) h = mix(h ^ c);
    h = mix(h ^ children.size());
    return memo_[key] = Subtree{h, nodes};
  }

  std::string text(std::size_t block, std::size_t parent, std::size_t depth,
                   const std::vector<std::string>& labels) const {
    std::vector<std::string> children;
    if (depth > 0)
      for (std::size_t j = 0; j < m_.order(); ++j) {
        const std::uint64_t c = child_count(block, parent, j);
        if (c == 0) continue;
        const std::string sub = text(j, block, depth - 1, labels);
        children.insert(children.end(), c, sub);
      }
    std::sort(children.begin(), children.end());
    std::string out = labels[block];
    if (children.empty()) return out;
    out += '(';
    for (std::size_t k = 0; k < children.size(); ++k) {
      if (k) out += ',';
      out += children[k];
    }
    return out + ')';
  }

private:
  const DegreeRefinement& m_;
  std::uint64_t cap_;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Subtree> memo_;
};

void check_truncation_args(const DegreeRefinement& m, std::size_t root, std::uint64_t cap) {
  if (root >= m.order()) throw InvalidInput("root block out of range");
  if (cap < 1) throw InvalidInput("cap must be at least 1");
}

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

}  // namespace

RootedTruncation truncated_block_tree(const DegreeRefinement& m, std::size_t root, std::size_t depth,
                                      std::uint64_t cap) {
  check_truncation_args(m, root, cap);
  Truncator t(m, cap);
  const Subtree s = t.code(root, kNoParent, depth);
  return RootedTruncation{root, depth, cap, s.code, s.nodes};
}

std::string render_truncation(const DegreeRefinement& m, std::size_t root, std::size_t depth, std::uint64_t cap,
                              TruncationLabels labels) {
  check_truncation_args(m, root, cap);
  std::vector<std::string> names = m.block_names();
  if (labels == TruncationLabels::Kind)
    for (auto& s : names) s = s.substr(0, 1);
  return Truncator(m, cap).text(root, kNoParent, depth, names);
}

}  // namespace jsj
