#include "jsj/blocks.hpp"

#include <algorithm>
#include <functional>

#include "jsj/errors.hpp"

namespace jsj {

namespace {

void require_well_formed(const DegreeRefinement& m) {
  const auto report = validate_refinement(m);
  if (!report.empty()) throw InvalidInput("malformed degree refinement: " + report.front());
}

std::vector<std::string> vertex_names(const DegreeRefinement& m) {
  auto names = m.block_names();
  for (auto& s : names) s[0] = static_cast<char>(s[0] - 'A' + 'a');
  return names;
}

BipartiteMultigraph block_graph(const DegreeRefinement& m, bool with_multiplicity) {
  require_well_formed(m);
  BipartiteMultigraph g;
  const auto names = vertex_names(m);
  for (std::size_t i = 0; i < m.order(); ++i) g.add_vertex(names[i], m.kind(i));
  for (std::size_t i = 0; i < m.order(); ++i) {
    if (m.kind(i) != VertexKind::TwoEnded) continue;
    for (std::size_t j = 0; j < m.order(); ++j) {
      const ExtNat n = m.at(i, j);
      if (m.kind(j) != VertexKind::Fuchsian || n.is_zero()) continue;
      g.add_edge(i, j, with_multiplicity ? n.value() : 1);
    }
  }
  return g;
}

// Rotates a cycle to start at its smallest vertex, heading towards the
// smaller of that vertex's two cycle neighbours.
std::vector<VertexIndex> canonical_cycle(std::vector<VertexIndex> cycle) {
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

std::optional<std::vector<VertexIndex>> find_cycle(const BipartiteMultigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
  std::vector<VertexIndex> stack;
  std::optional<std::vector<VertexIndex>> found;
  std::function<bool(VertexIndex, std::size_t)> dfs = [&](VertexIndex v, std::size_t via_edge) {
    state[v] = 1;
    stack.push_back(v);
    for (const auto& adj : g.neighbors(v)) {
      if (adj.edge == via_edge) continue;
      if (state[adj.vertex] == 1) {
        auto start = std::find(stack.begin(), stack.end(), adj.vertex);
        found = std::vector<VertexIndex>(start, stack.end());
        return true;
      }
      if (state[adj.vertex] == 0 && dfs(adj.vertex, adj.edge)) return true;
    }
    stack.pop_back();
    state[v] = 2;
    return false;
  };
  for (VertexIndex s = 0; s < n && !found; ++s)
    if (state[s] == 0) dfs(s, static_cast<std::size_t>(-1));
  return found;
}

class PathSearch {
public:
  PathSearch(const BipartiteMultigraph& g0, std::size_t limit)
      : g0_(g0), limit_(limit), on_path_(g0.vertex_count(), false) {}

  M2Verdict exhaustive() {
    for (VertexIndex t = 0; t < g0_.vertex_count() && !verdict_.witness; ++t) {
      if (g0_.kind(t) != VertexKind::TwoEnded) continue;
      path_ = {t};
      on_path_[t] = true;
      extend_from_t(t);
      on_path_[t] = false;
    }
    verdict_.holds = !verdict_.witness;
    return verdict_;
  }

  M2Verdict tree_paths() {
    const auto ts = g0_.vertices_of_kind(VertexKind::TwoEnded);
    for (VertexIndex a : ts) {
      const auto parent = bfs_parents(a);
      for (VertexIndex b : ts) {
        if (a == b || parent[b] == kNone) continue;
        std::vector<VertexIndex> path{b};
        while (path.back() != a) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        if (examine(path)) {
          verdict_.holds = false;
          return verdict_;
        }
      }
    }
    verdict_.holds = true;
    return verdict_;
  }

private:
  static constexpr VertexIndex kNone = static_cast<VertexIndex>(-1);

  std::uint64_t n(VertexIndex t, VertexIndex f) const { return g0_.multiplicity(t, f); }

  std::vector<VertexIndex> bfs_parents(VertexIndex root) const {
    std::vector<VertexIndex> parent(g0_.vertex_count(), kNone);
    std::vector<VertexIndex> queue{root};
    parent[root] = root;
    for (std::size_t k = 0; k < queue.size(); ++k)
      for (const auto& adj : g0_.neighbors(queue[k]))
        if (parent[adj.vertex] == kNone) {
          parent[adj.vertex] = queue[k];
          queue.push_back(adj.vertex);
        }
    return parent;
  }

  // Path alternates t_1, f_1, t_2, ...; records a witness and returns true
  // when the path violates the condition.
  bool examine(const std::vector<VertexIndex>& path) {
    if (++verdict_.paths_examined > limit_)
      throw ResourceLimit("M2 path enumeration exceeded " + std::to_string(limit_) + " paths");
    if (path.size() < 3 || n(path[0], path[1]) <= 1) return false;
    const std::size_t k = (path.size() + 1) / 2;
    for (std::size_t i = 1; i <= k; ++i)
      for (std::size_t j = 1; j < k; ++j) {
        if (i == j) continue;
        if (n(path[2 * (i - 1)], path[2 * j - 1]) > 1) {
          M2Witness w;
          for (VertexIndex v : path) w.path.push_back(g0_.id(v));
          w.i = i;
          w.j = j;
          verdict_.witness = std::move(w);
          return true;
        }
      }
    return false;
  }

  void extend_from_t(VertexIndex t) {
    for (const auto& fa : g0_.neighbors(t)) {
      const VertexIndex f = fa.vertex;
      if (on_path_[f]) continue;
      // A path whose first bundle is single can never violate the condition.
      if (path_.size() == 1 && fa.multiplicity <= 1) continue;
      on_path_[f] = true;
      path_.push_back(f);
      for (const auto& ta : g0_.neighbors(f)) {
        if (on_path_[ta.vertex]) continue;
        on_path_[ta.vertex] = true;
        path_.push_back(ta.vertex);
        if (examine(path_)) return;
        extend_from_t(ta.vertex);
        if (verdict_.witness) return;
        path_.pop_back();
        on_path_[ta.vertex] = false;
      }
      path_.pop_back();
      on_path_[f] = false;
    }
  }

  const BipartiteMultigraph& g0_;
  std::size_t limit_;
  std::vector<bool> on_path_;
  std::vector<VertexIndex> path_;
  M2Verdict verdict_;
};

}  // namespace

BipartiteMultigraph graph_of_blocks(const DegreeRefinement& m) { return block_graph(m, false); }

BipartiteMultigraph augmented_graph_of_blocks(const DegreeRefinement& m) { return block_graph(m, true); }

M1Verdict check_m1(const DegreeRefinement& m) {
  const auto gb = graph_of_blocks(m);
  M1Verdict v;
  v.disconnected = !is_connected(gb);
  if (auto cycle = find_cycle(gb))
    for (VertexIndex x : canonical_cycle(*cycle)) v.cycle.push_back(gb.id(x));
  v.holds = !v.disconnected && v.cycle.empty();
  return v;
}

M2Verdict check_m2(const DegreeRefinement& m, const M2Options& options) {
  const auto g0 = augmented_graph_of_blocks(m);
  PathStrategy strategy = options.strategy;
  if (strategy == PathStrategy::Auto)
    strategy = simple_graph_is_forest(g0) ? PathStrategy::TreePaths : PathStrategy::Exhaustive;
  if (strategy == PathStrategy::TreePaths && !simple_graph_is_forest(g0))
    throw InvalidInput("tree-path strategy needs an acyclic graph of blocks");
  PathSearch search(g0, options.path_limit);
  return strategy == PathStrategy::TreePaths ? search.tree_paths() : search.exhaustive();
}

TorsionVerdict classify_refinement(const DegreeRefinement& m) {
  TorsionVerdict v{false, m, check_m1(m), check_m2(m), {}, std::nullopt};
  if (!v.m1.holds) {
    v.failed = "M1";
  } else if (!v.m2.holds) {
    v.failed = "M2";
  } else {
    v.torsion_qi = true;
    v.witness = unwrap_to_tree(augmented_graph_of_blocks(m));
  }
  return v;
}

TorsionVerdict classify_torsion_qi(const BipartiteMultigraph& g) {
  const auto report = validate_jsj_graph(g);
  if (!report.empty()) throw InvalidInput("not a valid JSJ graph: " + report.front());
  return classify_refinement(degree_refinement(g));
}

}  // namespace jsj
