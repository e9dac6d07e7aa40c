#include "jsj/oracles.hpp"

#include <algorithm>
#include <functional>

#include "jsj/errors.hpp"

namespace jsj::oracles {

std::vector<std::vector<std::vector<VertexIndex>>> set_partitions(const std::vector<VertexIndex>& items) {
  std::vector<std::vector<std::vector<VertexIndex>>> out;
  if (items.empty()) {
    out.emplace_back();
    return out;
  }
  std::vector<std::size_t> label(items.size(), 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t k, std::size_t used) {
    if (k == items.size()) {
      std::vector<std::vector<VertexIndex>> blocks(used);
      for (std::size_t i = 0; i < items.size(); ++i) blocks[label[i]].push_back(items[i]);
      out.push_back(std::move(blocks));
      return;
    }
    for (std::size_t b = 0; b <= used; ++b) {
      label[k] = b;
      rec(k + 1, std::max(used, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

namespace {

// Literal iota from the definition, independent of the kernels.
ExtNat literal_iota(const BipartiteMultigraph& g, VertexIndex r, VertexIndex s) {
  std::uint64_t edges = 0;
  for (const auto& e : g.edges())
    if ((e.u == r && e.v == s) || (e.u == s && e.v == r)) edges += e.multiplicity;
  if (edges == 0) return ExtNat(0);
  return g.kind(r) == VertexKind::Fuchsian ? ExtNat::infinity() : ExtNat(edges);
}

bool equitable(const std::vector<std::vector<VertexIndex>>& blocks,
               const std::vector<std::vector<ExtNat>>& iota_table) {
  for (const auto& bi : blocks)
    for (const auto& bj : blocks) {
      std::optional<ExtNat> constant;
      for (VertexIndex r : bi) {
        ExtNat sum;
        for (VertexIndex s : bj) sum += iota_table[r][s];
        if (constant && *constant != sum) return false;
        constant = sum;
      }
    }
  return true;
}

std::vector<std::vector<VertexIndex>> canonical(std::vector<std::vector<VertexIndex>> blocks) {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

DegreePartition coarsest_equitable_bruteforce(const BipartiteMultigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n > 10) throw ResourceLimit("brute-force partition oracle supports at most 10 vertices");
  std::vector<std::vector<ExtNat>> table(n, std::vector<ExtNat>(n));
  for (VertexIndex r = 0; r < n; ++r)
    for (VertexIndex s = 0; s < n; ++s) table[r][s] = r == s ? ExtNat(0) : literal_iota(g, r, s);

  const auto curve_parts = set_partitions(g.vertices_of_kind(VertexKind::TwoEnded));
  const auto surface_parts = set_partitions(g.vertices_of_kind(VertexKind::Fuchsian));
  std::optional<std::vector<std::vector<VertexIndex>>> best;
  bool tie = false;
  for (const auto& cp : curve_parts)
    for (const auto& sp : surface_parts) {
      std::vector<std::vector<VertexIndex>> blocks = cp;
      blocks.insert(blocks.end(), sp.begin(), sp.end());
      if (best && blocks.size() > best->size()) continue;
      if (!equitable(blocks, table)) continue;
      auto c = canonical(std::move(blocks));
      if (!best || c.size() < best->size()) {
        best = std::move(c);
        tie = false;
      } else if (c != *best) {
        tie = true;
      }
    }
  if (!best) throw InternalError("no equitable partition found");
  if (tie) throw InternalError("coarsest equitable partition is not unique");

  // Same block order convention as the production code, for direct comparison.
  auto blocks = *best;
  std::sort(blocks.begin(), blocks.end(), [&](const auto& a, const auto& b) {
    if (g.kind(a.front()) != g.kind(b.front())) return g.kind(a.front()) == VertexKind::TwoEnded;
    return a.front() < b.front();
  });
  DegreePartition p;
  p.block_of.assign(n, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (VertexIndex v : blocks[b]) p.block_of[v] = b;
    p.kinds.push_back(g.kind(blocks[b].front()));
  }
  p.blocks = std::move(blocks);
  return p;
}

std::vector<Matching> matchings_bruteforce(const BipartiteMultigraph& g, Execution ex) {
  const auto surfaces = g.vertices_of_kind(VertexKind::Fuchsian);
  if (surfaces.size() > 20) throw ResourceLimit("brute-force matching oracle supports at most 20 surfaces");
  kernels::CoverInstance inst;
  inst.surface_count = surfaces.size();
  std::vector<std::size_t> slot(g.vertex_count(), 0);
  for (std::size_t k = 0; k < surfaces.size(); ++k) slot[surfaces[k]] = k;
  for (VertexIndex c : g.vertices_of_kind(VertexKind::TwoEnded)) {
    auto& row = inst.curves.emplace_back();
    for (const auto& e : g.edges()) {
      if (e.u != c && e.v != c) continue;
      const VertexIndex s = e.other(c);
      if (g.kind(s) == VertexKind::Fuchsian) row.emplace_back(slot[s], e.multiplicity);
    }
  }
  const auto masks = ex == Execution::Parallel ? kernels::exact_cover_subsets_parallel(inst)
                                               : kernels::exact_cover_subsets_serial(inst);
  std::vector<Matching> out;
  for (std::uint64_t mask : masks) {
    Matching m;
    for (std::size_t k = 0; k < surfaces.size(); ++k)
      if (mask >> k & 1U) m.chosen.push_back(surfaces[k]);
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matching> matchings_bruteforce(const PManifold& p, Execution ex) {
  return matchings_bruteforce(p.graph(), ex);
}

std::string tree_code_bruteforce(const BipartiteMultigraph& t, VertexIndex root) {
  if (!is_tree(t)) throw InvalidInput("tree_code_bruteforce needs a tree");
  if (root >= t.vertex_count()) throw InvalidInput("root out of range");
  std::function<std::string(VertexIndex, VertexIndex)> code = [&](VertexIndex v, VertexIndex parent) {
    std::vector<std::string> children;
    for (const auto& adj : t.neighbors(v))
      if (adj.vertex != parent) children.push_back(code(adj.vertex, v));
    std::sort(children.begin(), children.end());
    std::string out(1, kind_letter(t.kind(v)));
    out += '(';
    for (const auto& c : children) out += c;
    return out + ')';
  };
  return code(root, root);
}

std::string unrooted_tree_code(const BipartiteMultigraph& t) {
  std::string best;
  for (VertexIndex v = 0; v < t.vertex_count(); ++v) {
    auto c = tree_code_bruteforce(t, v);
    if (v == 0 || c < best) best = std::move(c);
  }
  return best;
}

}  // namespace jsj::oracles
