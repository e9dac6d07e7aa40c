#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "jsj/commensurability.hpp"

namespace jsj {

namespace {

// Exact-cover view of a P-manifold: curves are columns, surfaces are rows.
class CoverSearch {
public:
  CoverSearch(const BipartiteMultigraph& g, const SearchOptions& options) : g_(g), options_(options) {
    covered_.assign(g.vertex_count(), false);
    eligible_.assign(g.vertex_count(), false);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
      if (g.kind(v) == VertexKind::TwoEnded) {
        curves_.push_back(v);
        continue;
      }
      if (g.valence(v) == 0) {
        free_.push_back(v);
        continue;
      }
      // A surface glued twice along one curve over-covers it.
      bool single = true;
      for (const auto& adj : g.neighbors(v)) single = single && adj.multiplicity == 1;
      eligible_[v] = single;
    }
  }

  const std::vector<VertexIndex>& free_surfaces() const { return free_; }

  /// Calls visit(chosen) for each exact cover of the curves by eligible
  /// surfaces. `bound`, when set, decides whether a partial selection may
  /// still be extended.
  void run(const std::function<void(const std::vector<VertexIndex>&)>& visit,
           const std::function<bool(const std::vector<VertexIndex>&)>& bound = {}) {
    visit_ = &visit;
    bound_ = bound ? &bound : nullptr;
    chosen_.clear();
    search();
  }

private:
  bool available(VertexIndex s) const {
    if (!eligible_[s]) return false;
    for (const auto& adj : g_.neighbors(s))
      if (covered_[adj.vertex]) return false;
    return true;
  }

  void tick() {
    if (++nodes_ > options_.node_limit)
      throw ResourceLimit("matching search exceeded " + std::to_string(options_.node_limit) + " nodes");
    if ((nodes_ & 1023U) == 0 && options_.stop.stop_requested()) throw Cancelled("matching search cancelled");
  }

  void search() {
    tick();
    if (bound_ && !(*bound_)(chosen_)) return;
    // Most constrained uncovered curve.
    VertexIndex best = 0;
    std::size_t best_count = static_cast<std::size_t>(-1);
    bool any = false;
    for (VertexIndex c : curves_) {
      if (covered_[c]) continue;
      any = true;
      std::size_t count = 0;
      for (const auto& adj : g_.neighbors(c))
        if (available(adj.vertex)) ++count;
      if (count < best_count) {
        best = c;
        best_count = count;
        if (count == 0) break;
      }
    }
    if (!any) {
      (*visit_)(chosen_);
      return;
    }
    if (best_count == 0) return;
    std::vector<VertexIndex> options;
    for (const auto& adj : g_.neighbors(best))
      if (available(adj.vertex)) options.push_back(adj.vertex);
    std::sort(options.begin(), options.end());
    for (VertexIndex s : options) {
      for (const auto& adj : g_.neighbors(s)) covered_[adj.vertex] = true;
      chosen_.push_back(s);
      search();
      chosen_.pop_back();
      for (const auto& adj : g_.neighbors(s)) covered_[adj.vertex] = false;
    }
  }

  const BipartiteMultigraph& g_;
  const SearchOptions& options_;
  std::vector<VertexIndex> curves_;
  std::vector<VertexIndex> free_;
  std::vector<bool> eligible_;
  std::vector<bool> covered_;
  std::vector<VertexIndex> chosen_;
  std::uint64_t nodes_ = 0;
  const std::function<void(const std::vector<VertexIndex>&)>* visit_ = nullptr;
  const std::function<bool(const std::vector<VertexIndex>&)>* bound_ = nullptr;
};

Matching sorted_matching(std::vector<VertexIndex> chosen) {
  std::sort(chosen.begin(), chosen.end());
  return Matching{std::move(chosen)};
}

void require_negative_chi(const PManifold& p) {
  for (VertexIndex s : p.graph().vertices_of_kind(VertexKind::Fuchsian))
    if (p.chi(s) >= 0) throw InvalidInput("chi must be negative: " + p.graph().id(s));
}

PManifold remove_surfaces(const PManifold& p, const Matching& m) {
  std::vector<bool> keep(p.graph().vertex_count(), true);
  for (VertexIndex s : m.chosen) keep[s] = false;
  std::vector<VertexIndex> projection;
  auto g = induced_subgraph(p.graph(), keep, &projection);
  std::vector<std::int64_t> chi;
  for (VertexIndex v : projection) chi.push_back(p.chi(v));
  return PManifold(std::move(g), std::move(chi));
}

}  // namespace

std::optional<std::uint64_t> uniform_curve_degree(const BipartiteMultigraph& g) {
  std::optional<std::uint64_t> n;
  for (VertexIndex c : g.vertices_of_kind(VertexKind::TwoEnded)) {
    const std::uint64_t d = g.valence(c);
    if (n && *n != d) return std::nullopt;
    n = d;
  }
  return n;
}

std::optional<std::uint64_t> uniform_curve_degree(const PManifold& p) { return uniform_curve_degree(p.graph()); }

bool is_matching(const BipartiteMultigraph& g, const Matching& m) {
  std::vector<bool> chosen(g.vertex_count(), false);
  for (VertexIndex s : m.chosen) {
    if (s >= g.vertex_count() || g.kind(s) != VertexKind::Fuchsian || chosen[s]) return false;
    chosen[s] = true;
  }
  for (VertexIndex c : g.vertices_of_kind(VertexKind::TwoEnded)) {
    std::uint64_t hits = 0;
    for (const auto& adj : g.neighbors(c))
      if (chosen[adj.vertex]) hits += adj.multiplicity;
    if (hits != 1) return false;
  }
  return true;
}

std::vector<Matching> enumerate_matchings(const BipartiteMultigraph& g, const SearchOptions& options) {
  CoverSearch search(g, options);
  const auto& free = search.free_surfaces();
  if (free.size() > 20) throw ResourceLimit("too many boundary-free surfaces to enumerate");
  std::vector<Matching> out;
  search.run([&](const std::vector<VertexIndex>& chosen) {
    // Surfaces without boundary may be added freely.
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
      auto m = chosen;
      for (std::size_t k = 0; k < free.size(); ++k)
        if (mask >> k & 1U) m.push_back(free[k]);
      out.push_back(sorted_matching(std::move(m)));
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Matching> enumerate_matchings(const PManifold& p, const SearchOptions& options) {
  return enumerate_matchings(p.graph(), options);
}

Matching forest_matching(const PManifold& p) {
  const auto& g = p.graph();
  if (!is_forest(g)) throw InvalidInput("forest_matching needs a forest with single edges");
  const auto n = uniform_curve_degree(g);
  if (!n || *n < 2) throw InvalidInput("forest_matching needs a uniform curve degree of at least 2");

  std::vector<bool> covered(g.vertex_count(), false), blocked(g.vertex_count(), false);
  std::vector<VertexIndex> chosen;
  std::deque<VertexIndex> pending;

  auto choose = [&](VertexIndex s) {
    chosen.push_back(s);
    blocked[s] = true;
    for (const auto& c : g.neighbors(s)) covered[c.vertex] = true;
    for (const auto& c : g.neighbors(s))
      for (const auto& other : g.neighbors(c.vertex)) {
        if (other.vertex == s || blocked[other.vertex]) continue;
        blocked[other.vertex] = true;
        for (const auto& next : g.neighbors(other.vertex))
          if (!covered[next.vertex]) pending.push_back(next.vertex);
      }
  };
  auto cover = [&](VertexIndex c) {
    std::optional<VertexIndex> pick;
    for (const auto& adj : g.neighbors(c)) {
      const VertexIndex s = adj.vertex;
      if (blocked[s]) continue;
      bool clear = true;
      for (const auto& x : g.neighbors(s)) clear = clear && !covered[x.vertex];
      if (clear && (!pick || s < *pick)) pick = s;
    }
    if (!pick) throw InternalError("frontier curve has no available surface: " + g.id(c));
    choose(*pick);
  };

  for (VertexIndex c : g.vertices_of_kind(VertexKind::TwoEnded)) {
    if (covered[c]) continue;
    cover(c);
    while (!pending.empty()) {
      const VertexIndex next = pending.front();
      pending.pop_front();
      if (!covered[next]) cover(next);
    }
  }
  auto m = sorted_matching(std::move(chosen));
  if (!is_matching(g, m)) throw InternalError("forest_matching produced an invalid matching");
  return m;
}

std::optional<MaximalMatching> maximal_matching(const PManifold& p, bool collect_optimal,
                                                const SearchOptions& options) {
  require_negative_chi(p);
  CoverSearch search(p.graph(), options);
  std::optional<Rational> best;
  std::vector<Matching> optimal;
  auto partial_chi = [&](const std::vector<VertexIndex>& chosen) {
    Rational sum;
    for (VertexIndex s : chosen) sum += Rational(p.chi(s));
    return sum;
  };
  // Every chi is negative, so a partial selection already below the best
  // total cannot recover.
  search.run(
      [&](const std::vector<VertexIndex>& chosen) {
        auto m = sorted_matching(chosen);
        const Rational x = partial_chi(chosen);
        if (!best || x > *best) {
          best = x;
          optimal.clear();
          optimal.push_back(std::move(m));
        } else if (x == *best) {
          optimal.push_back(std::move(m));
        }
      },
      [&](const std::vector<VertexIndex>& chosen) { return !best || partial_chi(chosen) >= *best; });
  if (!best) return std::nullopt;
  std::sort(optimal.begin(), optimal.end());
  MaximalMatching out{optimal.front(), *best, {}};
  if (collect_optimal) out.optimal = std::move(optimal);
  return out;
}

namespace {

void collect_tie_vectors(const PManifold& p, std::size_t layers_left, EulerVector prefix,
                         std::set<std::string>& vectors, std::size_t& branches, const MatchingVectorOptions& options,
                         bool& truncated) {
  if (layers_left == 0) {
    vectors.insert(format_vector(prefix));
    return;
  }
  if (++branches > options.tie_branch_limit) {
    truncated = true;
    return;
  }
  auto best = maximal_matching(p, true, options.search);
  if (!best) {
    vectors.insert(format_vector(prefix) + " (no matching)");
    return;
  }
  for (const auto& m : best->optimal) {
    auto next = prefix;
    next.push_back(best->chi);
    collect_tie_vectors(remove_surfaces(p, m), layers_left - 1, std::move(next), vectors, branches, options,
                        truncated);
    if (truncated) return;
  }
}

}  // namespace

MatchingVectorResult matching_vector(const PManifold& p, const MatchingVectorOptions& options) {
  require_negative_chi(p);
  const auto n = uniform_curve_degree(p);
  if (!n) throw InvalidInput("curves do not all have the same degree");
  MatchingVectorResult out;
  PManifold residual = p;
  for (std::size_t layer = 1; layer <= *n; ++layer) {
    auto best = maximal_matching(residual, false, options.search);
    if (!best) throw NoMatching("layer " + std::to_string(layer) + " admits no matching", layer);
    MatchingLayer record{{}, best->chi};
    for (VertexIndex s : best->matching.chosen) record.surfaces.push_back(residual.graph().id(s));
    auto next = remove_surfaces(residual, best->matching);
    for (VertexIndex c : next.graph().vertices_of_kind(VertexKind::TwoEnded))
      if (next.graph().valence(c) != *n - layer) throw InternalError("layer did not lower every curve degree by one");
    out.entries.push_back(best->chi);
    out.layers.push_back(std::move(record));
    residual = std::move(next);
  }
  if (options.check_tie_invariance) {
    std::set<std::string> vectors;
    std::size_t branches = 0;
    bool truncated = false;
    collect_tie_vectors(p, *n, {}, vectors, branches, options, truncated);
    if (truncated)
      out.diagnostics.push_back("tie check stopped after " + std::to_string(options.tie_branch_limit) + " branches");
    if (vectors.size() > 1) {
      std::string all;
      for (const auto& v : vectors) all += " " + v;
      out.diagnostics.push_back("matching vector depends on the choice of maximal matchings:" + all);
    }
  }
  return out;
}

CommVerdict matching_obstruction(const PManifold& a, const PManifold& b) {
  CommVerdict v;
  if (!is_tree(a.graph()) || !is_tree(b.graph())) {
    v.detail = "both underlying graphs must be trees";
    return v;
  }
  const auto na = uniform_curve_degree(a), nb = uniform_curve_degree(b);
  if (!na || !nb) {
    v.detail = "curve degrees are not uniform";
    return v;
  }
  if (*na != *nb) {
    v.detail = "uniform curve degrees differ (" + std::to_string(*na) + " vs " + std::to_string(*nb) + ")";
    return v;
  }
  v.first = matching_vector(a).entries;
  v.second = matching_vector(b).entries;
  v.witness = vectors_commensurable(v.first, v.second);
  v.kind = v.witness ? VerdictKind::NotObstructed : VerdictKind::Obstructed;
  v.detail = v.witness ? "matching vectors commensurable" : "matching vectors not commensurable";
  return v;
}

PManifold genus_family(const PManifold& p, VertexIndex v, std::uint64_t genus) {
  const auto& g = p.graph();
  if (v >= g.vertex_count() || g.kind(v) != VertexKind::Fuchsian)
    throw InvalidInput("genus_family needs a surface vertex");
  if (genus < 1) throw InvalidInput("genus must be at least 1");
  const auto b = static_cast<std::int64_t>(g.valence(v));
  const std::int64_t chi = 2 - 2 * static_cast<std::int64_t>(genus) - b;
  if (chi >= 0) throw InvalidInput("replacement surface would have non-negative chi");
  auto values = p.chi_values();
  values[v] = chi;
  return PManifold(g, std::move(values));
}

}  // namespace jsj
