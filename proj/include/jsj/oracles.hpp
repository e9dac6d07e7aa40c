#pragma once

// Brute-force reference implementations. They follow the definitions
// literally and share no code path with the production algorithms; tests and
// the CLI's --verify flag compare against them.

#include <string>
#include <vector>

#include "jsj/commensurability.hpp"
#include "jsj/graph.hpp"
#include "jsj/kernels.hpp"
#include "jsj/refinement.hpp"

namespace jsj::oracles {

/// All set partitions of `items` (restricted growth strings), each block in
/// item order.
std::vector<std::vector<std::vector<VertexIndex>>> set_partitions(const std::vector<VertexIndex>& items);

/// Coarsest equitable kind-homogeneous partition by exhaustive enumeration.
/// Requires at most 10 vertices; throws InternalError if two distinct
/// partitions tie for the fewest blocks.
DegreePartition coarsest_equitable_bruteforce(const BipartiteMultigraph& g);

/// Every surface subset meeting each curve along exactly one edge. Requires
/// at most 20 surfaces.
std::vector<Matching> matchings_bruteforce(const BipartiteMultigraph& g, Execution ex = Execution::Parallel);
std::vector<Matching> matchings_bruteforce(const PManifold& p, Execution ex = Execution::Parallel);

/// AHU code of the tree rooted at `root`, labelled by vertex kind. Throws
/// InvalidInput unless `t` is a tree.
std::string tree_code_bruteforce(const BipartiteMultigraph& t, VertexIndex root);

/// Smallest rooted code over all roots: equal iff the trees are isomorphic.
std::string unrooted_tree_code(const BipartiteMultigraph& t);

}  // namespace jsj::oracles
