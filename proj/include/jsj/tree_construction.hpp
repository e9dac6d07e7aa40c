#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jsj/graph.hpp"
#include "jsj/refinement.hpp"

namespace jsj {

/// A bundle of r parallel edges between a two-ended vertex t and a Fuchsian
/// vertex f whose removal separates f's side from t's side.
struct SplitSite {
  VertexIndex t;
  VertexIndex f;
  std::uint64_t r;
  std::vector<VertexIndex> f_side;  // sorted; contains f
  std::vector<VertexIndex> t_side;  // sorted; contains t

  friend bool operator==(const SplitSite&, const SplitSite&) = default;
};

/// Every separating (t, f) bundle of a connected graph, in edge order.
std::vector<SplitSite> find_split_sites(const BipartiteMultigraph& g);

struct SplitResult {
  BipartiteMultigraph graph;
  std::vector<VertexIndex> projection;  // new vertex -> original vertex
};

/// Replaces the bundle by r single edges from t to r copies of f's side.
/// Copies get the suffix "#k". The t side comes first in the output, then
/// copy 1, ..., copy r. Throws InvalidInput if the site does not match `g`.
SplitResult split_vertex(const BipartiteMultigraph& g, const SplitSite& site);

struct SplitRecord {
  std::string t;
  std::string f;
  std::uint64_t r;
  std::size_t vertices_after;
};

enum class SplitOrder {
  /// Split a multi-edge bundle whose f side holds no other multi-edge bundle.
  Extremal,
  /// Split a multi-edge bundle that no other multi-edge bundle sees on its
  /// f side (outermost first, so inner bundles get copied before splitting).
  TopDown,
};

struct UnwrapOptions {
  SplitOrder order = SplitOrder::Extremal;
  /// Output size guard for TopDown, which can multiply vertices quickly.
  std::size_t vertex_limit = 1'000'000;
};

struct UnwrapResult {
  BipartiteMultigraph tree;
  std::vector<SplitRecord> trace;
  std::vector<VertexIndex> projection;  // tree vertex -> input vertex
};

/// Unwraps an augmented graph of blocks into a finite tree with an
/// equivalent degree refinement. Requires singleton degree-partition blocks
/// and both tree conditions on the refinement; throws InvalidInput naming the
/// failed precondition, InternalError if the split budget is exhausted.
UnwrapResult unwrap_to_tree(const BipartiteMultigraph& g0, const UnwrapOptions& options = {});

/// One line per split: "split t f r=<r> vertices=<n>".
std::string format_trace(const std::vector<SplitRecord>& trace);

enum class TruncationLabels { Kind, Block };

/// Canonical form of the depth-limited universal tree of a refinement matrix.
/// A node of block i below a parent of block p has min(m_ij, cap) children of
/// each block j, one fewer when j == p. Labels are block kinds, so the code is
/// invariant under block permutation.
struct RootedTruncation {
  std::size_t root = 0;
  std::size_t depth = 0;
  std::uint64_t cap = 1;
  std::uint64_t code = 0;   // multiset hash of sorted child codes
  std::uint64_t nodes = 0;
};

RootedTruncation truncated_block_tree(const DegreeRefinement& m, std::size_t root, std::size_t depth,
                                      std::uint64_t cap);

/// Explicit nested text of the same truncation, children sorted. Meant for
/// small depths; labels are kinds ("T", "F") or block names ("T1", "F2").
std::string render_truncation(const DegreeRefinement& m, std::size_t root, std::size_t depth,
                              std::uint64_t cap, TruncationLabels labels = TruncationLabels::Kind);

}  // namespace jsj
