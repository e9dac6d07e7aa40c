#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jsj/graph.hpp"
#include "jsj/refinement.hpp"
#include "jsj/tree_construction.hpp"

namespace jsj {

/// Simple graph on the blocks of `m`: t_i -- f_j iff n_ij > 0. Vertices are
/// named t1.. and f1.. in block order. Throws InvalidInput if `m` is malformed.
BipartiteMultigraph graph_of_blocks(const DegreeRefinement& m);

/// Multigraph on the blocks of `m` with n_ij parallel edges between t_i and f_j.
BipartiteMultigraph augmented_graph_of_blocks(const DegreeRefinement& m);

struct M1Verdict {
  bool holds = false;
  /// Embedded cycle in the graph of blocks, starting at its smallest vertex.
  std::vector<std::string> cycle;
  bool disconnected = false;
};

/// The graph of blocks is a tree.
M1Verdict check_m1(const DegreeRefinement& m);

/// Alternating path t_1, f_1, t_2, ..., f_{k-1}, t_k in the augmented graph of
/// blocks with n(t_1, f_1) > 1 and n(t_i, f_j) > 1 for the 1-based positions
/// (i, j), i != j.
struct M2Witness {
  std::vector<std::string> path;
  std::size_t i = 0;
  std::size_t j = 0;
};

struct M2Verdict {
  bool holds = false;
  std::optional<M2Witness> witness;
  std::size_t paths_examined = 0;
};

enum class PathStrategy {
  Auto,        // tree paths when M1 holds, enumeration otherwise
  Exhaustive,  // depth-first enumeration of every embedded alternating path
  TreePaths,   // unique path between each ordered pair of TwoEnded blocks; needs M1
};

struct M2Options {
  PathStrategy strategy = PathStrategy::Auto;
  std::size_t path_limit = 1'000'000;
};

/// No 2-cycles at even distance bounded by two-ended blocks. Throws
/// ResourceLimit past options.path_limit enumerated paths.
M2Verdict check_m2(const DegreeRefinement& m, const M2Options& options = {});

struct TorsionVerdict {
  bool torsion_qi = false;
  DegreeRefinement refinement;
  M1Verdict m1;
  M2Verdict m2;
  /// "M1" or "M2" when torsion_qi is false; M1 is reported first.
  std::string failed;
  /// Witness tree with an equivalent degree refinement when torsion_qi holds.
  std::optional<UnwrapResult> witness;
};

/// Decides quasi-isometry to a torsion-generated group from the degree
/// refinement of `g`, which must be a valid JSJ graph.
TorsionVerdict classify_torsion_qi(const BipartiteMultigraph& g);
/// Same decision starting from a refinement matrix.
TorsionVerdict classify_refinement(const DegreeRefinement& m);

}  // namespace jsj
