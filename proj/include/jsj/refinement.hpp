#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jsj/ext_nat.hpp"
#include "jsj/graph.hpp"
#include "jsj/kernels.hpp"

namespace jsj {

/// Kind-homogeneous partition of the vertex set. Blocks are listed
/// TwoEnded-first, then by smallest member in input order; members are sorted.
struct DegreePartition {
  std::vector<std::vector<VertexIndex>> blocks;
  std::vector<VertexKind> kinds;
  std::vector<std::size_t> block_of;  // indexed by vertex

  std::size_t size() const { return blocks.size(); }
  friend bool operator==(const DegreePartition&, const DegreePartition&) = default;
};

/// Square matrix over N u {inf} indexed by blocks, each block tagged with a
/// kind. Carries the partition it was computed from when there is one.
class DegreeRefinement {
public:
  DegreeRefinement(std::vector<VertexKind> kinds, std::vector<std::vector<ExtNat>> rows,
                   std::optional<DegreePartition> partition = std::nullopt);

  std::size_t order() const { return kinds_.size(); }
  VertexKind kind(std::size_t block) const { return kinds_.at(block); }
  const std::vector<VertexKind>& kinds() const { return kinds_; }
  ExtNat at(std::size_t i, std::size_t j) const { return rows_.at(i).at(j); }
  const std::vector<std::vector<ExtNat>>& rows() const { return rows_; }
  const std::optional<DegreePartition>& partition() const { return partition_; }

  /// "T1", "T2", ..., "F1", ... numbered within each kind in block order.
  std::vector<std::string> block_names() const;

  /// Matrix equality (kinds and entries); the partition is not compared.
  friend bool operator==(const DegreeRefinement& a, const DegreeRefinement& b) {
    return a.kinds_ == b.kinds_ && a.rows_ == b.rows_;
  }

private:
  std::vector<VertexKind> kinds_;
  std::vector<std::vector<ExtNat>> rows_;
  std::optional<DegreePartition> partition_;
};

/// Empty iff same-kind entries vanish, Fuchsian rows hold only 0 and inf,
/// TwoEnded rows are finite, and the support is symmetric.
ValidationReport validate_refinement(const DegreeRefinement& m);

/// Matrix text form: a "blocks: T T F" header, then one space-separated row per
/// line with inf for infinity. Every line ends in '\n'.
std::string format_matrix(const DegreeRefinement& m);
/// Inverse of format_matrix. Throws ParseError.
DegreeRefinement parse_matrix_text(const std::string& text);

ExtNat iota(const BipartiteMultigraph& g, VertexIndex r, VertexIndex s);
ExtNat iota(const BipartiteMultigraph& g, std::string_view r, std::string_view s);
ExtNat augmented_valence(const BipartiteMultigraph& g, VertexIndex r);
ExtNat augmented_valence(const BipartiteMultigraph& g, std::string_view r);

struct RefinementOptions {
  Execution execution = Execution::Parallel;
  /// Receives the number of Step-2 passes that split at least one block.
  std::size_t* rounds = nullptr;
};

/// Coarsest equitable partition under iota-sums, by iterated refinement from
/// the (kind, augmented valence) partition. Defined for disconnected graphs.
DegreePartition degree_partition(const BipartiteMultigraph& g, const RefinementOptions& options = {});
DegreeRefinement degree_refinement(const BipartiteMultigraph& g, const RefinementOptions& options = {});
/// Matrix of iota-sums for an arbitrary equitable partition. Throws
/// InvalidInput when the partition is not equitable.
DegreeRefinement refinement_for_partition(const BipartiteMultigraph& g, const DegreePartition& p);

/// image[i] is the block of the second matrix matched with block i of the first.
struct BlockPermutation {
  std::vector<std::size_t> image;

  friend bool operator==(const BlockPermutation&, const BlockPermutation&) = default;
};

/// True iff second[p(i)][p(j)] == first[i][j] for all i, j and p preserves kinds.
bool is_witness(const DegreeRefinement& first, const DegreeRefinement& second, const BlockPermutation& p);

/// Exhaustive backtracking search for a kind-preserving block bijection with
/// M2 = P M P^T.
std::optional<BlockPermutation> refinement_equivalent(const DegreeRefinement& first,
                                                      const DegreeRefinement& second);

/// Every witness, in search order. Throws ResourceLimit once `limit` are found.
std::vector<BlockPermutation> enumerate_refinement_equivalences(const DegreeRefinement& first,
                                                                const DegreeRefinement& second,
                                                                std::size_t limit = 100'000);

struct QiVerdict {
  bool quasi_isometric = false;
  std::optional<BlockPermutation> witness;
  DegreeRefinement first;
  DegreeRefinement second;
};

/// Both graphs must pass validate_jsj_graph; throws InvalidInput otherwise.
QiVerdict is_quasi_isometric(const BipartiteMultigraph& g, const BipartiteMultigraph& h);

}  // namespace jsj
