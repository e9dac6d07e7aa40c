#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stop_token>
#include <string>
#include <vector>

#include "jsj/errors.hpp"
#include "jsj/graph.hpp"
#include "jsj/rational.hpp"

namespace jsj {

/// Block Euler characteristic vectors are sorted ascending; matching vectors
/// keep layer order.
using EulerVector = std::vector<Rational>;

/// "(-1,-2,-3)"
std::string format_vector(std::span<const Rational> v);

/// Per Fuchsian block of the degree partition, the sum of member chi values,
/// sorted ascending. Throws InvalidInput if chi is missing or non-negative.
EulerVector block_euler_vector(const BipartiteMultigraph& g, const ChiDecoration& chi);

/// K * v == K2 * w with K, K2 coprime and K2 > 0.
struct ScalingWitness {
  BigInt k;
  BigInt k_prime;

  friend bool operator==(const ScalingWitness&, const ScalingWitness&) = default;
};

std::optional<ScalingWitness> vectors_commensurable(std::span<const Rational> v, std::span<const Rational> w);

enum class VerdictKind { Obstructed, NotObstructed, Inapplicable };

/// OBSTRUCTED / NOT_OBSTRUCTED / INAPPLICABLE
std::string_view verdict_name(VerdictKind k);

/// Outcome of a necessary-condition test. Obstructed means the groups are
/// provably not abstractly commensurable; NotObstructed means nothing.
struct CommVerdict {
  VerdictKind kind = VerdictKind::Inapplicable;
  std::optional<ScalingWitness> witness;
  EulerVector first;
  EulerVector second;
  std::string detail;
};

enum class BlockComparison {
  /// Compare the sorted vectors.
  Sorted,
  /// Align blocks through every equivalence of the two degree refinements and
  /// compare blockwise; inapplicable when the refinements are not equivalent.
  Blockwise,
};

CommVerdict block_obstruction(const BipartiteMultigraph& a, const ChiDecoration& chi_a,
                              const BipartiteMultigraph& b, const ChiDecoration& chi_b,
                              BlockComparison mode = BlockComparison::Sorted);

/// Common total incident multiplicity of every curve, if there is one.
std::optional<std::uint64_t> uniform_curve_degree(const BipartiteMultigraph& g);
std::optional<std::uint64_t> uniform_curve_degree(const PManifold& p);

/// Chosen surfaces, sorted by vertex index. Every curve meets the chosen
/// surfaces along exactly one edge.
struct Matching {
  std::vector<VertexIndex> chosen;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching&, const Matching&) = default;
};

bool is_matching(const BipartiteMultigraph& g, const Matching& m);

struct SearchOptions {
  std::stop_token stop;
  std::uint64_t node_limit = std::uint64_t{1} << 30;
};

/// Every matching, by exact-cover backtracking, sorted ascending. Throws
/// ResourceLimit past node_limit search nodes and Cancelled on a stop request.
std::vector<Matching> enumerate_matchings(const BipartiteMultigraph& g, const SearchOptions& options = {});
std::vector<Matching> enumerate_matchings(const PManifold& p, const SearchOptions& options = {});

/// Greedy frontier construction of a matching on a forest whose curves all
/// have the same degree n >= 2. Lowest-index choices throughout.
Matching forest_matching(const PManifold& p);

struct MaximalMatching {
  Matching matching;  // lexicographically smallest optimum
  Rational chi;
  std::vector<Matching> optimal;  // filled when requested, sorted
};

/// Matching of greatest total chi, by branch and bound. nullopt when the
/// manifold admits no matching.
std::optional<MaximalMatching> maximal_matching(const PManifold& p, bool collect_optimal = false,
                                                const SearchOptions& options = {});

class NoMatching : public Error {
public:
  NoMatching(const std::string& what, std::size_t layer) : Error(what), layer_(layer) {}
  /// 1-based layer that admitted no matching.
  std::size_t layer() const noexcept { return layer_; }

private:
  std::size_t layer_;
};

struct MatchingLayer {
  std::vector<std::string> surfaces;
  Rational chi;
};

struct MatchingVectorResult {
  EulerVector entries;
  std::vector<MatchingLayer> layers;
  /// Present only when the tie check ran and found something to report.
  std::vector<std::string> diagnostics;
};

struct MatchingVectorOptions {
  /// Recompute the vector under every optimal choice at every layer.
  bool check_tie_invariance = false;
  std::size_t tie_branch_limit = 100'000;
  SearchOptions search;
};

/// Peels n maximal matchings off a manifold whose curves all have degree n.
/// Throws InvalidInput for non-uniform degrees and NoMatching when a layer
/// has no matching.
MatchingVectorResult matching_vector(const PManifold& p, const MatchingVectorOptions& options = {});

/// Inapplicable unless both are trees with the same uniform curve degree.
CommVerdict matching_obstruction(const PManifold& a, const PManifold& b);

/// Replaces surface `v` by an orientable genus-`genus` surface with the same
/// boundary: chi = 2 - 2g - b.
PManifold genus_family(const PManifold& p, VertexIndex v, std::uint64_t genus);

}  // namespace jsj
