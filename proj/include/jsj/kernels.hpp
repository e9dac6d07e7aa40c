#pragma once

// Data-parallel inner loops. Each kernel has a plain serial version, kept as
// the reference the OpenMP version is tested and benchmarked against.

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "jsj/ext_nat.hpp"
#include "jsj/graph.hpp"

namespace jsj {

enum class Execution { Serial, Parallel };

namespace kernels {

/// Sparse row of iota-sums from one vertex into each block, sorted by block.
using Signature = std::vector<std::pair<std::size_t, ExtNat>>;

/// iota(r, s): infinity when r is Fuchsian and adjacent to s, the number of
/// r-s edges when r is two-ended, 0 when not adjacent.
inline ExtNat iota_term(VertexKind r_kind, std::uint64_t multiplicity) {
  if (multiplicity == 0) return ExtNat(0);
  return r_kind == VertexKind::Fuchsian ? ExtNat::infinity() : ExtNat(multiplicity);
}

/// For every vertex r, the sums over blocks B of iota(r, s) for s in B, where
/// block_of[s] names the block of s.
std::vector<Signature> block_signatures_serial(const BipartiteMultigraph& g,
                                               std::span<const std::size_t> block_of);
std::vector<Signature> block_signatures_parallel(const BipartiteMultigraph& g,
                                                 std::span<const std::size_t> block_of);

/// An exact-cover instance in dense form: for each curve, the surfaces that
/// touch it and how many boundary circles they glue along it.
struct CoverInstance {
  std::size_t surface_count = 0;
  std::vector<std::vector<std::pair<std::size_t, std::uint64_t>>> curves;
};

/// All surface subsets (as bitmasks, ascending) meeting every curve exactly
/// once. surface_count must be at most 63.
std::vector<std::uint64_t> exact_cover_subsets_serial(const CoverInstance& inst);
std::vector<std::uint64_t> exact_cover_subsets_parallel(const CoverInstance& inst);

}  // namespace kernels
}  // namespace jsj
