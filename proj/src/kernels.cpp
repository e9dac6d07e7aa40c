#include "jsj/kernels.hpp"

#include <algorithm>

#include "jsj/errors.hpp"

namespace jsj::kernels {

namespace {

// Below this many vertices the parallel region costs more than it saves.
constexpr std::size_t kParallelThreshold = 4096;

Signature signature_of(const BipartiteMultigraph& g, std::span<const std::size_t> block_of,
                       VertexIndex r) {
  Signature sig;
  const VertexKind kind = g.kind(r);
  for (const auto& adj : g.neighbors(r)) {
    const ExtNat term = iota_term(kind, adj.multiplicity);
    const std::size_t b = block_of[adj.vertex];
    auto it = std::lower_bound(sig.begin(), sig.end(), b,
                               [](const auto& entry, std::size_t key) { return entry.first < key; });
    if (it != sig.end() && it->first == b)
      it->second += term;
    else
      sig.insert(it, {b, term});
  }
  return sig;
}

bool covers_exactly_once(const CoverInstance& inst, std::uint64_t mask) {
  for (const auto& curve : inst.curves) {
    std::uint64_t hits = 0;
    for (const auto& [s, mult] : curve)
      if (mask >> s & 1U) hits += mult;
    if (hits != 1) return false;
  }
  return true;
}

void check_cover_size(const CoverInstance& inst) {
  if (inst.surface_count > 63) throw ResourceLimit("exact cover scan supports at most 63 surfaces");
}

}  // namespace

std::vector<Signature> block_signatures_serial(const BipartiteMultigraph& g,
                                               std::span<const std::size_t> block_of) {
  std::vector<Signature> out(g.vertex_count());
  for (VertexIndex r = 0; r < g.vertex_count(); ++r) out[r] = signature_of(g, block_of, r);
  return out;
}

std::vector<Signature> block_signatures_parallel(const BipartiteMultigraph& g,
                                                 std::span<const std::size_t> block_of) {
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  std::vector<Signature> out(g.vertex_count());
#pragma omp parallel for schedule(dynamic, 256) if (g.vertex_count() >= kParallelThreshold)
  for (std::int64_t r = 0; r < n; ++r)
    out[static_cast<std::size_t>(r)] = signature_of(g, block_of, static_cast<VertexIndex>(r));
  return out;
}

std::vector<std::uint64_t> exact_cover_subsets_serial(const CoverInstance& inst) {
  check_cover_size(inst);
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << inst.surface_count;
  for (std::uint64_t mask = 0; mask < limit; ++mask)
    if (covers_exactly_once(inst, mask)) out.push_back(mask);
  return out;
}

std::vector<std::uint64_t> exact_cover_subsets_parallel(const CoverInstance& inst) {
  check_cover_size(inst);
  const auto limit = static_cast<std::int64_t>(std::uint64_t{1} << inst.surface_count);
  std::vector<std::uint64_t> out;
#pragma omp parallel if (limit >= (1 << 14))
  {
    std::vector<std::uint64_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t mask = 0; mask < limit; ++mask)
      if (covers_exactly_once(inst, static_cast<std::uint64_t>(mask)))
        local.push_back(static_cast<std::uint64_t>(mask));
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace jsj::kernels
