#include <algorithm>

#include "jsj/commensurability.hpp"
#include "jsj/refinement.hpp"

namespace jsj {

std::string format_vector(std::span<const Rational> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += v[i].to_string();
  }
  return out + ")";
}

std::string_view verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Obstructed: return "OBSTRUCTED";
    case VerdictKind::NotObstructed: return "NOT_OBSTRUCTED";
    case VerdictKind::Inapplicable: return "INAPPLICABLE";
  }
  return "INAPPLICABLE";
}

namespace {

void require_chi(const BipartiteMultigraph& g, const ChiDecoration& chi) {
  const auto report = validate_chi(g, chi);
  if (!report.empty()) throw InvalidInput(report.front());
}

// Unsorted per-block sums, indexed by block of the degree refinement (zero
// for TwoEnded blocks).
std::vector<Rational> block_sums(const ChiDecoration& chi, const DegreePartition& p) {
  std::vector<Rational> sums(p.size());
  for (std::size_t b = 0; b < p.size(); ++b)
    if (p.kinds[b] == VertexKind::Fuchsian)
      for (VertexIndex v : p.blocks[b]) sums[b] += *chi.get(v);
  return sums;
}

}  // namespace

EulerVector block_euler_vector(const BipartiteMultigraph& g, const ChiDecoration& chi) {
  require_chi(g, chi);
  const auto p = degree_partition(g);
  const auto sums = block_sums(chi, p);
  EulerVector out;
  for (std::size_t b = 0; b < p.size(); ++b)
    if (p.kinds[b] == VertexKind::Fuchsian) out.push_back(sums[b]);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ScalingWitness> vectors_commensurable(std::span<const Rational> v, std::span<const Rational> w) {
  if (v.size() != w.size()) return std::nullopt;
  std::optional<Rational> ratio;  // w = ratio * v
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].sign() == 0 || w[i].sign() == 0) {
      if (v[i].sign() != w[i].sign()) return std::nullopt;
      continue;
    }
    if (!ratio) ratio = w[i] / v[i];
    if (w[i] != *ratio * v[i]) return std::nullopt;
  }
  if (!ratio) return ScalingWitness{1, 1};
  return ScalingWitness{ratio->numerator(), ratio->denominator()};
}

CommVerdict block_obstruction(const BipartiteMultigraph& a, const ChiDecoration& chi_a,
                              const BipartiteMultigraph& b, const ChiDecoration& chi_b, BlockComparison mode) {
  CommVerdict v;
  v.first = block_euler_vector(a, chi_a);
  v.second = block_euler_vector(b, chi_b);
  if (mode == BlockComparison::Sorted) {
    v.witness = vectors_commensurable(v.first, v.second);
    v.kind = v.witness ? VerdictKind::NotObstructed : VerdictKind::Obstructed;
    v.detail = v.witness ? "block vectors commensurable" : "block vectors not commensurable";
    return v;
  }
  const auto ma = degree_refinement(a), mb = degree_refinement(b);
  const auto equivalences = enumerate_refinement_equivalences(ma, mb);
  if (equivalences.empty()) {
    v.kind = VerdictKind::Inapplicable;
    v.detail = "degree refinements are not equivalent";
    return v;
  }
  const auto sa = block_sums(chi_a, *ma.partition()), sb = block_sums(chi_b, *mb.partition());
  for (const auto& perm : equivalences) {
    std::vector<Rational> x, y;
    for (std::size_t i = 0; i < ma.order(); ++i)
      if (ma.kind(i) == VertexKind::Fuchsian) {
        x.push_back(sa[i]);
        y.push_back(sb[perm.image[i]]);
      }
    if (auto w = vectors_commensurable(x, y)) {
      v.kind = VerdictKind::NotObstructed;
      v.witness = w;
      v.detail = "blockwise commensurable under an equivalence of refinements";
      return v;
    }
  }
  v.kind = VerdictKind::Obstructed;
  v.detail = "no equivalence of refinements aligns commensurable block sums";
  return v;
}

}  // namespace jsj
