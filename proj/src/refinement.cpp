#include "jsj/refinement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "jsj/errors.hpp"

namespace jsj {

DegreeRefinement::DegreeRefinement(std::vector<VertexKind> kinds, std::vector<std::vector<ExtNat>> rows,
                                   std::optional<DegreePartition> partition)
    : kinds_(std::move(kinds)), rows_(std::move(rows)), partition_(std::move(partition)) {
  if (rows_.size() != kinds_.size()) throw InvalidInput("matrix row count does not match block count");
  for (const auto& row : rows_)
    if (row.size() != kinds_.size()) throw InvalidInput("matrix is not square");
}

std::vector<std::string> DegreeRefinement::block_names() const {
  std::vector<std::string> names;
  std::size_t t = 0, f = 0;
  for (VertexKind k : kinds_) {
    if (k == VertexKind::TwoEnded)
      names.push_back("T" + std::to_string(++t));
    else
      names.push_back("F" + std::to_string(++f));
  }
  return names;
}

ValidationReport validate_refinement(const DegreeRefinement& m) {
  ValidationReport report;
  const auto names = m.block_names();
  for (std::size_t i = 0; i < m.order(); ++i) {
    for (std::size_t j = 0; j < m.order(); ++j) {
      const ExtNat x = m.at(i, j);
      const std::string where = "(" + names[i] + "," + names[j] + ")";
      if (m.kind(i) == m.kind(j) && !x.is_zero())
        report.push_back("nonzero entry between blocks of the same kind " + where);
      if (m.kind(i) == VertexKind::Fuchsian && x.is_finite() && !x.is_zero())
        report.push_back("Fuchsian row entry must be 0 or inf " + where);
      if (m.kind(i) == VertexKind::TwoEnded && x.is_infinite())
        report.push_back("TwoEnded row entry must be finite " + where);
      if (x.is_zero() != m.at(j, i).is_zero() && i < j)
        report.push_back("support is not symmetric " + where);
    }
  }
  return report;
}

std::string format_matrix(const DegreeRefinement& m) {
  std::string out = "blocks:";
  for (VertexKind k : m.kinds()) {
    out += ' ';
    out += kind_letter(k);
  }
  out += '\n';
  for (const auto& row : m.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ' ';
      out += row[j].to_string();
    }
    out += '\n';
  }
  return out;
}

DegreeRefinement parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<VertexKind> kinds;
  std::vector<std::vector<ExtNat>> rows;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string word;
    if (!header) {
      words >> word;
      if (word != "blocks:") throw ParseError("expected 'blocks:' header", line_no, 1);
      while (words >> word) {
        if (word == "T")
          kinds.push_back(VertexKind::TwoEnded);
        else if (word == "F")
          kinds.push_back(VertexKind::Fuchsian);
        else
          throw ParseError("block kind must be T or F: " + word, line_no, 1);
      }
      header = true;
      continue;
    }
    std::vector<ExtNat> row;
    while (words >> word) {
      auto x = ExtNat::parse(word);
      if (!x) throw ParseError("bad matrix entry: " + word, line_no, 1);
      row.push_back(*x);
    }
    if (row.size() != kinds.size()) throw ParseError("row length does not match header", line_no, 1);
    rows.push_back(std::move(row));
  }
  if (!header) throw ParseError("missing 'blocks:' header", line_no + 1, 1);
  if (rows.size() != kinds.size()) throw ParseError("row count does not match header", line_no + 1, 1);
  return DegreeRefinement(std::move(kinds), std::move(rows));
}

ExtNat iota(const BipartiteMultigraph& g, VertexIndex r, VertexIndex s) {
  if (r >= g.vertex_count() || s >= g.vertex_count()) throw InvalidInput("vertex index out of range");
  return kernels::iota_term(g.kind(r), g.multiplicity(r, s));
}

ExtNat iota(const BipartiteMultigraph& g, std::string_view r, std::string_view s) {
  return iota(g, g.index_of(r), g.index_of(s));
}

ExtNat augmented_valence(const BipartiteMultigraph& g, VertexIndex r) {
  ExtNat sum;
  for (const auto& adj : g.neighbors(r)) sum += kernels::iota_term(g.kind(r), adj.multiplicity);
  return sum;
}

ExtNat augmented_valence(const BipartiteMultigraph& g, std::string_view r) {
  return augmented_valence(g, g.index_of(r));
}

namespace {

// Renumbers classes so that blocks come TwoEnded first, then by smallest member.
DegreePartition make_partition(const BipartiteMultigraph& g, const std::vector<std::size_t>& color,
                               std::size_t class_count) {
  std::vector<std::vector<VertexIndex>> members(class_count);
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) members[color[v]].push_back(v);
  std::vector<std::size_t> order(class_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const VertexKind ka = g.kind(members[a].front()), kb = g.kind(members[b].front());
    if (ka != kb) return ka == VertexKind::TwoEnded;
    return members[a].front() < members[b].front();
  });
  DegreePartition p;
  p.block_of.assign(g.vertex_count(), 0);
  for (std::size_t b = 0; b < class_count; ++b) {
    auto& block = members[order[b]];
    for (VertexIndex v : block) p.block_of[v] = b;
    p.kinds.push_back(g.kind(block.front()));
    p.blocks.push_back(std::move(block));
  }
  return p;
}

std::vector<kernels::Signature> signatures(const BipartiteMultigraph& g, const std::vector<std::size_t>& color,
                                           Execution ex) {
  return ex == Execution::Parallel ? kernels::block_signatures_parallel(g, color)
                                   : kernels::block_signatures_serial(g, color);
}

}  // namespace

DegreePartition degree_partition(const BipartiteMultigraph& g, const RefinementOptions& options) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> color(n, 0);
  std::size_t classes = 0;
  {
    std::map<std::pair<VertexKind, ExtNat>, std::size_t> ids;
    for (VertexIndex v = 0; v < n; ++v) ids.try_emplace({g.kind(v), augmented_valence(g, v)}, 0);
    for (auto& [key, id] : ids) id = classes++;
    for (VertexIndex v = 0; v < n; ++v) color[v] = ids.at({g.kind(v), augmented_valence(g, v)});
  }
  std::size_t rounds = 0;
  // Each pass only splits classes, so at most n passes change anything.
  for (std::size_t pass = 0; pass <= n; ++pass) {
    const auto sigs = signatures(g, color, options.execution);
    std::map<std::pair<std::size_t, const kernels::Signature*>, std::size_t,
             bool (*)(const std::pair<std::size_t, const kernels::Signature*>&,
                      const std::pair<std::size_t, const kernels::Signature*>&)>
        ids([](const auto& a, const auto& b) {
          if (a.first != b.first) return a.first < b.first;
          return *a.second < *b.second;
        });
    for (VertexIndex v = 0; v < n; ++v) ids.try_emplace({color[v], &sigs[v]}, 0);
    std::size_t next = 0;
    for (auto& [key, id] : ids) id = next++;
    if (next == classes) break;
    if (next < classes) throw InternalError("refinement pass merged blocks");
    for (VertexIndex v = 0; v < n; ++v) color[v] = ids.at({color[v], &sigs[v]});
    classes = next;
    ++rounds;
  }
  if (options.rounds) *options.rounds = rounds;
  return make_partition(g, color, classes);
}

DegreeRefinement refinement_for_partition(const BipartiteMultigraph& g, const DegreePartition& p) {
  if (p.block_of.size() != g.vertex_count()) throw InvalidInput("partition does not cover the graph");
  const auto sigs = kernels::block_signatures_serial(g, p.block_of);
  std::vector<std::vector<ExtNat>> rows;
  for (std::size_t b = 0; b < p.size(); ++b) {
    const auto& block = p.blocks[b];
    if (block.empty()) throw InvalidInput("empty block in partition");
    for (VertexIndex v : block)
      if (sigs[v] != sigs[block.front()]) throw InvalidInput("partition is not equitable");
    std::vector<ExtNat> row(p.size(), ExtNat(0));
    for (const auto& [j, x] : sigs[block.front()]) row[j] = x;
    rows.push_back(std::move(row));
  }
  return DegreeRefinement(p.kinds, std::move(rows), p);
}

DegreeRefinement degree_refinement(const BipartiteMultigraph& g, const RefinementOptions& options) {
  return refinement_for_partition(g, degree_partition(g, options));
}

bool is_witness(const DegreeRefinement& first, const DegreeRefinement& second, const BlockPermutation& p) {
  const std::size_t n = first.order();
  if (second.order() != n || p.image.size() != n) return false;
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.image[i] >= n || used[p.image[i]]) return false;
    used[p.image[i]] = true;
    if (first.kind(i) != second.kind(p.image[i])) return false;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (second.at(p.image[i], p.image[j]) != first.at(i, j)) return false;
  return true;
}

namespace {

struct BlockProfile {
  VertexKind kind;
  ExtNat diagonal;
  std::vector<ExtNat> row;
  std::vector<ExtNat> column;

  friend bool operator==(const BlockProfile&, const BlockProfile&) = default;
};

std::vector<BlockProfile> profiles(const DegreeRefinement& m) {
  std::vector<BlockProfile> out;
  for (std::size_t i = 0; i < m.order(); ++i) {
    BlockProfile p{m.kind(i), m.at(i, i), m.rows()[i], {}};
    for (std::size_t j = 0; j < m.order(); ++j) p.column.push_back(m.at(j, i));
    std::sort(p.row.begin(), p.row.end());
    std::sort(p.column.begin(), p.column.end());
    out.push_back(std::move(p));
  }
  return out;
}

class EquivalenceSearch {
public:
  EquivalenceSearch(const DegreeRefinement& a, const DegreeRefinement& b) : a_(a), b_(b) {
    const auto pa = profiles(a), pb = profiles(b);
    candidates_.resize(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
      for (std::size_t j = 0; j < b.order(); ++j)
        if (pa[i] == pb[j]) candidates_[i].push_back(j);
    order_.resize(a.order());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return candidates_[x].size() < candidates_[y].size();
    });
    image_.assign(a.order(), kUnset);
    used_.assign(a.order(), false);
  }

  std::optional<BlockPermutation> run() {
    if (!extend(0)) return std::nullopt;
    return BlockPermutation{image_};
  }

  std::vector<BlockPermutation> run_all(std::size_t limit) {
    collect_ = true;
    limit_ = limit;
    extend(0);
    return std::move(found_);
  }

private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool consistent(std::size_t i, std::size_t j) const {
    for (std::size_t k = 0; k < image_.size(); ++k) {
      if (image_[k] == kUnset) continue;
      if (a_.at(i, k) != b_.at(j, image_[k]) || a_.at(k, i) != b_.at(image_[k], j)) return false;
    }
    return a_.at(i, i) == b_.at(j, j);
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) {
      if (!collect_) return true;
      found_.push_back(BlockPermutation{image_});
      if (found_.size() > limit_) throw ResourceLimit("too many block equivalences");
      return false;
    }
    const std::size_t i = order_[depth];
    for (std::size_t j : candidates_[i]) {
      if (used_[j] || !consistent(i, j)) continue;
      image_[i] = j;
      used_[j] = true;
      if (extend(depth + 1)) return true;
      image_[i] = kUnset;
      used_[j] = false;
    }
    return false;
  }

  const DegreeRefinement& a_;
  const DegreeRefinement& b_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  bool collect_ = false;
  std::size_t limit_ = 0;
  std::vector<BlockPermutation> found_;
};

}  // namespace

std::optional<BlockPermutation> refinement_equivalent(const DegreeRefinement& first,
                                                      const DegreeRefinement& second) {
  if (first.order() != second.order()) return std::nullopt;
  auto p = EquivalenceSearch(first, second).run();
  if (p && !is_witness(first, second, *p)) throw InternalError("equivalence search produced a bad witness");
  return p;
}

std::vector<BlockPermutation> enumerate_refinement_equivalences(const DegreeRefinement& first,
                                                                const DegreeRefinement& second, std::size_t limit) {
  if (first.order() != second.order()) return {};
  return EquivalenceSearch(first, second).run_all(limit);
}

QiVerdict is_quasi_isometric(const BipartiteMultigraph& g, const BipartiteMultigraph& h) {
  for (const auto* x : {&g, &h}) {
    const auto report = validate_jsj_graph(*x);
    if (!report.empty()) throw InvalidInput("not a valid JSJ graph: " + report.front());
  }
  QiVerdict v{false, std::nullopt, degree_refinement(g), degree_refinement(h)};
  v.witness = refinement_equivalent(v.first, v.second);
  v.quasi_isometric = v.witness.has_value();
  return v;
}

}  // namespace jsj
