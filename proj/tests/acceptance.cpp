// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>

#include "jsj/blocks.hpp"
#include "jsj/commensurability.hpp"
#include "jsj/oracles.hpp"
#include "jsj/refinement.hpp"
#include "jsj/tree_construction.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace jsj;
using jsj::testing::Rng;

namespace {

// Returns an empty string on success, otherwise what went wrong.
using Criterion = std::function<std::string()>;

const char* const kFigures[] = {"fig2-top", "fig2-middle", "fig2-bottom", "fig4"};

std::string matrices_realise_themselves() {
  for (const char* name : kFigures) {
    const auto m = testing::fixture_matrix(name);
    if (!refinement_equivalent(degree_refinement(augmented_graph_of_blocks(m)), m))
      return std::string(name) + ": refinement of the augmented graph differs";
  }
  return {};
}

std::string fixture_verdicts() {
  using Ids = std::vector<std::string>;
  const auto top = testing::fixture_matrix("fig2-top");
  if (!check_m1(top).holds || !check_m2(top).holds) return "fig2-top should pass M1 and M2";
  const auto middle = check_m1(testing::fixture_matrix("fig2-middle"));
  if (middle.holds || middle.cycle.size() != 6) return "fig2-middle should fail M1 with a 6-cycle";
  const auto bottom = testing::fixture_matrix("fig2-bottom");
  const auto m2 = check_m2(bottom);
  if (!check_m1(bottom).holds) return "fig2-bottom should pass M1";
  if (m2.holds || m2.witness->path != Ids{"t1", "f3", "t3", "f4", "t2"})
    return "fig2-bottom should fail M2 along t1 f3 t3 f4 t2";
  const auto four = testing::fixture_matrix("fig4");
  if (!check_m1(four).holds || !check_m2(four).holds) return "fig4 should pass M1 and M2";
  return {};
}

std::string construction() {
  const auto g4 = augmented_graph_of_blocks(testing::fixture_matrix("fig4"));
  const auto four = unwrap_to_tree(g4);
  if (four.trace.size() != 3 || four.tree.vertex_count() != 16) return "fig4: expected 3 splits and 16 vertices";
  if (!is_tree(four.tree)) return "fig4: output is not a tree";
  if (!is_quasi_isometric(g4, four.tree).quasi_isometric) return "fig4: output not quasi-isometric to input";
  const auto top = unwrap_to_tree(augmented_graph_of_blocks(testing::fixture_matrix("fig2-top")));
  if (top.trace.size() != 2 || top.tree.vertex_count() != 8) return "fig2-top: expected 2 splits and 8 vertices";
  return {};
}

std::string splits_preserve_refinement() {
  Rng rng(2024);
  int done = 0;
  while (done < 1000) {
    const auto g = testing::random_connected(rng, 3 + rng() % 10, rng() % 3, 3);
    const auto sites = find_split_sites(g);
    if (sites.empty()) continue;
    const auto res = split_vertex(g, sites[rng() % sites.size()]);
    if (!refinement_equivalent(degree_refinement(g), degree_refinement(res.graph)))
      return "split changed the refinement of a graph with " + std::to_string(g.vertex_count()) + " vertices";
    ++done;
  }
  return {};
}

std::string trees_satisfy_m1_m2() {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const auto t = testing::random_tree(rng, 2 + rng() % 30);
    const auto m = degree_refinement(t);
    if (!check_m1(m).holds) return "M1 failed on a tree";
    if (!check_m2(m).holds) return "M2 failed on a tree";
  }
  return {};
}

std::string refinement_matches_oracle() {
  Rng rng(6);
  for (int i = 0; i < 10000; ++i) {
    const auto g = testing::random_bipartite(rng, 1 + rng() % 6, 3);
    if (degree_partition(g) != oracles::coarsest_equitable_bruteforce(g))
      return "disagreement on a graph with " + std::to_string(g.vertex_count()) + " vertices";
  }
  return {};
}

std::string matchings_exist_on_forests() {
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const std::uint64_t n = 3 + i % 2;
    const auto p = testing::random_uniform_forest(rng, n, 1 + rng() % 3, 1 + rng() % 6);
    if (!is_matching(p.graph(), forest_matching(p))) return "invalid matching on a forest";
  }
  const auto tri = testing::fixture_pmanifold("doubled-triangle");
  if (!enumerate_matchings(tri).empty()) return "doubled triangle: solver found a matching";
  if (!oracles::matchings_bruteforce(tri).empty()) return "doubled triangle: brute force found a matching";
  return {};
}

std::string matching_vector_fixture() {
  const auto a = matching_vector(testing::fixture_pmanifold("star")).entries;
  const auto b = matching_vector(testing::fixture_pmanifold("star-scaled")).entries;
  if (a != EulerVector{-1, -2, -3}) return "star vector is " + format_vector(a);
  if (b != EulerVector{-2, -4, -6}) return "scaled star vector is " + format_vector(b);
  if (vectors_commensurable(a, b) != ScalingWitness{2, 1}) return "expected witness (2,1)";
  return {};
}

std::string genus_family_obstructed() {
  const auto star = testing::fixture_pmanifold("star");
  const VertexIndex s1 = star.graph().index_of("s1");
  std::vector<PManifold> family;
  for (std::uint64_t g = 1; g <= 5; ++g) {
    family.push_back(genus_family(star, s1, g));
    if (family.back().chi(s1) != 1 - 2 * static_cast<std::int64_t>(g)) return "unexpected chi";
  }
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (matching_obstruction(family[i], family[j]).kind != VerdictKind::Obstructed)
        return "pair g=" + std::to_string(i + 1) + ", g=" + std::to_string(j + 1) + " not obstructed";
  return {};
}

std::string truncations_agree() {
  Rng rng(10);
  int pairs = 0;
  while (pairs < 100) {
    const auto g = testing::random_connected(rng, 3 + rng() % 8, rng() % 3, 3);
    BipartiteMultigraph h;
    if (pairs % 2 == 0) {
      h = testing::relabel(rng, g).graph;
    } else {
      const auto sites = find_split_sites(g);
      if (sites.empty()) continue;
      h = split_vertex(g, sites[rng() % sites.size()]).graph;
    }
    const auto mg = degree_refinement(g), mh = degree_refinement(h);
    const auto w = refinement_equivalent(mg, mh);
    if (!w) return "constructed pair has inequivalent refinements";
    for (std::size_t root = 0; root < mg.order(); ++root)
      for (std::size_t d = 0; d <= 4; ++d)
        for (std::uint64_t c = 1; c <= 3; ++c)
          if (truncated_block_tree(mg, root, d, c).code != truncated_block_tree(mh, w->image[root], d, c).code)
            return "codes differ at depth " + std::to_string(d) + ", cap " + std::to_string(c);
    ++pairs;
  }
  return {};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria{
      {"fixture matrices are the refinements of their augmented graphs of blocks", matrices_realise_themselves},
      {"M1/M2 verdicts on the fixture matrices", fixture_verdicts},
      {"unwrapping fig4 and fig2-top", construction},
      {"1000 random splits preserve the degree refinement", splits_preserve_refinement},
      {"1000 random trees satisfy M1 and M2", trees_satisfy_m1_m2},
      {"10000 small graphs: refinement equals brute force", refinement_matches_oracle},
      {"500 forests admit matchings; doubled triangle admits none", matchings_exist_on_forests},
      {"matching vectors of star and scaled star", matching_vector_fixture},
      {"genus family g=1..5 pairwise obstructed", genus_family_obstructed},
      {"100 equivalent pairs have matching truncated block trees", truncations_agree},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    std::string problem;
    try {
      problem = criteria[i].second();
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << i + 1 << ": " << (problem.empty() ? "PASS" : "FAIL") << " - " << criteria[i].first
              << " (" << ms << " ms)";
    if (!problem.empty()) std::cout << ": " << problem;
    std::cout << "\n";
    failed += !problem.empty();
  }
  return failed;
}
