#include <doctest.h>

#include "jsj/blocks.hpp"
#include "jsj/errors.hpp"
#include "jsj/oracles.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace jsj;
using jsj::testing::Rng;

TEST_CASE("set_partitions counts Bell numbers") {
  const std::vector<std::size_t> bell{1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 0; n < bell.size(); ++n) {
    std::vector<VertexIndex> items(n);
    std::iota(items.begin(), items.end(), VertexIndex{0});
    CHECK(oracles::set_partitions(items).size() == bell[n]);
  }
}

TEST_CASE("coarsest_equitable_bruteforce") {
  CHECK(oracles::coarsest_equitable_bruteforce(testing::fixture_graph("square").graph).size() == 2);
  CHECK(oracles::coarsest_equitable_bruteforce(augmented_graph_of_blocks(testing::fixture_matrix("fig2-top"))).size() ==
        5);
  BipartiteMultigraph edge;
  edge.add_vertex("c", VertexKind::TwoEnded);
  edge.add_vertex("s", VertexKind::Fuchsian);
  edge.add_edge("c", "s");
  CHECK(oracles::coarsest_equitable_bruteforce(edge).size() == 2);

  Rng rng(1);
  CHECK_THROWS_AS(oracles::coarsest_equitable_bruteforce(testing::random_tree(rng, 11)), ResourceLimit);
}

TEST_CASE("matchings_bruteforce") {
  CHECK(oracles::matchings_bruteforce(testing::fixture_pmanifold("star")).size() == 3);
  CHECK(oracles::matchings_bruteforce(testing::fixture_pmanifold("doubled-triangle")).empty());
  CHECK(oracles::matchings_bruteforce(testing::fixture_pmanifold("star"), Execution::Serial).size() == 3);

  BipartiteMultigraph curves_only;
  curves_only.add_vertex("c", VertexKind::TwoEnded);
  CHECK(oracles::matchings_bruteforce(curves_only).empty());
  CHECK(oracles::matchings_bruteforce(BipartiteMultigraph{}).size() == 1);

  BipartiteMultigraph wide;
  wide.add_vertex("c", VertexKind::TwoEnded);
  for (int i = 0; i < 21; ++i) wide.add_edge(0, wide.add_vertex("s" + std::to_string(i), VertexKind::Fuchsian));
  CHECK_THROWS_AS(oracles::matchings_bruteforce(wide), ResourceLimit);
}

TEST_CASE("tree codes") {
  BipartiteMultigraph one;
  one.add_vertex("c", VertexKind::TwoEnded);
  CHECK(oracles::tree_code_bruteforce(one, 0) == "T()");

  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    const auto t = testing::random_tree(rng, 1 + rng() % 15);
    const auto r = testing::relabel(rng, t);
    CHECK(oracles::unrooted_tree_code(t) == oracles::unrooted_tree_code(r.graph));
    // Rooted codes follow the relabelling.
    CHECK(oracles::tree_code_bruteforce(t, r.order[0]) == oracles::tree_code_bruteforce(r.graph, 0));
  }

  // Star and path on four vertices, both alternating in kind.
  BipartiteMultigraph star, path;
  star.add_vertex("c", VertexKind::TwoEnded);
  for (const char* s : {"a", "b", "d"}) star.add_edge(0, star.add_vertex(s, VertexKind::Fuchsian));
  path.add_vertex("c1", VertexKind::TwoEnded);
  path.add_vertex("s1", VertexKind::Fuchsian);
  path.add_vertex("c2", VertexKind::TwoEnded);
  path.add_vertex("s2", VertexKind::Fuchsian);
  path.add_edge("c1", "s1");
  path.add_edge("c2", "s1");
  path.add_edge("c2", "s2");
  CHECK(oracles::unrooted_tree_code(star) != oracles::unrooted_tree_code(path));

  CHECK_THROWS_AS(oracles::tree_code_bruteforce(testing::fixture_graph("square").graph, 0), InvalidInput);
}
