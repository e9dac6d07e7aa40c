#include <doctest.h>

#include <array>

#include "jsj/errors.hpp"
#include "jsj/euler.hpp"
#include "jsj/ext_nat.hpp"
#include "jsj/graph.hpp"
#include "jsj/io.hpp"
#include "jsj/rational.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace jsj;
using jsj::testing::Rng;

namespace {

bool mentions(const ValidationReport& r, std::string_view text) {
  for (const auto& line : r)
    if (line.find(text) != std::string::npos) return true;
  return false;
}

BipartiteMultigraph star() {
  BipartiteMultigraph g;
  g.add_vertex("c", VertexKind::TwoEnded);
  for (const char* s : {"s1", "s2", "s3"}) {
    g.add_vertex(s, VertexKind::Fuchsian);
    g.add_edge("c", s);
  }
  return g;
}

}  // namespace

TEST_CASE("ExtNat order and absorbing infinity") {
  const ExtNat inf = ExtNat::infinity();
  CHECK(ExtNat(0) < ExtNat(1));
  CHECK(ExtNat(1'000'000) < inf);
  CHECK(ExtNat(3) + ExtNat(4) == ExtNat(7));
  CHECK(ExtNat(3) + inf == inf);
  CHECK(inf + inf == inf);
  CHECK(inf.to_string() == "inf");
  CHECK(ExtNat::parse("inf") == inf);
  CHECK(ExtNat::parse("12") == ExtNat(12));
  CHECK_FALSE(ExtNat::parse("-1"));
  CHECK_FALSE(ExtNat::parse("x"));
  ExtNat big(std::numeric_limits<std::uint64_t>::max());
  CHECK_THROWS_AS(big += ExtNat(1), ResourceLimit);
}

TEST_CASE("ExtNat addition laws on random values") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    auto pick = [&] { return jsj::testing::uniform(rng, 0, 9) == 0 ? ExtNat::infinity() : ExtNat(rng() % 1000); };
    const ExtNat a = pick(), b = pick(), c = pick();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a <= a + b);
    if (a.is_finite() && b.is_finite()) CHECK((a + b).is_finite());
  }
}

TEST_CASE("Rational is exact and canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2).denominator() == 2);
  CHECK(Rational(1, -2).numerator() == -1);
  CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
  CHECK(Rational(-5, 2).to_string() == "-5/2");
  CHECK(Rational(6, 3).to_string() == "2");
  CHECK(Rational::parse("-1/42") == Rational(-1, 42));
  CHECK(Rational::parse("4/2") == Rational(2));
  CHECK_FALSE(Rational::parse("1/0"));
  CHECK_FALSE(Rational::parse("a/b"));
  CHECK_THROWS_AS(Rational(1, 0), InvalidInput);
  CHECK(Rational(-1, 3) < Rational(-1, 4));
}

TEST_CASE("orbifold_euler") {
  const std::array circle{OrbifoldCell{0, 1}, OrbifoldCell{1, 1}};
  CHECK(orbifold_euler(circle) == Rational(0));

  std::vector<OrbifoldCell> genus2{{0, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}, {2, 1}};
  CHECK(orbifold_euler(genus2) == Rational(-2));

  // (2,3,7) triangle orbifold: the sphere with three cone points, cut into
  // two triangles whose corners are the cone points.
  std::vector<OrbifoldCell> triangle{{0, 2}, {0, 3}, {0, 7}, {1, 1}, {1, 1}, {1, 1}, {2, 1}, {2, 1}};
  const Rational chi = orbifold_euler(triangle);
  CHECK(chi == Rational(-1, 42));
  CHECK(chi == Rational(2) - (Rational(1, 2) + Rational(2, 3) + Rational(6, 7)));

  CHECK_THROWS_AS(orbifold_euler(std::vector<OrbifoldCell>{}), InvalidInput);
  CHECK_THROWS_AS(orbifold_euler(std::vector<OrbifoldCell>{{0, 0}}), InvalidInput);
}

TEST_CASE("scale_chi") {
  CHECK(scale_chi(Rational(-1, 42), 84) == Rational(-2));
  CHECK(scale_chi(Rational(-3), 1) == Rational(-3));
  CHECK(scale_chi(Rational(-5, 2), 4) == Rational(-10));
}

TEST_CASE("graph construction") {
  BipartiteMultigraph g;
  g.add_vertex("c", VertexKind::TwoEnded);
  g.add_vertex("s", VertexKind::Fuchsian);
  CHECK_THROWS_AS(g.add_vertex("c", VertexKind::Fuchsian), InvalidInput);
  g.add_edge("s", "c", 2);
  g.add_edge("c", "s");
  CHECK(g.bundle_count() == 1);
  CHECK(g.multiplicity(0, 1) == 3);
  CHECK(g.edges().front().u == 0);  // curve endpoint first
  CHECK(g.valence(0) == 3);
  CHECK(g.edge_count() == 3);
  CHECK_THROWS_AS(g.add_edge("c", "c"), InvalidInput);
  CHECK_THROWS_AS(g.add_edge("c", "s", 0), InvalidInput);
  CHECK_THROWS_AS(g.add_edge("c", "missing"), InvalidInput);
}

TEST_CASE("validate_jsj_graph") {
  BipartiteMultigraph edge;
  edge.add_vertex("c", VertexKind::TwoEnded);
  edge.add_vertex("s", VertexKind::Fuchsian);
  edge.add_edge("c", "s");
  CHECK(validate_jsj_graph(edge).empty());

  BipartiteMultigraph curves;
  curves.add_vertex("a", VertexKind::TwoEnded);
  curves.add_vertex("b", VertexKind::TwoEnded);
  curves.add_vertex("s", VertexKind::Fuchsian);
  curves.add_edge("a", "b");
  curves.add_edge("a", "s");
  CHECK(mentions(validate_jsj_graph(curves), "edge joins two TwoEnded vertices"));

  const auto two = testing::fixture_graph("bad-disconnected");
  CHECK(mentions(validate_jsj_graph(two.graph), "disconnected"));

  CHECK(mentions(validate_jsj_graph(BipartiteMultigraph{}), "no vertices"));
}

TEST_CASE("validate_pmanifold") {
  PManifold p(star(), {0, -1, -2, -3});
  CHECK(validate_pmanifold(p, true).empty());

  PManifold zero(star(), {0, 0, -2, -3});
  CHECK(mentions(validate_pmanifold(zero, false), "chi must be negative"));

  BipartiteMultigraph path;
  path.add_vertex("c", VertexKind::TwoEnded);
  path.add_vertex("s", VertexKind::Fuchsian);
  path.add_edge("c", "s");
  PManifold small(path, {0, -1});
  CHECK(mentions(validate_pmanifold(small, true), "curve valence < 3"));
  CHECK(validate_pmanifold(small, false).empty());
}

TEST_CASE("chi decoration") {
  const auto doc = testing::fixture_graph("orbifold-chi");
  CHECK(validate_chi(doc.graph, doc.chi).empty());
  CHECK(*doc.chi.get(doc.graph.index_of("s")) == Rational(-1, 42));
  CHECK_FALSE(make_pmanifold(doc.graph, doc.chi));

  ChiDecoration partial(doc.graph.vertex_count());
  partial.set(doc.graph.index_of("s"), Rational(-1));
  CHECK(mentions(validate_chi(doc.graph, partial), "missing chi"));
}

TEST_CASE("forest and tree predicates") {
  CHECK(is_tree(star()));
  BipartiteMultigraph doubled = star();
  doubled.add_edge("c", "s1");
  CHECK(simple_graph_is_forest(doubled));
  CHECK_FALSE(is_forest(doubled));
  const auto square = testing::fixture_graph("square");
  CHECK(is_connected(square.graph));
  CHECK_FALSE(simple_graph_is_forest(square.graph));
  CHECK(connected_components(testing::fixture_graph("bad-disconnected").graph).size() == 2);
}

TEST_CASE("document parsing") {
  SUBCASE("syntax errors carry line and column") {
    try {
      parse_document(read_file(testing::fixture_path("syntax-error")));
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 5);
      CHECK(e.column() == 3);
    }
  }
  SUBCASE("unknown keys are rejected") {
    CHECK_THROWS_AS(parse_document(read_file(testing::fixture_path("unknown-key"))), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"name":"x","vertices":[],"edges":[],"extra":1})"), ParseError);
  }
  SUBCASE("bad values") {
    CHECK_THROWS_AS(parse_document(R"({"name":"x","vertices":[{"id":"c","kind":"curve","chi":-1}],"edges":[]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_document(R"({"name":"x","vertices":[{"id":"c","kind":"torus"}],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_document(R"({"name":"x","vertices":[{"id":"c","kind":"curve"},{"id":"c","kind":"curve"}],"edges":[]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_document(
            R"({"name":"x","vertices":[{"id":"c","kind":"curve"},{"id":"s","kind":"surface"}],"edges":[["c","s",0]]})"),
        ParseError);
    CHECK_THROWS_AS(parse_document(R"({"name":"m","kinds":["T","F"],"rows":[[0,1],[2,0]]})"), ParseError);
  }
  SUBCASE("duplicate edges sum") {
    const auto doc = parse_graph_document(
        R"({"name":"x","vertices":[{"id":"c","kind":"curve"},{"id":"s","kind":"surface","chi":"-3/1"}],"edges":[["c","s"],["s","c",2]]})");
    CHECK(doc.graph.multiplicity(0, 1) == 3);
    CHECK(*doc.chi.get(1) == Rational(-3));
  }
  SUBCASE("matrix documents") {
    const auto m = testing::fixture_matrix("fig2-top");
    CHECK(m.order() == 5);
    CHECK(m.at(0, 3) == ExtNat(2));
    CHECK(m.at(2, 0) == ExtNat::infinity());
    const auto round = parse_document(serialize_document(MatrixDocument{"fig2-top", m}));
    CHECK(std::get<MatrixDocument>(round).matrix == m);
  }
}

TEST_CASE("serialization round trip on random graphs") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    GraphDocument doc;
    doc.name = "g" + std::to_string(i);
    doc.graph = testing::random_connected(rng, 2 + rng() % 10, rng() % 4);
    doc.chi = ChiDecoration(doc.graph.vertex_count());
    for (VertexIndex v : doc.graph.vertices_of_kind(VertexKind::Fuchsian))
      if (rng() % 3) doc.chi.set(v, Rational(-static_cast<std::int64_t>(1 + rng() % 7), static_cast<std::int64_t>(1 + rng() % 5)));
    const std::string text = serialize_document(doc);
    const auto back = parse_graph_document(text);
    CHECK(back == doc);
    CHECK(serialize_document(back) == text);
  }
}
