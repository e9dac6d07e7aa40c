#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "jsj/blocks.hpp"
#include "jsj/cli.hpp"
#include "jsj/dot.hpp"
#include "support/fixtures.hpp"

using namespace jsj;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const char* name) { return testing::fixture_path(name); }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "jsj-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("export_dot") {
  BipartiteMultigraph g;
  g.add_vertex("c", VertexKind::TwoEnded);
  g.add_vertex("s", VertexKind::Fuchsian);
  g.add_edge("c", "s");
  const auto one = export_dot(g);
  CHECK(count(one, " -- ") == 1);
  CHECK(count(one, "label") == 0);
  CHECK(count(one, "style=filled") == 1);

  g.add_edge("c", "s");
  CHECK(count(export_dot(g), "[label=\"x2\"]") == 1);

  const auto fig4 = export_dot(augmented_graph_of_blocks(testing::fixture_matrix("fig4")));
  CHECK(count(fig4, "style=") == 8);
  CHECK(count(fig4, " -- ") == 7);
  for (const char* label : {"x2", "x4", "x5"}) CHECK(count(fig4, label) == 1);

  const std::vector<std::string> notes{"", "chi=-1"};
  CHECK(count(export_dot(g, notes), "label=\"s\\nchi=-1\"") == 1);
}

TEST_CASE("check") {
  const auto four = run({"check", fx("fig4")});
  CHECK(four.code == cli::kOk);
  CHECK(four.out == "M1: PASS\nM2: PASS\n");
  const auto middle = run({"check", fx("fig2-middle")});
  CHECK(middle.code == cli::kNegative);
  CHECK(middle.out.starts_with("M1: FAIL cycle t1 f4 t2 f5 t3 f6\n"));
  const auto bottom = run({"check", fx("fig2-bottom"), "--verify"});
  CHECK(bottom.code == cli::kNegative);
  CHECK(bottom.out.find("M2: FAIL path t1 f3 t3 f4 t2 i=3 j=2") != std::string::npos);
}

TEST_CASE("tree and qi") {
  const auto out = scratch("fig4-tree.json").string();
  const auto tree = run({"tree", fx("fig4"), "--out", out, "--verify"});
  CHECK(tree.code == cli::kOk);
  CHECK(tree.out.find("tree: 16 vertices") != std::string::npos);
  const auto qi = run({"qi", fx("fig4"), out, "--verify"});
  CHECK(qi.code == cli::kOk);
  CHECK(qi.out.find("permutation: ") != std::string::npos);
  CHECK(run({"qi", fx("fig2-top"), fx("fig2-bottom")}).code == cli::kNegative);
  CHECK(run({"tree", fx("fig2-middle")}).code == cli::kNegative);
  CHECK(run({"tree", fx("fig2-top"), "--order", "topdown"}).code == cli::kOk);
  CHECK(run({"qi", fx("fig4")}).code == cli::kParseError);
}

TEST_CASE("validate, refine, blocks") {
  CHECK(run({"validate", fx("star")}).code == cli::kOk);
  CHECK(run({"validate", fx("fig4")}).code == cli::kOk);
  const auto bad = run({"validate", fx("bad-disconnected")});
  CHECK(bad.code == cli::kInvalid);
  CHECK(bad.out == "invalid: disconnected\n");

  const auto refine = run({"refine", fx("square"), "--verify"});
  CHECK(refine.code == cli::kOk);
  CHECK(refine.out == "partition:\n  T1: c1 c2\n  F1: s1 s2\nmatrix:\nblocks: T F\n0 2\ninf 0\nverify: ok\n");

  const auto blocks = run({"blocks", fx("fig2-top")});
  CHECK(blocks.code == cli::kOk);
  CHECK(blocks.out.find("  t1 -- f2 x2\n") != std::string::npos);
}

TEST_CASE("comm") {
  CHECK(run({"comm", fx("star"), fx("star-scaled")}).code == cli::kOk);
  const auto obstructed = run({"comm", fx("star"), fx("star-other")});
  CHECK(obstructed.code == cli::kNegative);
  CHECK(obstructed.out.find("matching: OBSTRUCTED (-1,-2,-3) vs (-1,-2,-4)") != std::string::npos);
  // Block vectors agree, the matching test does not apply to the theta graph.
  const auto theta = run({"comm", fx("star"), fx("theta")});
  CHECK(theta.code == cli::kOk);
  CHECK(theta.out.find("matching: INAPPLICABLE") != std::string::npos);
  CHECK(run({"comm", fx("star"), fx("fig4")}).code == cli::kInvalid);
}

TEST_CASE("matching and family") {
  const auto star = run({"matching", fx("star"), "--verify"});
  CHECK(star.code == cli::kOk);
  CHECK(star.out.starts_with("vector: (-1,-2,-3)\n"));
  const auto tri = run({"matching", fx("doubled-triangle"), "--verify"});
  CHECK(tri.code == cli::kNegative);
  CHECK(tri.out.starts_with("no matching at layer 1\n"));

  const auto out = scratch("star-g2.json").string();
  const auto family = run({"family", fx("star"), "--vertex", "s1", "--genus", "2", "--out", out});
  CHECK(family.code == cli::kOk);
  const auto doc = parse_graph_document(read_file(out));
  CHECK(*doc.chi.get(doc.graph.index_of("s1")) == Rational(-3));
  const auto vec = run({"matching", out});
  CHECK(vec.out.starts_with("vector: (-2,-3,-3)\n"));
  CHECK(run({"family", fx("star"), "--vertex", "c", "--genus", "2"}).code == cli::kInvalid);
  CHECK(run({"family", fx("star"), "--vertex", "s1"}).code == cli::kParseError);
}

TEST_CASE("dot") {
  const auto out = scratch("fig4.dot").string();
  CHECK(run({"dot", fx("fig4"), "--out", out}).code == cli::kOk);
  CHECK(count(read_file(out), " -- ") == 7);
  const auto annotated = run({"dot", fx("star"), "--annotate"});
  CHECK(annotated.out.find("chi=-2") != std::string::npos);
}

TEST_CASE("errors and exit codes") {
  const auto syntax = run({"check", fx("syntax-error")});
  CHECK(syntax.code == cli::kParseError);
  CHECK(syntax.err.find(":5:3:") != std::string::npos);
  CHECK(run({"check", fx("unknown-key")}).code == cli::kParseError);
  CHECK(run({"check", "/nonexistent/file.json"}).code == cli::kInvalid);
  CHECK(run({}).code == cli::kParseError);
  CHECK(run({"frobnicate"}).code == cli::kParseError);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("json mirror and determinism") {
  const auto a = run({"check", fx("fig2-bottom"), "--json"});
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["m1"]["holds"] == true);
  CHECK(j["m2"]["holds"] == false);
  CHECK(j["m2"]["path"].size() == 5);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"refine", fx("fig4")}, {"tree", fx("fig4")}, {"matching", fx("theta")},
        {"comm", fx("star"), fx("star-other"), "--json"}, {"dot", fx("fig2-middle")}}) {
    CHECK(run(args).out == run(args).out);
  }
}
