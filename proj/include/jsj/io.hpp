#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "jsj/graph.hpp"
#include "jsj/refinement.hpp"

namespace jsj {

/// {"name", "vertices": [{"id", "kind": "curve"|"surface", "chi"?}],
///  "edges": [[curve, surface, multiplicity?]]}
struct GraphDocument {
  std::string name;
  BipartiteMultigraph graph;
  ChiDecoration chi;

  friend bool operator==(const GraphDocument&, const GraphDocument&) = default;
};

/// {"name", "kinds": ["T"|"F", ...], "rows": [[0, 2, "inf", ...], ...]}
struct MatrixDocument {
  std::string name;
  DegreeRefinement matrix;
};

using Document = std::variant<GraphDocument, MatrixDocument>;

/// Strict parse: unknown keys, wrong types and duplicate ids are errors.
/// Throws ParseError with the line and column of syntax errors, or of the
/// document start for structural errors (whose message names the JSON path).
Document parse_document(std::string_view text);
GraphDocument parse_graph_document(std::string_view text);

/// Deterministic JSON text (two-space indent, trailing newline).
std::string serialize_document(const GraphDocument& doc);
std::string serialize_document(const MatrixDocument& doc);

GraphDocument make_document(std::string name, const PManifold& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace jsj
