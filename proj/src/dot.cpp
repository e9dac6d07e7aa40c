#include "jsj/dot.hpp"

#include <sstream>

namespace jsj {

namespace {

std::string escaped(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string dot_id(std::string_view s) { return '"' + escaped(s) + '"'; }

}  // namespace

std::string export_dot(const BipartiteMultigraph& g, std::span<const std::string> annotations,
                       const std::string& name) {
  std::ostringstream out;
  out << "graph " << dot_id(name) << " {\n";
  out << "  node [shape=circle];\n";
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    out << "  " << dot_id(g.id(v)) << " [";
    if (v < annotations.size() && !annotations[v].empty())
      out << "label=\"" << escaped(g.id(v)) << "\\n" << escaped(annotations[v]) << "\", ";
    if (g.kind(v) == VertexKind::Fuchsian)
      out << "style=filled, fillcolor=black, fontcolor=white";
    else
      out << "style=solid";
    out << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << dot_id(g.id(e.u)) << " -- " << dot_id(g.id(e.v));
    if (e.multiplicity > 1) out << " [label=\"x" << e.multiplicity << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace jsj
