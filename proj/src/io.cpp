#include "jsj/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "jsj/errors.hpp"

namespace jsj {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what, 1, 1);
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) fail(path, "unknown key '" + key + "'");
  }
}

std::string get_string(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing key '" + key + "'");
  if (!it->is_string()) fail(path + "/" + key, "expected a string");
  return it->get<std::string>();
}

const json& get_array(const json& obj, const std::string& key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing key '" + key + "'");
  if (!it->is_array()) fail(path + "/" + key, "expected an array");
  return *it;
}

std::uint64_t get_positive(const json& v, const std::string& path) {
  if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) fail(path, "expected a positive integer");
  return v.get<std::uint64_t>();
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

GraphDocument graph_from_json(const json& root) {
  only_keys(root, "", {"name", "vertices", "edges"});
  GraphDocument doc;
  doc.name = get_string(root, "name", "");
  const json& vertices = get_array(root, "vertices", "");
  std::vector<std::optional<Rational>> chis;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string path = "/vertices/" + std::to_string(i);
    const json& v = vertices[i];
    only_keys(v, path, {"id", "kind", "chi"});
    const std::string id = get_string(v, "id", path);
    const std::string kind = get_string(v, "kind", path);
    VertexKind k;
    if (kind == "curve")
      k = VertexKind::TwoEnded;
    else if (kind == "surface")
      k = VertexKind::Fuchsian;
    else
      fail(path + "/kind", "expected \"curve\" or \"surface\"");
    try {
      doc.graph.add_vertex(id, k);
    } catch (const InvalidInput& e) {
      fail(path, e.what());
    }
    std::optional<Rational> chi;
    if (auto it = v.find("chi"); it != v.end()) {
      if (k == VertexKind::TwoEnded) fail(path + "/chi", "curves carry no chi");
      if (it->is_number_integer()) {
        chi = Rational(it->get<std::int64_t>());
      } else if (it->is_string()) {
        chi = Rational::parse(it->get<std::string>());
        if (!chi) fail(path + "/chi", "expected a rational \"p/q\"");
      } else {
        fail(path + "/chi", "expected an integer or a rational string");
      }
    }
    chis.push_back(std::move(chi));
  }
  doc.chi = ChiDecoration(doc.graph.vertex_count());
  for (VertexIndex v = 0; v < chis.size(); ++v)
    if (chis[v]) doc.chi.set(v, *chis[v]);

  const json& edges = get_array(root, "edges", "");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "/edges/" + std::to_string(i);
    const json& e = edges[i];
    if (!e.is_array() || e.size() < 2 || e.size() > 3) fail(path, "expected [curve, surface, multiplicity?]");
    if (!e[0].is_string() || !e[1].is_string()) fail(path, "edge endpoints must be vertex ids");
    const std::uint64_t mult = e.size() == 3 ? get_positive(e[2], path + "/2") : 1;
    try {
      doc.graph.add_edge(e[0].get<std::string>(), e[1].get<std::string>(), mult);
    } catch (const InvalidInput& ex) {
      fail(path, ex.what());
    }
  }
  return doc;
}

MatrixDocument matrix_from_json(const json& root) {
  only_keys(root, "", {"name", "kinds", "rows"});
  const std::string name = get_string(root, "name", "");
  std::vector<VertexKind> kinds;
  const json& ks = get_array(root, "kinds", "");
  for (std::size_t i = 0; i < ks.size(); ++i) {
    const std::string path = "/kinds/" + std::to_string(i);
    if (!ks[i].is_string()) fail(path, "expected a string");
    const auto s = ks[i].get<std::string>();
    if (s == "T" || s == "curve")
      kinds.push_back(VertexKind::TwoEnded);
    else if (s == "F" || s == "surface")
      kinds.push_back(VertexKind::Fuchsian);
    else
      fail(path, "expected \"T\" or \"F\"");
  }
  std::vector<std::vector<ExtNat>> rows;
  const json& rs = get_array(root, "rows", "");
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const std::string path = "/rows/" + std::to_string(i);
    if (!rs[i].is_array()) fail(path, "expected an array");
    auto& row = rows.emplace_back();
    for (std::size_t j = 0; j < rs[i].size(); ++j) {
      const json& x = rs[i][j];
      const std::string epath = path + "/" + std::to_string(j);
      if (x.is_number_unsigned())
        row.emplace_back(x.get<std::uint64_t>());
      else if (x.is_string() && x.get<std::string>() == "inf")
        row.push_back(ExtNat::infinity());
      else
        fail(epath, "expected a non-negative integer or \"inf\"");
    }
  }
  try {
    MatrixDocument doc{name, DegreeRefinement(std::move(kinds), std::move(rows))};
    const auto report = validate_refinement(doc.matrix);
    if (!report.empty()) fail("/rows", report.front());
    return doc;
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    fail("/rows", e.what());
  }
}

ordered_json chi_json(const Rational& r) {
  if (r.is_integer()) {
    const BigInt n = r.numerator();
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
      return ordered_json(static_cast<std::int64_t>(n));
  }
  return ordered_json(r.to_string());
}

}  // namespace

Document parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         " (offset " + std::to_string(e.byte) + ")",
                     line, column);
  }
  if (!root.is_object()) fail("", "expected an object");
  if (root.contains("rows") || root.contains("kinds")) return matrix_from_json(root);
  return graph_from_json(root);
}

GraphDocument parse_graph_document(std::string_view text) {
  auto doc = parse_document(text);
  if (auto* g = std::get_if<GraphDocument>(&doc)) return std::move(*g);
  fail("", "expected a graph document, found a matrix document");
}

std::string serialize_document(const GraphDocument& doc) {
  ordered_json root;
  root["name"] = doc.name;
  root["vertices"] = ordered_json::array();
  const auto& g = doc.graph;
  for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
    ordered_json x;
    x["id"] = g.id(v);
    x["kind"] = std::string(kind_name(g.kind(v)));
    if (v < doc.chi.size() && doc.chi.get(v)) x["chi"] = chi_json(*doc.chi.get(v));
    root["vertices"].push_back(std::move(x));
  }
  root["edges"] = ordered_json::array();
  for (const auto& e : g.edges()) {
    ordered_json edge = ordered_json::array({g.id(e.u), g.id(e.v)});
    if (e.multiplicity != 1) edge.push_back(e.multiplicity);
    root["edges"].push_back(std::move(edge));
  }
  return root.dump(2) + "\n";
}

std::string serialize_document(const MatrixDocument& doc) {
  ordered_json root;
  root["name"] = doc.name;
  root["kinds"] = ordered_json::array();
  for (VertexKind k : doc.matrix.kinds()) root["kinds"].push_back(std::string(1, kind_letter(k)));
  root["rows"] = ordered_json::array();
  for (const auto& row : doc.matrix.rows()) {
    ordered_json r = ordered_json::array();
    for (ExtNat x : row) {
      if (x.is_infinite())
        r.push_back("inf");
      else
        r.push_back(x.value());
    }
    root["rows"].push_back(std::move(r));
  }
  return root.dump(2) + "\n";
}

GraphDocument make_document(std::string name, const PManifold& p) {
  return GraphDocument{std::move(name), p.graph(), p.decoration()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

}  // namespace jsj
