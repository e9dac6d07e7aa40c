#pragma once

#include <string>

#include "jsj/io.hpp"

#ifndef JSJ_FIXTURE_DIR
#error "JSJ_FIXTURE_DIR must be defined"
#endif

namespace jsj::testing {

inline std::string fixture_path(const std::string& name) { return std::string(JSJ_FIXTURE_DIR) + "/" + name + ".json"; }

inline DegreeRefinement fixture_matrix(const std::string& name) {
  return std::get<MatrixDocument>(parse_document(read_file(fixture_path(name)))).matrix;
}

inline GraphDocument fixture_graph(const std::string& name) {
  return parse_graph_document(read_file(fixture_path(name)));
}

inline PManifold fixture_pmanifold(const std::string& name) {
  const auto doc = fixture_graph(name);
  return *make_pmanifold(doc.graph, doc.chi);
}

}  // namespace jsj::testing
