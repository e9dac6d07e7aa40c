#pragma once

#include <span>
#include <string>

#include "jsj/graph.hpp"

namespace jsj {

/// Graphviz text for `g`. Curves are unfilled circles, surfaces filled; a
/// bundle of multiplicity k > 1 is one edge labelled "xk". Vertices and edges
/// appear in input order. A non-empty annotation for vertex v is appended to
/// its label on a second line; `annotations` may be shorter than the vertex list.
std::string export_dot(const BipartiteMultigraph& g, std::span<const std::string> annotations = {},
                       const std::string& name = "G");

}  // namespace jsj
