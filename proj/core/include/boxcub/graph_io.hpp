#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "boxcub/graph.hpp"

namespace boxcub {

enum class GraphFormat { kEdgeList, kGraph6 };

// Parses "edge-list" / "graph6"; throws std::invalid_argument otherwise.
GraphFormat parse_graph_format(std::string_view name);

// Raised for malformed input. `location()` is a 1-based line number for
// edge lists and a 0-based byte offset for graph6.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int location)
      : std::runtime_error(what), location_(location) {}
  int location() const { return location_; }

 private:
  int location_;
};

// Edge list: first line is the vertex count, then one "u v" pair per line
// (0-based, whitespace separated). Blank lines and lines starting with '#'
// are skipped.
//
// graph6: the standard printable encoding; an optional ">>graph6<<" header
// and trailing whitespace are accepted.
Graph parse_graph(std::string_view text, GraphFormat format);

// Edge list output lists edges in lexicographic order; graph6 output has no
// header and no trailing newline.
std::string serialize_graph(const Graph& g, GraphFormat format);

}  // namespace boxcub
