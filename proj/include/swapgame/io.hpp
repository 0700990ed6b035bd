#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "swapgame/graph.hpp"

namespace swapgame {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge-list text format: "n m" header, then m lines "u v".
/// Malformed text raises ParseError; invalid graphs raise GraphError.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

struct DotHighlight {
  Edge removed;
  Edge added;
};

/// Graphviz rendering with player ids as labels. When a highlight is given
/// the removed edge is drawn dashed and the added edge bold.
void write_dot(std::ostream& out, const Graph& g, const std::optional<DotHighlight>& last_swap = std::nullopt);

}  // namespace swapgame
