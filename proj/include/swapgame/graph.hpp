#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "swapgame/extended.hpp"

namespace swapgame {

using Vertex = int;

/// Unordered vertex pair, stored with first < second.
struct Edge {
  Vertex a = 0;
  Vertex b = 0;

  Edge() = default;
  Edge(Vertex x, Vertex y) : a(x < y ? x : y), b(x < y ? y : x) {}

  auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  enum class Kind { SelfLoop, DuplicateEdge, EndpointOutOfRange, VertexOutOfRange, InvalidPath };
  GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class SwapError : public std::invalid_argument {
 public:
  enum class Kind { MissingEdge, AlreadyAdjacent, SelfTarget };
  SwapError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction;
/// edits such as apply_swap return a new value.
class Graph {
 public:
  Graph() = default;

  /// Validating constructor. Self-loops, duplicate edges and endpoints >= n
  /// are rejected with GraphError.
  static Graph build(int n, std::span<const std::pair<Vertex, Vertex>> edges);
  static Graph build(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return build(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
  }
  static Graph build(int n, std::span<const Edge> edges);

  int n() const { return static_cast<int>(adj_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex u) const { return adj_.at(u); }
  int degree(Vertex u) const { return static_cast<int>(adj_.at(u).size()); }
  bool has_edge(Vertex u, Vertex v) const;
  /// Sorted edge list.
  const std::vector<Edge>& edges() const { return edges_; }

  bool operator==(const Graph& o) const { return edges_ == o.edges_ && n() == o.n(); }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// Breadth-first distances from u; +inf for unreachable vertices.
std::vector<Extended> distances_from(const Graph& g, Vertex u);

/// Same as distances_from but with -1 for unreachable; internal fast path.
std::vector<int> bfs_hops(const Graph& g, Vertex u);

Extended diameter(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

/// Player u drops edge {u,v} and adds edge {u,w}.
Graph apply_swap(const Graph& g, Vertex u, Vertex v, Vertex w);

struct PathSpec {
  std::vector<Vertex> vertices;
};

/// For each vertex on the path, the vertex set of its component in
/// (V, E \ E(P)), sorted ascending.
std::map<Vertex, std::vector<Vertex>> path_components(const Graph& g, const PathSpec& path);

/// Depth of a tree component rooted at root (max hop distance within it).
int component_depth(const Graph& g, const PathSpec& path, Vertex root);

}  // namespace swapgame
