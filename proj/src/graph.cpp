#include "swapgame/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace swapgame {

namespace {

std::string pair_str(Vertex u, Vertex v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

}  // namespace

Graph Graph::build(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) throw GraphError(GraphError::Kind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    es.emplace_back(u, v);
  }
  return build(n, std::span<const Edge>(es));
}

Graph Graph::build(int n, std::span<const Edge> edges) {
  if (n < 0) throw GraphError(GraphError::Kind::VertexOutOfRange, "negative vertex count");
  Graph g;
  g.adj_.assign(n, {});
  g.edges_.assign(edges.begin(), edges.end());
  for (const Edge& e : g.edges_) {
    if (e.a == e.b) throw GraphError(GraphError::Kind::SelfLoop, "self-loop at vertex " + std::to_string(e.a));
    if (e.a < 0 || e.b >= n)
      throw GraphError(GraphError::Kind::EndpointOutOfRange, "edge " + pair_str(e.a, e.b) + " has endpoint outside 0.." +
                                                                  std::to_string(n - 1));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end())
    throw GraphError(GraphError::Kind::DuplicateEdge, "duplicate edge " + pair_str(dup->a, dup->b));
  for (const Edge& e : g.edges_) {
    g.adj_[e.a].push_back(e.b);
    g.adj_[e.b].push_back(e.a);
  }
  for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n() || v < 0 || v >= n()) return false;
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<int> bfs_hops(const Graph& g, Vertex u) {
  if (u < 0 || u >= g.n()) throw GraphError(GraphError::Kind::VertexOutOfRange, "vertex out of range");
  std::vector<int> dist(g.n(), -1);
  std::vector<Vertex> queue{u};
  queue.reserve(g.n());
  dist[u] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::vector<Extended> distances_from(const Graph& g, Vertex u) {
  auto hops = bfs_hops(g, u);
  std::vector<Extended> out;
  out.reserve(hops.size());
  for (int h : hops) out.push_back(h < 0 ? Extended::pos_inf() : Extended(h));
  return out;
}

bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  auto hops = bfs_hops(g, 0);
  return std::none_of(hops.begin(), hops.end(), [](int h) { return h < 0; });
}

bool is_tree(const Graph& g) { return g.n() >= 1 && g.m() == g.n() - 1 && is_connected(g); }

Extended diameter(const Graph& g) {
  int best = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (int h : bfs_hops(g, u)) {
      if (h < 0) return Extended::pos_inf();
      best = std::max(best, h);
    }
  }
  return best;
}

Graph apply_swap(const Graph& g, Vertex u, Vertex v, Vertex w) {
  if (w == u) throw SwapError(SwapError::Kind::SelfTarget, "swap target equals mover " + std::to_string(u));
  if (!g.has_edge(u, v)) throw SwapError(SwapError::Kind::MissingEdge, "missing edge " + pair_str(u, v));
  if (w < 0 || w >= g.n()) throw GraphError(GraphError::Kind::VertexOutOfRange, "swap target out of range");
  if (g.has_edge(u, w)) throw SwapError(SwapError::Kind::AlreadyAdjacent, "already adjacent " + pair_str(u, w));
  std::vector<Edge> es;
  es.reserve(g.m());
  const Edge removed(u, v);
  for (const Edge& e : g.edges())
    if (e != removed) es.push_back(e);
  es.emplace_back(u, w);
  return Graph::build(g.n(), std::span<const Edge>(es));
}

namespace {

void validate_path(const Graph& g, const PathSpec& path) {
  const auto& p = path.vertices;
  if (p.empty()) throw GraphError(GraphError::Kind::InvalidPath, "empty path");
  std::set<Vertex> seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0 || p[i] >= g.n()) throw GraphError(GraphError::Kind::InvalidPath, "path vertex out of range");
    if (!seen.insert(p[i]).second) throw GraphError(GraphError::Kind::InvalidPath, "path repeats a vertex");
    if (i > 0 && !g.has_edge(p[i - 1], p[i]))
      throw GraphError(GraphError::Kind::InvalidPath, "path step " + pair_str(p[i - 1], p[i]) + " is not an edge");
  }
}

// Hop distances from root in (V, E \ E(P)); -1 outside the component.
std::vector<int> component_hops(const Graph& g, const PathSpec& path, Vertex root) {
  std::set<Edge> path_edges;
  for (std::size_t i = 1; i < path.vertices.size(); ++i) path_edges.emplace(path.vertices[i - 1], path.vertices[i]);
  std::vector<int> dist(g.n(), -1);
  std::queue<Vertex> q;
  dist[root] = 0;
  q.push(root);
  while (!q.empty()) {
    Vertex x = q.front();
    q.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] >= 0 || path_edges.contains(Edge(x, y))) continue;
      dist[y] = dist[x] + 1;
      q.push(y);
    }
  }
  return dist;
}

}  // namespace

std::map<Vertex, std::vector<Vertex>> path_components(const Graph& g, const PathSpec& path) {
  validate_path(g, path);
  std::map<Vertex, std::vector<Vertex>> out;
  for (Vertex root : path.vertices) {
    auto dist = component_hops(g, path, root);
    auto& comp = out[root];
    for (Vertex x = 0; x < g.n(); ++x)
      if (dist[x] >= 0) comp.push_back(x);
  }
  return out;
}

int component_depth(const Graph& g, const PathSpec& path, Vertex root) {
  validate_path(g, path);
  auto dist = component_hops(g, path, root);
  return *std::max_element(dist.begin(), dist.end());
}

}  // namespace swapgame
