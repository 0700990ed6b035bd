#include "swapgame/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <stdexcept>

namespace swapgame {

std::string CanonicalCode::digest() const {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : code) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

void put_u32(std::string& out, std::uint32_t x) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((x >> (8 * i)) & 0xff));
}

}  // namespace

CanonicalCode canonical_labeled(const Graph& g) {
  CanonicalCode c;
  c.kind = CanonicalCode::Kind::Labeled;
  c.code.reserve(4 + 8 * g.m());
  put_u32(c.code, static_cast<std::uint32_t>(g.n()));
  for (const Edge& e : g.edges()) {
    put_u32(c.code, static_cast<std::uint32_t>(e.a));
    put_u32(c.code, static_cast<std::uint32_t>(e.b));
  }
  return c;
}

namespace {

std::vector<Vertex> centroids(const Graph& g) {
  const int n = g.n();
  std::vector<int> parent(n, -1), order, size(n, 1);
  order.reserve(n);
  std::vector<char> seen(n, 0);
  order.push_back(0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex y : g.neighbors(order[i])) {
      if (seen[y]) continue;
      seen[y] = 1;
      parent[y] = order[i];
      order.push_back(y);
    }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];

  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v) {
    int heaviest = n - size[v];
    for (Vertex y : g.neighbors(v))
      if (y != parent[v]) heaviest = std::max(heaviest, size[y]);
    if (2 * heaviest <= n) out.push_back(v);
  }
  return out;
}

std::string ahu(const Graph& g, Vertex v, Vertex parent) {
  std::vector<std::string> kids;
  for (Vertex y : g.neighbors(v))
    if (y != parent) kids.push_back(ahu(g, y, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ")";
  return s;
}

}  // namespace

CanonicalCode canonical_unlabeled_tree(const Graph& g) {
  if (!is_tree(g)) throw std::invalid_argument("unlabeled-tree canonical form requires a tree");
  CanonicalCode c;
  c.kind = CanonicalCode::Kind::UnlabeledTree;
  for (Vertex root : centroids(g)) {
    std::string s = ahu(g, root, -1);
    if (c.code.empty() || s < c.code) c.code = std::move(s);
  }
  return c;
}

Graph prufer_decode(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(n, 1);
  for (int x : seq) {
    if (x < 0 || x >= n) throw std::invalid_argument("Prüfer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  // Linear-time decode: `leaf` tracks the smallest current leaf.
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : seq) {
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return Graph::build(n, std::span<const Edge>(edges));
}

}  // namespace swapgame
