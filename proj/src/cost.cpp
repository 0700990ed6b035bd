#include "swapgame/cost.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace swapgame {

std::string_view to_string(CostKind kind) { return kind == CostKind::Sum ? "sum" : "max"; }

Extended player_cost(const Graph& g, Vertex u, CostKind kind) {
  std::int64_t acc = 0;
  for (int h : bfs_hops(g, u)) {
    if (h < 0) return Extended::pos_inf();
    acc = kind == CostKind::Sum ? acc + h : std::max<std::int64_t>(acc, h);
  }
  return acc;
}

Extended social_cost(const Graph& g, CostKind kind) {
  Extended total = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    total += player_cost(g, u, kind);
    if (total.is_pos_inf()) break;
  }
  return total;
}

Extended phi_sum(const Graph& g) { return social_cost(g, CostKind::Sum); }

MaxPotential phi_max(const Graph& g) {
  MaxPotential p;
  p.costs.reserve(g.n());
  for (Vertex u = 0; u < g.n(); ++u) p.costs.push_back(player_cost(g, u, CostKind::Max));
  std::sort(p.costs.begin(), p.costs.end(), std::greater<>());
  return p;
}

bool lex_decreasing(const MaxPotential& a, const MaxPotential& b) {
  if (a.costs.size() != b.costs.size()) throw std::invalid_argument("MaxPotential length mismatch");
  for (std::size_t i = 0; i < a.costs.size(); ++i) {
    if (a.costs[i] != b.costs[i]) return a.costs[i] > b.costs[i];
  }
  return false;
}

MaxSwapSideCheck check_max_swap_sides(const Graph& before, const Graph& after, Vertex u, Vertex v) {
  // Sides of the removed edge in `before`.
  std::vector<int> side(before.n(), -1);
  std::vector<Vertex> stack{u};
  side[u] = 0;
  side[v] = 1;
  for (Vertex start : {u, v}) {
    stack = {start};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : before.neighbors(x)) {
        if (side[y] >= 0) continue;
        side[y] = side[start];
        stack.push_back(y);
      }
    }
  }
  std::vector<Extended> old_cost(before.n()), new_cost(before.n());
  for (Vertex x = 0; x < before.n(); ++x) {
    old_cost[x] = player_cost(before, x, CostKind::Max);
    new_cost[x] = player_cost(after, x, CostKind::Max);
  }
  Extended near_max = Extended::neg_inf();
  for (Vertex x = 0; x < before.n(); ++x)
    if (side[x] == 0) near_max = std::max(near_max, old_cost[x]);

  MaxSwapSideCheck out;
  for (Vertex x = 0; x < before.n(); ++x) {
    if (side[x] == 0 && !(old_cost[x] > new_cost[x])) out.near_side = false;
    if (side[x] == 1 && !(old_cost[x] >= new_cost[x]) && !(near_max > new_cost[x])) out.far_side = false;
  }
  return out;
}

}  // namespace swapgame
