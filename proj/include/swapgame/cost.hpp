#pragma once

#include <string_view>
#include <vector>

#include "swapgame/extended.hpp"
#include "swapgame/graph.hpp"

namespace swapgame {

enum class CostKind { Sum, Max };

std::string_view to_string(CostKind kind);

/// SUM: total distance to all players. MAX: eccentricity. +inf when g is
/// disconnected.
Extended player_cost(const Graph& g, Vertex u, CostKind kind);
Extended social_cost(const Graph& g, CostKind kind);

/// Potential for the SUM game: the SUM social cost.
Extended phi_sum(const Graph& g);

/// Player MAX costs sorted non-increasing.
struct MaxPotential {
  std::vector<Extended> costs;
  bool operator==(const MaxPotential&) const = default;
};

MaxPotential phi_max(const Graph& g);

/// True iff a is lexicographically larger than b, i.e. the leftmost
/// non-zero entry of a - b is positive. Throws on length mismatch.
bool lex_decreasing(const MaxPotential& a, const MaxPotential& b);

/// Per-step conditions on a tree MAX swap (u drops {u,v}). `near_side`:
/// every vertex on u's side of the removed edge strictly lowered its cost.
/// `far_side`: every vertex on v's side either did not raise its cost or
/// ends strictly below some near-side vertex's previous cost.
struct MaxSwapSideCheck {
  bool near_side = true;
  bool far_side = true;
};

MaxSwapSideCheck check_max_swap_sides(const Graph& before, const Graph& after, Vertex u, Vertex v);

}  // namespace swapgame
