#include <doctest.h>

#include "swapgame/belief.hpp"
#include "swapgame/cost.hpp"
#include "swapgame/instances.hpp"
#include "swapgame/random.hpp"

using namespace swapgame;

namespace {

// Direct pair summation, independent of player_cost.
std::int64_t pair_sum(const Graph& g) {
  std::int64_t s = 0;
  for (Vertex u = 0; u < g.n(); ++u)
    for (int h : bfs_hops(g, u)) s += h;
  return s;
}

}  // namespace

TEST_CASE("player_cost") {
  CHECK(player_cost(gen_path(4), 0, CostKind::Sum) == Extended(6));
  CHECK(player_cost(gen_path(4), 0, CostKind::Max) == Extended(3));
  CHECK(player_cost(gen_star(5), 0, CostKind::Sum) == Extended(4));
  Graph split = Graph::build(4, {{0, 1}, {2, 3}});
  CHECK(player_cost(split, 0, CostKind::Sum).is_pos_inf());
  CHECK(player_cost(split, 0, CostKind::Max).is_pos_inf());
}

TEST_CASE("social_cost") {
  CHECK(social_cost(gen_star(5), CostKind::Sum) == Extended(32));
  CHECK(social_cost(gen_path(4), CostKind::Sum) == Extended(20));
  CHECK(social_cost(gen_path(4), CostKind::Max) == Extended(10));
  CHECK(social_cost(gen_star(5), CostKind::Max) == Extended(9));
  for (int n = 2; n <= 12; ++n) {
    CHECK(social_cost(gen_star(n), CostKind::Sum) == Extended(pair_sum(gen_star(n))));
    CHECK(social_cost(gen_star(n), CostKind::Sum) == Extended(star_social_cost(n, CostKind::Sum)));
    CHECK(social_cost(gen_star(n), CostKind::Max) == Extended(star_social_cost(n, CostKind::Max)));
  }
  CHECK(social_cost(Graph::build(3, {{0, 1}}), CostKind::Sum).is_pos_inf());
}

TEST_CASE("phi_sum: the path maximizes over trees with value (n^3-n)/3") {
  CHECK(phi_sum(gen_star(5)) == Extended(32));
  for (int n = 2; n <= 8; ++n) {
    std::int64_t best = 0;
    for (const Graph& t : tree_classes(n)) best = std::max(best, pair_sum(t));
    const std::int64_t closed = (static_cast<std::int64_t>(n) * n * n - n) / 3;
    CHECK(best == closed);
    CHECK(phi_sum(gen_path(n)) == Extended(closed));
  }
  CHECK(phi_sum(Graph::build(3, {{0, 1}})).is_pos_inf());
}

TEST_CASE("phi_max and lexicographic order") {
  CHECK(phi_max(gen_path(4)).costs == std::vector<Extended>{3, 3, 2, 2});
  MaxPotential a{{3, 3, 2, 2}}, b{{2, 2, 2, 1}};
  CHECK(lex_decreasing(a, b));
  CHECK_FALSE(lex_decreasing(b, a));
  CHECK_FALSE(lex_decreasing(a, a));
  CHECK_THROWS(lex_decreasing(a, MaxPotential{{1}}));
  CHECK(lex_decreasing(MaxPotential{{Extended::pos_inf(), 1}}, MaxPotential{{5, 5}}));

  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    auto p = phi_max(gen_random_tree(rng.between(2, 15), rng.below(1u << 30))).costs;
    CHECK(std::is_sorted(p.rbegin(), p.rend()));
  }
}

TEST_CASE("MAX swap side checks on improving tree swaps") {
  // path(5): endpoint 0 with global view; swap (1,2) shortens its eccentricity.
  Graph p5 = gen_path(5);
  Graph after = apply_swap(p5, 0, 1, 2);
  auto c = check_max_swap_sides(p5, after, 0, 1);
  CHECK(c.near_side);
  CHECK(c.far_side);
}
