#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "swapgame/belief.hpp"
#include "swapgame/canonical.hpp"
#include "swapgame/graph.hpp"

namespace swapgame {

/// Star with center 0.
Graph gen_star(int n);
/// Path 0-1-...-(n-1).
Graph gen_path(int n);
/// Path visiting the given vertex order.
Graph gen_labeled_path(const std::vector<Vertex>& order);
/// Uniform labeled tree via a random Prüfer sequence.
Graph gen_random_tree(int n, std::uint64_t seed);
/// Random spanning tree plus uniformly chosen extra edges.
Graph gen_random_connected(int n, int m, std::uint64_t seed);

/// Spine-of-gadgets tree on 5p+8 vertices. Numbering is gadget-major: gadget
/// i = 0..p+1 lists a_i, b_i, c_i, d_i and, for 1 <= i <= p, e_i. The spine
/// runs a_0 - e_1 - e_2 - ... - e_p - a_{p+1}.
Graph gen_ts(int p, int extra_leaves = 0);
/// Vertex id of a gadget member in gen_ts numbering; slot 0..4 = a..e.
Vertex ts_vertex(int p, int gadget, int slot);

/// Same shape with five children per inner gadget (a_i; b..f) and four per
/// end gadget; spine through f_i. 6p+10 vertices, gadget-major numbering.
Graph gen_ts_prime(int p, int extra_leaves = 0);

/// Caterpillar: spine 0..q-1, leaf q+i on spine vertex i, end vertices 2q
/// (on spine 0) and 2q+1 (on spine q-1). 2q+2 vertices, diameter q+1.
Graph gen_caterpillar(int q);

/// Double star on 2m+3 players u_1..u_{2m+3}, stored as id = index - 1.
/// Hub u_{2m+3} holds the odd leaves u_1,...,u_{2m+1}; hub u_{2m+2} holds
/// the even leaves u_2,...,u_{2m}; the hubs are adjacent.
Graph gen_seesaw(int m);

struct EquilibriumCheck {
  bool equilibrium = true;
  std::vector<Vertex> unhappy;
  std::vector<Swap> witnesses;  // one per unhappy player
};

EquilibriumCheck is_equilibrium(const Graph& g, const PlayerModel& m);

/// Exact rational p/q in lowest terms.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
  bool operator==(const Rational&) const = default;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// Two-term closed form for SC(TS(p)), kept separate from BFS so the two can
/// be compared:
/// (45p^2 + 293p + 252) + (25/3 p^3 + 65p^2 - 286/3 p - 136).
Rational sc_ts_poly(int p);

/// Star social cost, the tree optimum: SUM 2(n-1)^2, MAX 2n-1 for n >= 3.
std::int64_t star_social_cost(int n, CostKind kind);

/// Representatives of all unlabeled trees on n vertices, found by decoding
/// Prüfer sequences (those whose labels have non-increasing degree) and
/// deduplicating on the unlabeled code. Sorted by code, memoized per n.
/// Requires 2 <= n <= 9.
std::vector<Graph> tree_classes(int n);

struct EquilibriumClass {
  CanonicalCode code;
  std::int64_t social_cost = 0;
  std::int64_t diameter = 0;
};

struct PoAReport {
  int n = 0;
  PlayerModel model;
  std::size_t classes = 0;
  std::vector<EquilibriumClass> equilibria;
  std::optional<double> max_ratio;  // absent when no equilibrium exists
  std::optional<Graph> witness;     // worst equilibrium
  std::optional<CanonicalCode> witness_code;
  std::int64_t optimum = 0;        // star social cost
  std::int64_t min_tree_cost = 0;  // smallest SC seen among scanned trees
  std::int64_t max_equilibrium_diameter = -1;
};

struct ScanMode {
  bool exhaustive = true;
  int samples = 0;
  std::uint64_t seed = 0;
};

/// Checks every scanned tree class for equilibrium and reports the worst
/// SC ratio against the star.
PoAReport poa_scan(int n, const PlayerModel& m, const ScanMode& mode, int threads = 1);

/// CSV columns: n,k,attitude,kind,classes,equilibria,max_ratio,witness_code
void write_poa_csv_header(std::ostream& out);
void write_poa_csv_row(std::ostream& out, const PoAReport& r);

}  // namespace swapgame
