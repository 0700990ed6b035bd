#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "swapgame/cost.hpp"
#include "swapgame/extended.hpp"
#include "swapgame/graph.hpp"

namespace swapgame {

/// Induced k-ball around a player. This is the only input a decision rule
/// reads: it carries no n, m or vertices outside the ball.
///
/// Members are stored sorted by global id; local index i refers to
/// members()[i]. Members at distance < k have every host neighbor inside the
/// view, so hidden structure can only attach at frontier members.
class View {
 public:
  Vertex owner() const { return owner_; }
  int radius() const { return radius_; }
  const std::vector<Vertex>& members() const { return members_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& frontier() const { return frontier_; }

  bool contains(Vertex x) const;
  /// Owner-distance of a member; throws std::out_of_range otherwise.
  int distance(Vertex x) const;
  /// Members adjacent to the owner, ascending.
  std::vector<Vertex> owner_neighbors() const;

  // Local-index access used by the evaluators.
  int size() const { return static_cast<int>(members_.size()); }
  int local(Vertex x) const;
  int local_distance(int i) const { return dist_[i]; }
  const std::vector<int>& local_neighbors(int i) const { return adj_[i]; }

 private:
  friend View extract_view(const Graph& g, Vertex u, int k);

  Vertex owner_ = 0;
  int radius_ = 1;
  std::vector<Vertex> members_;
  std::vector<int> dist_;
  std::vector<std::vector<int>> adj_;
  std::vector<Edge> edges_;
  std::vector<Vertex> frontier_;
};

View extract_view(const Graph& g, Vertex u, int k);

/// Mover u drops {u,v} and connects to w.
struct Swap {
  Vertex mover = 0;
  Vertex removed = 0;
  Vertex added = 0;
  auto operator<=>(const Swap&) const = default;
};

/// Every (v,w) with v a neighbor and w a non-adjacent member, ordered by (v,w).
std::vector<Swap> candidate_swaps(const View& view);

enum class DeltaMode { Worst, Best };

/// Worst- or best-case improvement c_u(H) - c_u(H') over pendant worlds H:
/// connected graphs whose k-ball around the owner equals the view and whose
/// hidden part hangs off frontier members as trees.
///
/// SUM: each hidden vertex behind frontier f contributes gain(f), so the
/// extremum is the visible sum unless some frontier gain has the wrong sign,
/// in which case it is unbounded. MAX: only the pendant depth behind each
/// frontier member matters; the extremum over depth vectors is attained at
/// the all-shallow corner or at a corner with a single deep pendant.
Extended delta(const View& view, const Swap& s, CostKind kind, DeltaMode mode);

enum class Attitude { Pessimistic, WeaklyPessimistic, Optimistic };

std::string_view to_string(Attitude a);

struct PlayerModel {
  Attitude attitude = Attitude::Pessimistic;
  CostKind kind = CostKind::Sum;
  int k = 1;
};

/// The delta an attitude ranks swaps by (worst for the two pessimistic
/// attitudes, best for optimists) and whether it clears the move threshold.
DeltaMode attitude_mode(Attitude a);
bool meets_threshold(Attitude a, const Extended& d);

struct ScoredSwap {
  Swap swap;
  Extended delta;
};

/// Decision rules over a view only.
std::optional<ScoredSwap> first_improving(const View& view, const PlayerModel& m);
std::optional<ScoredSwap> best_improving(const View& view, const PlayerModel& m);

/// Convenience wrappers that extract u's view from g first.
std::optional<Swap> is_unhappy(const Graph& g, Vertex u, const PlayerModel& m);
std::optional<Swap> best_response(const Graph& g, Vertex u, const PlayerModel& m);
std::optional<ScoredSwap> best_response_scored(const Graph& g, Vertex u, const PlayerModel& m);

/// Literal path conditions for k=3 pessimistic SUM: some path u-v-w with
/// depth(T(v)) <= 1 and |V(T(v))| < |N_{T(w)}(w)|. Requires a tree.
bool characterize_sum_p3(const Graph& g, Vertex u);

/// Weakly pessimistic k=2: some path u-v-w where v has degree two.
/// Requires a tree.
bool characterize_wp2(const Graph& g, Vertex u);

/// Paths u-v-w on which the k=3 pessimistic SUM closed form
/// 1 + |N_{T(w)}(w)| - |V(T(v))| is zero with depth(T(v)) <= 1, i.e. the
/// sizes tie. Used to classify disagreements with characterize_sum_p3.
bool has_sum_p3_tie(const Graph& g, Vertex u);

}  // namespace swapgame
