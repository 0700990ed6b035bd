#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "swapgame/belief.hpp"
#include "swapgame/cost.hpp"
#include "swapgame/graph.hpp"
#include "swapgame/random.hpp"

namespace swapgame {

/// Chooses which unhappy player moves next.
class Scheduler {
 public:
  enum class Policy { RoundRobin, Random, Fixed, Simultaneous };

  static Scheduler round_robin(int n);
  static Scheduler round_robin(std::vector<Vertex> order);
  static Scheduler random(std::uint64_t seed);
  static Scheduler fixed(Vertex player);
  static Scheduler simultaneous();

  Policy policy() const { return policy_; }
  const std::vector<Vertex>& order() const { return order_; }
  std::size_t cursor() const { return cursor_; }
  Vertex fixed_player() const { return fixed_; }

 private:
  friend struct StepEngine;

  Policy policy_ = Policy::RoundRobin;
  std::vector<Vertex> order_;
  std::size_t cursor_ = 0;
  Vertex fixed_ = 0;
  Rng rng_{0};
};

struct MoveRecord {
  Vertex mover = 0;
  Vertex removed = 0;  // mover drops {mover, removed}
  Vertex added = 0;    // and adds {mover, added}
  Extended delta;
};

struct TraceEvent {
  std::size_t step = 0;
  bool simultaneous = false;
  std::vector<MoveRecord> moves;
  std::vector<std::string> conflicts;  // simultaneous edits resolved by set semantics
  Extended phi_sum;
  MaxPotential phi_max;
  std::string state_code;  // digest of the labeled state after the step
};

struct Outcome {
  enum class Kind {
    Equilibrium,      // no player is unhappy in `final_graph`
    Cycle,            // (state, cursor) at step entry + period equals the one at entry
    BudgetExhausted,  // max_steps reached
    Stalled,          // fixed scheduler: the chosen player is content, others are not
    Anomaly           // simultaneous run broke edge count or connectivity
  };
  Kind kind = Kind::Equilibrium;
  Graph final_graph;
  std::size_t steps = 0;
  std::size_t cycle_entry = 0;
  std::size_t cycle_period = 0;
  std::string diagnostic;

  /// "equilibrium steps=<s>", "cycle entry=<e> period=<p>", "budget steps=<s>", ...
  std::string summary() const;
};

struct RunResult {
  Outcome outcome;
  std::vector<TraceEvent> trace;
};

struct StepResult {
  std::optional<TraceEvent> event;
  Graph graph;
  Scheduler scheduler;
};

/// Thrown when a monitored potential fails to decrease: an engine bug.
class PotentialViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One single-player transition. No event when the scheduler finds no
/// unhappy player.
StepResult step(const Graph& g, const PlayerModel& m, const Scheduler& sch, std::size_t step_index = 0);

/// Default budget 4 n^3.
std::size_t default_max_steps(int n);

/// Single-move dynamics until equilibrium, a repeated (state, cursor) pair or
/// the budget. Pessimistic runs from trees assert the potential decreases
/// on every step.
RunResult run(const Graph& g0, const PlayerModel& m, const Scheduler& sch, std::size_t max_steps);

/// All unhappy players apply best responses at once: removals first, then
/// additions, with set semantics.
RunResult run_simultaneous(const Graph& g0, const PlayerModel& m, std::size_t max_steps);

/// Re-applies the edits recorded in an event.
Graph apply_event(const Graph& g, const TraceEvent& e);

/// Line-delimited JSON, one record per event.
void write_trace(std::ostream& out, const std::vector<TraceEvent>& trace);
std::string trace_to_string(const std::vector<TraceEvent>& trace);

}  // namespace swapgame
