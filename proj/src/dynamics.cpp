#include "swapgame/dynamics.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "swapgame/canonical.hpp"

namespace swapgame {

Scheduler Scheduler::round_robin(int n) {
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return round_robin(std::move(order));
}

Scheduler Scheduler::round_robin(std::vector<Vertex> order) {
  std::vector<Vertex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<Vertex>(i)) throw std::invalid_argument("round-robin order must be a permutation");
  Scheduler s;
  s.policy_ = Policy::RoundRobin;
  s.order_ = std::move(order);
  return s;
}

Scheduler Scheduler::random(std::uint64_t seed) {
  Scheduler s;
  s.policy_ = Policy::Random;
  s.rng_ = Rng(seed);
  return s;
}

Scheduler Scheduler::fixed(Vertex player) {
  Scheduler s;
  s.policy_ = Policy::Fixed;
  s.fixed_ = player;
  return s;
}

Scheduler Scheduler::simultaneous() {
  Scheduler s;
  s.policy_ = Policy::Simultaneous;
  return s;
}

std::string Outcome::summary() const {
  switch (kind) {
    case Kind::Equilibrium: return "equilibrium steps=" + std::to_string(steps);
    case Kind::Cycle: return "cycle entry=" + std::to_string(cycle_entry) + " period=" + std::to_string(cycle_period);
    case Kind::BudgetExhausted: return "budget steps=" + std::to_string(steps);
    case Kind::Stalled: return "stalled steps=" + std::to_string(steps);
    default: return "anomaly steps=" + std::to_string(steps) + " " + diagnostic;
  }
}

std::size_t default_max_steps(int n) {
  const std::size_t x = static_cast<std::size_t>(std::max(n, 1));
  return 4 * x * x * x;
}

namespace {

void fill_state(TraceEvent& e, const Graph& g) {
  e.phi_sum = phi_sum(g);
  e.phi_max = phi_max(g);
  e.state_code = canonical_labeled(g).digest();
}

struct Chosen {
  Vertex player;
  ScoredSwap move;
};

}  // namespace

struct StepEngine {
  static std::optional<Chosen> choose(const Graph& g, const PlayerModel& m, Scheduler& sch) {
    switch (sch.policy_) {
      case Scheduler::Policy::RoundRobin: {
        const std::size_t n = sch.order_.size();
        if (n != static_cast<std::size_t>(g.n())) throw std::invalid_argument("round-robin order size differs from n");
        for (std::size_t i = 0; i < n; ++i) {
          const std::size_t pos = (sch.cursor_ + i) % n;
          const Vertex p = sch.order_[pos];
          if (auto br = best_response_scored(g, p, m)) {
            sch.cursor_ = (pos + 1) % n;
            return Chosen{p, *br};
          }
        }
        return std::nullopt;
      }
      case Scheduler::Policy::Random: {
        std::vector<Chosen> unhappy;
        for (Vertex p = 0; p < g.n(); ++p)
          if (auto br = best_response_scored(g, p, m)) unhappy.push_back({p, *br});
        if (unhappy.empty()) return std::nullopt;
        return unhappy[sch.rng_.below(unhappy.size())];
      }
      case Scheduler::Policy::Fixed: {
        if (auto br = best_response_scored(g, sch.fixed_, m)) return Chosen{sch.fixed_, *br};
        return std::nullopt;
      }
      default: throw std::invalid_argument("simultaneous scheduling is handled by run_simultaneous");
    }
  }
};

StepResult step(const Graph& g, const PlayerModel& m, const Scheduler& sch, std::size_t step_index) {
  StepResult out{std::nullopt, g, sch};
  auto chosen = StepEngine::choose(g, m, out.scheduler);
  if (!chosen) return out;
  const Swap& s = chosen->move.swap;
  out.graph = apply_swap(g, s.mover, s.removed, s.added);
  TraceEvent e;
  e.step = step_index;
  e.moves.push_back({s.mover, s.removed, s.added, chosen->move.delta});
  fill_state(e, out.graph);
  out.event = std::move(e);
  return out;
}

namespace {

bool nobody_unhappy(const Graph& g, const PlayerModel& m) {
  for (Vertex u = 0; u < g.n(); ++u)
    if (is_unhappy(g, u, m)) return false;
  return true;
}

void check_potential(const TraceEvent& e, const Extended& prev_sum, const MaxPotential& prev_max, CostKind kind) {
  if (kind == CostKind::Sum) {
    if (!(e.phi_sum < prev_sum) || (prev_sum - e.phi_sum) < Extended(2))
      throw PotentialViolation("phi_sum did not drop by >= 2 at step " + std::to_string(e.step) + ": " +
                               prev_sum.to_string() + " -> " + e.phi_sum.to_string());
  } else if (!lex_decreasing(prev_max, e.phi_max)) {
    throw PotentialViolation("phi_max did not lex-decrease at step " + std::to_string(e.step));
  }
}

}  // namespace

RunResult run(const Graph& g0, const PlayerModel& m, const Scheduler& sch, std::size_t max_steps) {
  if (!is_connected(g0)) throw std::invalid_argument("initial graph must be connected");
  if (sch.policy() == Scheduler::Policy::Simultaneous) return run_simultaneous(g0, m, max_steps);

  RunResult res;
  const bool monitor = m.attitude == Attitude::Pessimistic && is_tree(g0);
  const bool detect_cycles = sch.policy() != Scheduler::Policy::Random;
  std::map<std::pair<std::string, std::size_t>, std::size_t> seen;

  Graph g = g0;
  Scheduler current = sch;
  Extended prev_sum = phi_sum(g);
  MaxPotential prev_max = phi_max(g);
  for (std::size_t t = 0;; ++t) {
    if (detect_cycles) {
      auto key = std::make_pair(canonical_labeled(g).code, current.cursor());
      auto [it, fresh] = seen.emplace(std::move(key), t);
      if (!fresh) {
        res.outcome.kind = Outcome::Kind::Cycle;
        res.outcome.cycle_entry = it->second;
        res.outcome.cycle_period = t - it->second;
        res.outcome.steps = t;
        res.outcome.final_graph = g;
        return res;
      }
    }
    if (t == max_steps) {
      res.outcome.kind = Outcome::Kind::BudgetExhausted;
      res.outcome.steps = t;
      res.outcome.final_graph = g;
      return res;
    }
    StepResult r = step(g, m, current, t);
    if (!r.event) {
      res.outcome.kind = (sch.policy() == Scheduler::Policy::Fixed && !nobody_unhappy(g, m)) ? Outcome::Kind::Stalled
                                                                                              : Outcome::Kind::Equilibrium;
      res.outcome.steps = t;
      res.outcome.final_graph = g;
      return res;
    }
    if (monitor) {
      check_potential(*r.event, prev_sum, prev_max, m.kind);
      prev_sum = r.event->phi_sum;
      prev_max = r.event->phi_max;
    }
    g = std::move(r.graph);
    current = std::move(r.scheduler);
    res.trace.push_back(std::move(*r.event));
  }
}

Graph apply_event(const Graph& g, const TraceEvent& e) {
  std::set<Edge> edges(g.edges().begin(), g.edges().end());
  for (const auto& mv : e.moves) edges.erase(Edge(mv.mover, mv.removed));
  for (const auto& mv : e.moves) edges.insert(Edge(mv.mover, mv.added));
  std::vector<Edge> es(edges.begin(), edges.end());
  return Graph::build(g.n(), std::span<const Edge>(es));
}

RunResult run_simultaneous(const Graph& g0, const PlayerModel& m, std::size_t max_steps) {
  if (!is_connected(g0)) throw std::invalid_argument("initial graph must be connected");
  RunResult res;
  std::map<std::string, std::size_t> seen;
  Graph g = g0;
  for (std::size_t t = 0;; ++t) {
    auto [it, fresh] = seen.emplace(canonical_labeled(g).code, t);
    if (!fresh) {
      res.outcome.kind = Outcome::Kind::Cycle;
      res.outcome.cycle_entry = it->second;
      res.outcome.cycle_period = t - it->second;
      res.outcome.steps = t;
      res.outcome.final_graph = g;
      return res;
    }
    if (t == max_steps) {
      res.outcome.kind = Outcome::Kind::BudgetExhausted;
      res.outcome.steps = t;
      res.outcome.final_graph = g;
      return res;
    }

    TraceEvent e;
    e.step = t;
    e.simultaneous = true;
    for (Vertex u = 0; u < g.n(); ++u)
      if (auto br = best_response_scored(g, u, m)) e.moves.push_back({u, br->swap.removed, br->swap.added, br->delta});
    if (e.moves.empty()) {
      res.outcome.kind = Outcome::Kind::Equilibrium;
      res.outcome.steps = t;
      res.outcome.final_graph = g;
      return res;
    }

    std::set<Edge> removed, added;
    for (const auto& mv : e.moves) {
      Edge r(mv.mover, mv.removed);
      if (!removed.insert(r).second)
        e.conflicts.push_back("edge {" + std::to_string(r.a) + "," + std::to_string(r.b) + "} removed twice");
    }
    for (const auto& mv : e.moves) {
      Edge a(mv.mover, mv.added);
      if (!added.insert(a).second)
        e.conflicts.push_back("edge {" + std::to_string(a.a) + "," + std::to_string(a.b) + "} added twice");
      else if (g.has_edge(a.a, a.b) && !removed.contains(a))
        e.conflicts.push_back("edge {" + std::to_string(a.a) + "," + std::to_string(a.b) + "} already present");
    }
    Graph next = apply_event(g, e);
    fill_state(e, next);
    res.trace.push_back(e);

    std::string anomaly;
    if (next.m() != g.m()) anomaly = "edge count changed " + std::to_string(g.m()) + " -> " + std::to_string(next.m());
    else if (!is_connected(next)) anomaly = "graph disconnected";
    g = std::move(next);
    if (!anomaly.empty()) {
      res.outcome.kind = Outcome::Kind::Anomaly;
      res.outcome.steps = t + 1;
      res.outcome.final_graph = g;
      res.outcome.diagnostic = anomaly;
      return res;
    }
  }
}

namespace {

nlohmann::ordered_json ext_json(const Extended& x) {
  if (x.is_finite()) return x.value();
  return x.to_string();
}

}  // namespace

void write_trace(std::ostream& out, const std::vector<TraceEvent>& trace) {
  using nlohmann::ordered_json;
  for (const auto& e : trace) {
    ordered_json j;
    j["step"] = e.step;
    if (!e.simultaneous && e.moves.size() == 1) {
      const auto& mv = e.moves.front();
      j["mover"] = mv.mover;
      j["removed"] = {mv.mover, mv.removed};
      j["added"] = {mv.mover, mv.added};
      j["delta"] = ext_json(mv.delta);
    } else {
      ordered_json movers = ordered_json::array(), removed = ordered_json::array(), added = ordered_json::array(),
                   deltas = ordered_json::array();
      for (const auto& mv : e.moves) {
        movers.push_back(mv.mover);
        removed.push_back({mv.mover, mv.removed});
        added.push_back({mv.mover, mv.added});
        deltas.push_back(ext_json(mv.delta));
      }
      j["mover"] = movers;
      j["removed"] = removed;
      j["added"] = added;
      j["delta"] = deltas;
    }
    j["phi_sum"] = ext_json(e.phi_sum);
    ordered_json pm = ordered_json::array();
    for (const auto& c : e.phi_max.costs) pm.push_back(ext_json(c));
    j["phi_max"] = pm;
    j["state_code"] = e.state_code;
    if (!e.conflicts.empty()) j["conflicts"] = e.conflicts;
    out << j.dump() << '\n';
  }
}

std::string trace_to_string(const std::vector<TraceEvent>& trace) {
  std::ostringstream ss;
  write_trace(ss, trace);
  return ss.str();
}

}  // namespace swapgame
