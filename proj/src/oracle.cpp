#include "swapgame/oracle.hpp"

#include <algorithm>
#include <ostream>

#include "swapgame/instances.hpp"
#include "swapgame/random.hpp"

namespace swapgame {

namespace {

// The view as a standalone graph on local ids.
std::vector<Edge> local_edges(const View& view) {
  std::vector<Edge> out;
  for (const Edge& e : view.edges()) out.emplace_back(view.local(e.a), view.local(e.b));
  return out;
}

int max_hops(const Graph& g, Vertex from) {
  int best = 0;
  for (int h : bfs_hops(g, from)) best = std::max(best, h);
  return best;
}

struct Extremes {
  Extended lo = Extended::pos_inf();
  Extended hi = Extended::neg_inf();
  void add(const Extended& x) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
};

}  // namespace

std::int64_t exact_budget(const View& view, const Swap& s) {
  const auto edges = local_edges(view);
  Graph w = Graph::build(view.size(), std::span<const Edge>(edges));
  const Vertex u = view.local(s.mover);
  Graph w_after = apply_swap(w, u, view.local(s.removed), view.local(s.added));
  return max_hops(w, u) + max_hops(w_after, u) + 2 * view.radius() + 1;
}

OracleResult oracle_delta(const View& view, const Swap& s, CostKind kind, const OracleOptions& opts) {
  OracleResult res;
  const auto base = local_edges(view);
  const Vertex u = view.local(s.mover), v = view.local(s.removed), w = view.local(s.added);
  std::vector<Vertex> frontier;
  for (Vertex f : view.frontier()) frontier.push_back(view.local(f));

  const std::int64_t b = opts.budget;
  std::vector<std::int64_t> levels;
  for (std::int64_t x : {std::int64_t{0}, std::int64_t{1}, std::int64_t{2}, b - 2, b - 1, b})
    if (x >= 0 && x <= b) levels.push_back(x);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  std::vector<std::pair<int, int>> bridges{{-1, -1}};
  if (opts.frontier_bridges)
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (std::size_t j = i + 1; j < frontier.size(); ++j) bridges.emplace_back(frontier[i], frontier[j]);

  std::size_t grid = 1;
  for (std::size_t i = 0; i < frontier.size() && grid <= opts.max_worlds; ++i) grid *= levels.size();
  if (grid * bridges.size() > opts.max_worlds) {
    res.min = Extended::neg_inf();
    res.max = Extended::pos_inf();
    res.note = "too many worlds";
    return res;
  }

  // Extremes over all worlds, and over worlds whose largest level is at
  // most budget-1 / budget-2, to detect values still moving at the edge.
  Extremes all, below1, below2;
  std::vector<std::size_t> pick(frontier.size(), 0);
  for (std::size_t cell = 0; cell < grid; ++cell) {
    std::size_t rest = cell;
    std::int64_t top = 0;
    for (std::size_t f = 0; f < frontier.size(); ++f) {
      pick[f] = rest % levels.size();
      rest /= levels.size();
      top = std::max(top, levels[pick[f]]);
    }
    for (auto [f1, f2] : bridges) {
      std::vector<Edge> edges = base;
      int next = view.size();
      for (std::size_t f = 0; f < frontier.size(); ++f) {
        const std::int64_t amount = levels[pick[f]];
        if (kind == CostKind::Sum) {
          for (std::int64_t i = 0; i < amount; ++i) edges.emplace_back(frontier[f], next++);
        } else {
          Vertex prev = frontier[f];
          for (std::int64_t i = 0; i < amount; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
          }
        }
      }
      if (f1 >= 0) {
        edges.emplace_back(f1, next);
        edges.emplace_back(f2, next);
        ++next;
      }
      Graph h = Graph::build(next, std::span<const Edge>(edges));
      Graph h_after = apply_swap(h, u, v, w);
      Extended d = player_cost(h, u, kind) - player_cost(h_after, u, kind);
      ++res.worlds;
      all.add(d);
      if (top <= b - 1) below1.add(d);
      if (top <= b - 2) below2.add(d);
    }
  }

  res.min = all.lo;
  res.max = all.hi;
  if (b >= 2 && all.lo.is_finite() && below1.lo.is_finite() && below2.lo.is_finite() && all.lo < below1.lo &&
      below1.lo < below2.lo)
    res.min = Extended::neg_inf();
  if (b >= 2 && all.hi.is_finite() && below1.hi.is_finite() && below2.hi.is_finite() && all.hi > below1.hi &&
      below1.hi > below2.hi)
    res.max = Extended::pos_inf();
  res.conclusive = b >= exact_budget(view, s);
  if (!res.conclusive) res.note = "budget below A+B+2k+1";
  return res;
}

std::vector<OracleCase> generate_oracle_cases(int count, std::uint64_t seed, int max_frontier) {
  Rng rng(seed);
  std::vector<OracleCase> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = rng.between(3, 10);
    Graph tree = gen_random_tree(n, rng.below(UINT64_MAX));
    const Vertex u = rng.between(0, n - 1);
    const int k = rng.between(1, 4);
    View view = extract_view(tree, u, k);
    if (static_cast<int>(view.frontier().size()) > max_frontier) continue;
    auto swaps = candidate_swaps(view);
    if (swaps.empty()) continue;
    OracleCase c;
    c.id = static_cast<int>(out.size());
    c.k = k;
    c.kind = rng.below(2) == 0 ? CostKind::Sum : CostKind::Max;
    c.swap = swaps[rng.below(swaps.size())];
    c.tree = std::move(tree);
    out.push_back(std::move(c));
  }
  return out;
}

OracleRow validate_case(const OracleCase& c, bool frontier_bridges) {
  View view = extract_view(c.tree, c.swap.mover, c.k);
  OracleRow row;
  row.case_id = c.id;
  row.k = c.k;
  row.kind = c.kind;
  row.closed_min = delta(view, c.swap, c.kind, DeltaMode::Worst);
  row.closed_max = delta(view, c.swap, c.kind, DeltaMode::Best);
  OracleOptions opts;
  opts.budget = exact_budget(view, c.swap);
  opts.frontier_bridges = frontier_bridges;
  OracleResult r = oracle_delta(view, c.swap, c.kind, opts);
  row.oracle_min = r.min;
  row.oracle_max = r.max;
  row.conclusive = r.conclusive;
  row.agree = r.conclusive && r.min == row.closed_min && r.max == row.closed_max;
  return row;
}

void write_oracle_csv(std::ostream& out, const std::vector<OracleRow>& rows) {
  out << "case_id,k,kind,closed_min,closed_max,oracle_min,oracle_max,agree\n";
  for (const auto& r : rows) {
    out << r.case_id << ',' << r.k << ',' << to_string(r.kind) << ',' << r.closed_min << ',' << r.closed_max << ','
        << r.oracle_min << ',' << r.oracle_max << ',' << (r.agree ? "true" : "false") << '\n';
  }
}

}  // namespace swapgame
