#include "swapgame/belief.hpp"

#include <algorithm>
#include <stdexcept>

namespace swapgame {

bool View::contains(Vertex x) const { return std::binary_search(members_.begin(), members_.end(), x); }

int View::local(Vertex x) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), x);
  if (it == members_.end() || *it != x) return -1;
  return static_cast<int>(it - members_.begin());
}

int View::distance(Vertex x) const {
  int i = local(x);
  if (i < 0) throw std::out_of_range("vertex " + std::to_string(x) + " is not in the view");
  return dist_[i];
}

std::vector<Vertex> View::owner_neighbors() const {
  std::vector<Vertex> out;
  for (int j : adj_[local(owner_)]) out.push_back(members_[j]);
  return out;
}

View extract_view(const Graph& g, Vertex u, int k) {
  if (k < 1) throw std::invalid_argument("view radius must be >= 1");
  std::vector<int> hop(g.n(), -1);
  std::vector<Vertex> order{u};
  hop[u] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    Vertex x = order[i];
    if (hop[x] == k) continue;
    for (Vertex y : g.neighbors(x)) {
      if (hop[y] >= 0) continue;
      hop[y] = hop[x] + 1;
      order.push_back(y);
    }
  }
  View view;
  view.owner_ = u;
  view.radius_ = k;
  view.members_ = order;
  std::sort(view.members_.begin(), view.members_.end());
  const int size = static_cast<int>(view.members_.size());
  view.dist_.resize(size);
  view.adj_.assign(size, {});
  for (int i = 0; i < size; ++i) {
    Vertex x = view.members_[i];
    view.dist_[i] = hop[x];
    if (hop[x] == k) view.frontier_.push_back(x);
    for (Vertex y : g.neighbors(x)) {
      int j = view.local(y);
      if (j < 0) continue;
      view.adj_[i].push_back(j);
      if (x < y) view.edges_.emplace_back(x, y);
    }
  }
  return view;
}

std::vector<Swap> candidate_swaps(const View& view) {
  std::vector<Swap> out;
  const int lu = view.local(view.owner());
  const auto& nb = view.local_neighbors(lu);
  std::vector<char> adjacent(view.size(), 0);
  for (int j : nb) adjacent[j] = 1;
  for (int j : nb) {
    for (int t = 0; t < view.size(); ++t) {
      if (t == lu || adjacent[t]) continue;
      out.push_back({view.owner(), view.members()[j], view.members()[t]});
    }
  }
  return out;
}

namespace {

struct SwapLocal {
  int u, v, w;
};

SwapLocal validate(const View& view, const Swap& s) {
  if (s.mover != view.owner()) throw std::invalid_argument("malformed swap: mover is not the view owner");
  SwapLocal l{view.local(s.mover), view.local(s.removed), view.local(s.added)};
  if (l.v < 0 || view.local_distance(l.v) != 1) throw std::invalid_argument("malformed swap: removed vertex is not a neighbor");
  if (l.w < 0) throw std::invalid_argument("malformed swap: new endpoint is outside the view");
  if (l.w == l.u || view.local_distance(l.w) <= 1)
    throw std::invalid_argument("malformed swap: new endpoint is the mover or already adjacent");
  return l;
}

// Owner distances inside the view after the swap; -1 if unreachable.
std::vector<int> swapped_distances(const View& view, const SwapLocal& s) {
  std::vector<int> dist(view.size(), -1);
  std::vector<int> queue{s.u};
  dist[s.u] = 0;
  auto visit = [&](int x, int y) {
    if (dist[y] < 0) {
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int y : view.local_neighbors(x)) {
      if ((x == s.u && y == s.v) || (x == s.v && y == s.u)) continue;
      visit(x, y);
    }
    if (x == s.u) visit(x, s.w);
    if (x == s.w) visit(x, s.u);
  }
  return dist;
}

}  // namespace

Extended delta(const View& view, const Swap& s, CostKind kind, DeltaMode mode) {
  const SwapLocal l = validate(view, s);
  const auto after = swapped_distances(view, l);
  if (std::any_of(after.begin(), after.end(), [](int d) { return d < 0; })) return Extended::neg_inf();

  const int k = view.radius();
  if (kind == CostKind::Sum) {
    std::int64_t visible = 0;
    bool frontier_loses = false, frontier_gains = false;
    for (int i = 0; i < view.size(); ++i) {
      const int gain = view.local_distance(i) - after[i];
      visible += gain;
      if (view.local_distance(i) == k) {
        frontier_loses |= gain < 0;
        frontier_gains |= gain > 0;
      }
    }
    if (mode == DeltaMode::Worst && frontier_loses) return Extended::neg_inf();
    if (mode == DeltaMode::Best && frontier_gains) return Extended::pos_inf();
    return visible;
  }

  int ecc_before = 0, ecc_after = 0;
  std::vector<int> frontier_after;
  for (int i = 0; i < view.size(); ++i) {
    ecc_before = std::max(ecc_before, view.local_distance(i));
    ecc_after = std::max(ecc_after, after[i]);
    if (view.local_distance(i) == k) frontier_after.push_back(after[i]);
  }
  if (frontier_after.empty()) return ecc_before - ecc_after;

  // Pendant depths are drawn from {0, deep}; with deep this large every
  // deep pendant dominates both maxima.
  const std::int64_t deep = ecc_before + ecc_after + 2 * k + 1;
  auto value = [&](auto&& depth_of) {
    std::int64_t before = ecc_before, post = ecc_after;
    for (std::size_t f = 0; f < frontier_after.size(); ++f) {
      before = std::max<std::int64_t>(before, k + depth_of(f));
      post = std::max<std::int64_t>(post, frontier_after[f] + depth_of(f));
    }
    return before - post;
  };
  std::int64_t lo = value([](std::size_t) { return std::int64_t{0}; });
  std::int64_t hi = lo;
  const std::int64_t all_deep = value([&](std::size_t) { return deep; });
  lo = std::min(lo, all_deep);
  hi = std::max(hi, all_deep);
  for (std::size_t g = 0; g < frontier_after.size(); ++g) {
    const std::int64_t single = value([&](std::size_t f) { return f == g ? deep : std::int64_t{0}; });
    lo = std::min(lo, single);
    hi = std::max(hi, single);
  }
  return mode == DeltaMode::Worst ? lo : hi;
}

std::string_view to_string(Attitude a) {
  switch (a) {
    case Attitude::Pessimistic: return "pess";
    case Attitude::WeaklyPessimistic: return "weak";
    default: return "opt";
  }
}

DeltaMode attitude_mode(Attitude a) { return a == Attitude::Optimistic ? DeltaMode::Best : DeltaMode::Worst; }

bool meets_threshold(Attitude a, const Extended& d) {
  switch (a) {
    case Attitude::Pessimistic: return d > Extended(0);
    case Attitude::WeaklyPessimistic: return d.is_finite() && d >= Extended(0);
    default: return d > Extended(0);
  }
}

std::optional<ScoredSwap> first_improving(const View& view, const PlayerModel& m) {
  const DeltaMode mode = attitude_mode(m.attitude);
  for (const Swap& s : candidate_swaps(view)) {
    Extended d = delta(view, s, m.kind, mode);
    if (meets_threshold(m.attitude, d)) return ScoredSwap{s, d};
  }
  return std::nullopt;
}

std::optional<ScoredSwap> best_improving(const View& view, const PlayerModel& m) {
  const DeltaMode mode = attitude_mode(m.attitude);
  std::optional<ScoredSwap> best;
  // Candidates arrive in (v,w) order, so strict improvement keeps the
  // smallest pair among ties.
  for (const Swap& s : candidate_swaps(view)) {
    Extended d = delta(view, s, m.kind, mode);
    if (!meets_threshold(m.attitude, d)) continue;
    if (!best || d > best->delta) best = ScoredSwap{s, d};
  }
  return best;
}

std::optional<Swap> is_unhappy(const Graph& g, Vertex u, const PlayerModel& m) {
  auto hit = first_improving(extract_view(g, u, m.k), m);
  if (!hit) return std::nullopt;
  return hit->swap;
}

std::optional<ScoredSwap> best_response_scored(const Graph& g, Vertex u, const PlayerModel& m) {
  return best_improving(extract_view(g, u, m.k), m);
}

std::optional<Swap> best_response(const Graph& g, Vertex u, const PlayerModel& m) {
  auto hit = best_response_scored(g, u, m);
  if (!hit) return std::nullopt;
  return hit->swap;
}

namespace {

void require_tree(const Graph& g) {
  if (!is_tree(g)) throw std::invalid_argument("characterization requires a tree");
}

template <class Pred>
bool any_path_uvw(const Graph& g, Vertex u, Pred&& pred) {
  for (Vertex v : g.neighbors(u))
    for (Vertex w : g.neighbors(v))
      if (w != u && pred(v, w)) return true;
  return false;
}

struct PathP3Sizes {
  int depth_v;
  int size_v;
  int far_neighbors_w;
};

PathP3Sizes p3_sizes(const Graph& g, Vertex u, Vertex v, Vertex w) {
  PathSpec p{{u, v, w}};
  auto comps = path_components(g, p);
  return {component_depth(g, p, v), static_cast<int>(comps[v].size()), g.degree(w) - 1};
}

}  // namespace

bool characterize_sum_p3(const Graph& g, Vertex u) {
  require_tree(g);
  return any_path_uvw(g, u, [&](Vertex v, Vertex w) {
    auto s = p3_sizes(g, u, v, w);
    return s.depth_v <= 1 && s.size_v < s.far_neighbors_w;
  });
}

bool has_sum_p3_tie(const Graph& g, Vertex u) {
  require_tree(g);
  return any_path_uvw(g, u, [&](Vertex v, Vertex w) {
    auto s = p3_sizes(g, u, v, w);
    return s.depth_v <= 1 && s.size_v == s.far_neighbors_w;
  });
}

bool characterize_wp2(const Graph& g, Vertex u) {
  require_tree(g);
  return any_path_uvw(g, u, [&](Vertex v, Vertex) { return g.degree(v) == 2; });
}

}  // namespace swapgame
