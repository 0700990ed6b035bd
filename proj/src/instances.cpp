#include "swapgame/instances.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <set>
#include <stdexcept>
#include <thread>

#include "swapgame/cost.hpp"
#include "swapgame/random.hpp"

namespace swapgame {

namespace {

Graph from_edges(int n, const std::vector<Edge>& edges) { return Graph::build(n, std::span<const Edge>(edges)); }

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Graph gen_star(int n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.emplace_back(0, v);
  return from_edges(n, es);
}

Graph gen_path(int n) {
  require(n >= 2, "path needs n >= 2");
  std::vector<Edge> es;
  for (Vertex v = 1; v < n; ++v) es.emplace_back(v - 1, v);
  return from_edges(n, es);
}

Graph gen_labeled_path(const std::vector<Vertex>& order) {
  const int n = static_cast<int>(order.size());
  require(n >= 2, "path needs n >= 2");
  std::vector<Vertex> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i) require(sorted[i] == i, "path order must be a permutation of 0..n-1");
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(order[i - 1], order[i]);
  return from_edges(n, es);
}

Graph gen_random_tree(int n, std::uint64_t seed) {
  require(n >= 2, "random tree needs n >= 2");
  Rng rng(seed);
  std::vector<int> seq(n - 2);
  for (int& x : seq) x = static_cast<int>(rng.below(n));
  return prufer_decode(seq);
}

Graph gen_random_connected(int n, int m, std::uint64_t seed) {
  require(n >= 2, "random connected graph needs n >= 2");
  const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
  require(m >= n - 1 && m <= max_m, "infeasible edge count " + std::to_string(m) + " for n=" + std::to_string(n));
  Rng rng(seed);
  Graph tree = gen_random_tree(n, rng.below(UINT64_MAX));
  std::set<Edge> es(tree.edges().begin(), tree.edges().end());
  std::vector<Edge> absent;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!es.contains(Edge(a, b))) absent.emplace_back(a, b);
  // Partial Fisher-Yates over the missing pairs.
  for (int i = 0; i < m - (n - 1); ++i) {
    std::size_t j = i + rng.below(absent.size() - i);
    std::swap(absent[i], absent[j]);
    es.insert(absent[i]);
  }
  return from_edges(n, std::vector<Edge>(es.begin(), es.end()));
}

namespace {

// Gadget-major layout shared by TS and TS': end gadgets have `end_children`
// children, inner gadgets one more; the last child of an inner gadget is
// its spine vertex.
struct SpineLayout {
  int p;
  int end_children;
  std::vector<int> offset;  // first id of each gadget

  SpineLayout(int p_, int end_children_) : p(p_), end_children(end_children_) {
    int next = 0;
    for (int i = 0; i <= p + 1; ++i) {
      offset.push_back(next);
      next += 1 + children(i);
    }
    offset.push_back(next);
  }
  int children(int gadget) const { return (gadget == 0 || gadget == p + 1) ? end_children : end_children + 1; }
  int size() const { return offset.back(); }
  Vertex at(int gadget, int slot) const { return offset[gadget] + slot; }
  Vertex spine(int gadget) const { return at(gadget, end_children + 1); }
};

Graph gen_spine_tree(int p, int end_children, int extra_leaves) {
  require(p >= 3, "spine tree needs p >= 3");
  require(extra_leaves >= 0, "extra leaves must be non-negative");
  SpineLayout L(p, end_children);
  std::vector<Edge> es;
  for (int i = 0; i <= p + 1; ++i)
    for (int c = 1; c <= L.children(i); ++c) es.emplace_back(L.at(i, 0), L.at(i, c));
  es.emplace_back(L.at(0, 0), L.spine(1));
  es.emplace_back(L.spine(p), L.at(p + 1, 0));
  for (int i = 1; i < p; ++i) es.emplace_back(L.spine(i), L.spine(i + 1));
  int n = L.size();
  for (int x = 0; x < extra_leaves; ++x) es.emplace_back(L.at(1 + x % p, 0), n++);
  return from_edges(n, es);
}

}  // namespace

Graph gen_ts(int p, int extra_leaves) { return gen_spine_tree(p, 3, extra_leaves); }

Vertex ts_vertex(int p, int gadget, int slot) {
  SpineLayout L(p, 3);
  require(gadget >= 0 && gadget <= p + 1 && slot >= 0 && slot <= L.children(gadget), "no such TS vertex");
  return L.at(gadget, slot);
}

Graph gen_ts_prime(int p, int extra_leaves) { return gen_spine_tree(p, 4, extra_leaves); }

Graph gen_caterpillar(int q) {
  require(q >= 2, "caterpillar needs q >= 2");
  std::vector<Edge> es;
  for (int i = 0; i < q; ++i) {
    if (i > 0) es.emplace_back(i - 1, i);
    es.emplace_back(i, q + i);
  }
  es.emplace_back(0, 2 * q);
  es.emplace_back(q - 1, 2 * q + 1);
  return from_edges(2 * q + 2, es);
}

Graph gen_seesaw(int m) {
  require(m >= 2, "seesaw needs m >= 2");
  const int n = 2 * m + 3;
  const Vertex big = n - 1, small = n - 2;  // u_{2m+3}, u_{2m+2}
  std::vector<Edge> es{{big, small}};
  for (int idx = 1; idx <= 2 * m + 1; ++idx) es.emplace_back(idx % 2 == 1 ? big : small, idx - 1);
  return from_edges(n, es);
}

EquilibriumCheck is_equilibrium(const Graph& g, const PlayerModel& m) {
  EquilibriumCheck out;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (auto s = is_unhappy(g, u, m)) {
      out.equilibrium = false;
      out.unhappy.push_back(u);
      out.witnesses.push_back(*s);
    }
  }
  return out;
}

Rational sc_ts_poly(int p) {
  const std::int64_t x = p;
  // 3 * (45x^2 + 293x + 252) + (25x^3 + 195x^2 - 286x - 408), over 3.
  std::int64_t num = 3 * (45 * x * x + 293 * x + 252) + (25 * x * x * x + 195 * x * x - 286 * x - 408);
  std::int64_t den = 3;
  std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return {num / g, den / g};
}

std::int64_t star_social_cost(int n, CostKind kind) {
  const std::int64_t x = n;
  if (kind == CostKind::Sum) return 2 * (x - 1) * (x - 1);
  return x <= 2 ? 2 * (x - 1) : 2 * x - 1;  // a single edge has no center
}

std::vector<Graph> tree_classes(int n) {
  require(n >= 2 && n <= 9, "exhaustive tree enumeration supports 2 <= n <= 9");
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> memo;
  std::lock_guard lock(mu);
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  std::map<CanonicalCode, Graph> classes;
  std::vector<int> seq(n - 2, 0), count(n);
  while (true) {
    // A label's Prüfer multiplicity is its degree minus one. Every tree has a
    // labeling with degrees non-increasing in the label, so decoding only
    // those sequences still reaches every class.
    std::fill(count.begin(), count.end(), 0);
    for (int x : seq) ++count[x];
    if (std::is_sorted(count.rbegin(), count.rend())) {
      Graph t = prufer_decode(seq);
      auto code = canonical_unlabeled_tree(t);
      if (!classes.contains(code)) classes.emplace(std::move(code), std::move(t));
    }
    // Odometer increment over {0..n-1}^(n-2).
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == n) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  std::vector<Graph> out;
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  memo.emplace(n, out);
  return out;
}

namespace {

std::vector<Graph> sampled_classes(int n, int samples, std::uint64_t seed) {
  require(n >= 2, "scan needs n >= 2");
  require(samples > 0, "sample mode needs a positive sample count");
  Rng rng(seed);
  std::map<CanonicalCode, Graph> classes;
  for (int s = 0; s < samples; ++s) {
    Graph t = gen_random_tree(n, rng.below(UINT64_MAX));
    auto code = canonical_unlabeled_tree(t);
    if (!classes.contains(code)) classes.emplace(std::move(code), std::move(t));
  }
  std::vector<Graph> out;
  for (auto& [code, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace

PoAReport poa_scan(int n, const PlayerModel& m, const ScanMode& mode, int threads) {
  const std::vector<Graph> reps = mode.exhaustive ? tree_classes(n) : sampled_classes(n, mode.samples, mode.seed);

  struct ClassResult {
    bool equilibrium = false;
    std::int64_t sc = 0;
    std::int64_t diam = 0;
  };
  std::vector<ClassResult> results(reps.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < reps.size(); i += stride) {
      results[i].equilibrium = is_equilibrium(reps[i], m).equilibrium;
      results[i].sc = social_cost(reps[i], m.kind).value();
      results[i].diam = diameter(reps[i]).value();
    }
  };
  threads = std::max(1, threads);
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(work, t, threads);
    work(0, threads);
  }

  PoAReport r;
  r.n = n;
  r.model = m;
  r.classes = reps.size();
  r.optimum = star_social_cost(n, m.kind);
  r.min_tree_cost = INT64_MAX;
  std::int64_t worst = -1;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    r.min_tree_cost = std::min(r.min_tree_cost, results[i].sc);
    if (!results[i].equilibrium) continue;
    r.equilibria.push_back({canonical_unlabeled_tree(reps[i]), results[i].sc, results[i].diam});
    r.max_equilibrium_diameter = std::max(r.max_equilibrium_diameter, results[i].diam);
    if (results[i].sc > worst) {
      worst = results[i].sc;
      r.witness = reps[i];
      r.witness_code = r.equilibria.back().code;
    }
  }
  if (worst >= 0) r.max_ratio = static_cast<double>(worst) / static_cast<double>(r.optimum);
  return r;
}

void write_poa_csv_header(std::ostream& out) {
  out << "n,k,attitude,kind,classes,equilibria,max_ratio,witness_code\n";
}

void write_poa_csv_row(std::ostream& out, const PoAReport& r) {
  out << r.n << ',' << r.model.k << ',' << to_string(r.model.attitude) << ',' << to_string(r.model.kind) << ','
      << r.classes << ',' << r.equilibria.size() << ',';
  if (r.max_ratio) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", *r.max_ratio);
    out << buf;
  } else {
    out << "none";
  }
  out << ',' << (r.witness_code ? r.witness_code->code : std::string("none")) << '\n';
}

}  // namespace swapgame
