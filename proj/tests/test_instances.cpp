#include <doctest.h>

#include <set>
#include <sstream>

#include "swapgame/instances.hpp"
#include "swapgame/random.hpp"

using namespace swapgame;

namespace {

std::int64_t sc(const Graph& g, CostKind kind = CostKind::Sum) { return social_cost(g, kind).value(); }

PlayerModel model(Attitude a, CostKind kind, int k) { return {a, kind, k}; }

}  // namespace

TEST_CASE("generator sizes") {
  CHECK(gen_star(6).m() == 5);
  CHECK(gen_path(6).m() == 5);
  Graph ts3 = gen_ts(3);
  CHECK(ts3.n() == 23);
  CHECK(ts3.m() == 22);
  CHECK(gen_ts(7).n() == 43);
  CHECK(gen_ts_prime(7).n() == 52);
  CHECK(gen_ts_prime(3).n() == 28);
  CHECK(gen_caterpillar(7).n() == 16);
  CHECK(gen_caterpillar(2).n() == 6);
  Graph s3 = gen_seesaw(3);
  CHECK(s3.n() == 9);
  CHECK(s3.degree(8) == 5);
  CHECK(s3.degree(7) == 4);
  CHECK(s3.has_edge(7, 8));
  for (Vertex odd = 0; odd < 7; odd += 2) CHECK(s3.has_edge(odd, 8));
  for (Vertex even = 1; even < 7; even += 2) CHECK(s3.has_edge(even, 7));

  CHECK(gen_ts(4, 2).n() == gen_ts(4).n() + 2);
  CHECK(is_tree(gen_ts(4, 3)));
}

TEST_CASE("generator parameter errors") {
  CHECK_THROWS_AS(gen_ts(2), std::invalid_argument);
  CHECK_THROWS_AS(gen_ts_prime(2), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_connected(5, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_connected(5, 11, 1), std::invalid_argument);
  CHECK_THROWS(gen_labeled_path({0, 0, 1}));
}

TEST_CASE("generators are trees with the stated shapes") {
  for (int p = 3; p <= 10; ++p) {
    CHECK(is_tree(gen_ts(p)));
    CHECK(is_tree(gen_ts_prime(p)));
    CHECK(diameter(gen_ts(p)) == Extended(p + 3));
  }
  for (int q = 2; q <= 10; ++q) {
    CHECK(is_tree(gen_caterpillar(q)));
    CHECK(diameter(gen_caterpillar(q)) == Extended(q + 1));
  }
  for (int m = 2; m <= 6; ++m) CHECK(is_tree(gen_seesaw(m)));
  CHECK_THROWS(gen_seesaw(1));
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const int n = rng.between(2, 20);
    CHECK(is_tree(gen_random_tree(n, i)));
    const int m = rng.between(n - 1, n * (n - 1) / 2);
    Graph g = gen_random_connected(n, m, i);
    CHECK(is_connected(g));
    CHECK(g.m() == m);
  }
}

TEST_CASE("is_equilibrium examples") {
  CHECK(is_equilibrium(gen_ts(3), model(Attitude::Pessimistic, CostKind::Sum, 3)).equilibrium);
  auto e = is_equilibrium(gen_ts(3), model(Attitude::Pessimistic, CostKind::Sum, 4));
  CHECK_FALSE(e.equilibrium);
  CHECK(e.unhappy.size() == e.witnesses.size());
  CHECK_FALSE(e.unhappy.empty());
  for (std::size_t i = 0; i < e.unhappy.size(); ++i) CHECK(e.witnesses[i].mover == e.unhappy[i]);
  CHECK(is_equilibrium(gen_star(7), model(Attitude::Pessimistic, CostKind::Max, 5)).equilibrium);
}

TEST_CASE("known equilibrium families") {
  for (int p = 3; p <= 8; ++p) {
    CHECK(is_equilibrium(gen_ts(p), model(Attitude::Pessimistic, CostKind::Sum, 3)).equilibrium);
    CHECK_FALSE(is_equilibrium(gen_ts(p), model(Attitude::Pessimistic, CostKind::Sum, 4)).equilibrium);
    CHECK(is_equilibrium(gen_ts_prime(p), model(Attitude::WeaklyPessimistic, CostKind::Sum, 3)).equilibrium);
  }
  for (int q = 2; q <= 10; ++q) {
    CHECK(is_equilibrium(gen_caterpillar(q), model(Attitude::Pessimistic, CostKind::Max, 3)).equilibrium);
    CHECK(is_equilibrium(gen_caterpillar(q), model(Attitude::WeaklyPessimistic, CostKind::Sum, 2)).equilibrium);
  }
}

TEST_CASE("sc_ts_poly matches BFS") {
  CHECK(sc_ts_poly(3) == Rational{1924, 1});
  for (int p = 3; p <= 10; ++p) {
    const Rational r = sc_ts_poly(p);
    CHECK(r.den == 1);
    CHECK(r.num == sc(gen_ts(p)));
  }
}

TEST_CASE("star cost closed forms") {
  CHECK(star_social_cost(5, CostKind::Sum) == 32);
  CHECK(star_social_cost(5, CostKind::Max) == 9);
  for (int n = 2; n <= 12; ++n)
    for (CostKind kind : {CostKind::Sum, CostKind::Max}) CHECK(star_social_cost(n, kind) == sc(gen_star(n), kind));
}

TEST_CASE("tree_classes") {
  // Counts of unlabeled trees.
  const std::size_t counts[] = {0, 0, 1, 1, 2, 3, 6, 11, 23, 47};
  for (int n = 2; n <= 9; ++n) {
    auto cls = tree_classes(n);
    CHECK(cls.size() == counts[n]);
    std::set<CanonicalCode> codes;
    for (const Graph& t : cls) {
      CHECK(is_tree(t));
      codes.insert(canonical_unlabeled_tree(t));
    }
    CHECK(codes.size() == cls.size());
  }
  CHECK_THROWS(tree_classes(10));
  CHECK_THROWS(tree_classes(1));
}

TEST_CASE("poa_scan examples") {
  const ScanMode ex{true, 0, 0};
  for (int n = 6; n <= 8; ++n) {
    auto r = poa_scan(n, model(Attitude::Pessimistic, CostKind::Sum, 4), ex);
    CHECK(r.equilibria.size() == 1);
    REQUIRE(r.max_ratio);
    CHECK(*r.max_ratio == 1.0);
    CHECK(*r.witness_code == canonical_unlabeled_tree(gen_star(n)));

    auto k2 = poa_scan(n, model(Attitude::Pessimistic, CostKind::Sum, 2), ex);
    CHECK(k2.equilibria.size() == k2.classes);
    // The path is the worst tree: ratio (n^3-n)/3 over 2(n-1)^2.
    CHECK(*k2.max_ratio == doctest::Approx(double(n * n * n - n) / 3 / (2.0 * (n - 1) * (n - 1))));
  }
  for (int n = 3; n <= 8; ++n)
    for (CostKind kind : {CostKind::Sum, CostKind::Max}) {
      auto r = poa_scan(n, model(Attitude::Optimistic, kind, 2), ex);
      CHECK(r.equilibria.empty());
      CHECK_FALSE(r.max_ratio);
    }
}

TEST_CASE("poa_scan properties") {
  const ScanMode ex{true, 0, 0};
  for (int n = 4; n <= 8; ++n) {
    auto max4 = poa_scan(n, model(Attitude::Pessimistic, CostKind::Max, 4), ex);
    CHECK(max4.max_equilibrium_diameter <= 3);
    CHECK(*max4.max_ratio <= 1.5);
    for (auto [a, kind, k] : {std::tuple{Attitude::WeaklyPessimistic, CostKind::Sum, 4},
                              std::tuple{Attitude::WeaklyPessimistic, CostKind::Max, 3}})
      CHECK(poa_scan(n, model(a, kind, k), ex).max_equilibrium_diameter <= 2);
    for (int k : {3, 4}) {
      auto s = poa_scan(n, model(Attitude::Optimistic, CostKind::Sum, k), ex);
      auto m = poa_scan(n, model(Attitude::Optimistic, CostKind::Max, k), ex);
      CHECK(s.max_equilibrium_diameter < k);
      CHECK(m.max_equilibrium_diameter < k);
      CHECK(*s.max_ratio == 1.0);
      CHECK(*m.max_ratio < 1.5);
    }
    // The star is always the cheapest tree.
    CHECK(max4.min_tree_cost == max4.optimum);
  }
}

TEST_CASE("poa_scan is independent of thread count and sampling is seeded") {
  const PlayerModel m = model(Attitude::Pessimistic, CostKind::Max, 4);
  auto one = poa_scan(8, m, {true, 0, 0}, 1), four = poa_scan(8, m, {true, 0, 0}, 4);
  CHECK(one.equilibria.size() == four.equilibria.size());
  CHECK(one.max_ratio == four.max_ratio);
  CHECK(one.witness_code == four.witness_code);

  auto s1 = poa_scan(12, m, {false, 60, 9}, 2), s2 = poa_scan(12, m, {false, 60, 9}, 3);
  std::ostringstream a, b;
  write_poa_csv_row(a, s1);
  write_poa_csv_row(b, s2);
  CHECK(a.str() == b.str());
}

TEST_CASE("poa csv") {
  std::ostringstream os;
  write_poa_csv_header(os);
  write_poa_csv_row(os, poa_scan(5, model(Attitude::Optimistic, CostKind::Sum, 2), {true, 0, 0}));
  write_poa_csv_row(os, poa_scan(5, model(Attitude::Pessimistic, CostKind::Sum, 4), {true, 0, 0}));
  CHECK(os.str() ==
        "n,k,attitude,kind,classes,equilibria,max_ratio,witness_code\n"
        "5,2,opt,sum,3,0,none,none\n"
        "5,4,pess,sum,3,1,1.000000,(()()()())\n");
}
