#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "swapgame/belief.hpp"

namespace swapgame {

/// Brute-force evaluation of a swap over explicitly built compatible worlds.
/// Independent of delta(): it materializes each world as a Graph, applies
/// the swap with apply_swap and differences exact player costs.
struct OracleOptions {
  std::int64_t budget = 0;        // largest hidden mass (SUM) or pendant depth (MAX) per frontier vertex
  bool frontier_bridges = false;  // also try one hidden vertex joining two frontier members
  std::size_t max_worlds = 50000;
};

struct OracleResult {
  Extended min;
  Extended max;
  bool conclusive = false;
  std::size_t worlds = 0;
  std::string note;
};

/// Smallest budget that makes the pendant-world enumeration exact:
/// A + B + 2k + 1 with A, B the visible eccentricities before/after.
std::int64_t exact_budget(const View& view, const Swap& s);

OracleResult oracle_delta(const View& view, const Swap& s, CostKind kind, const OracleOptions& opts);

struct OracleCase {
  int id = 0;
  Graph tree;
  int k = 1;
  CostKind kind = CostKind::Sum;
  Swap swap;
};

/// Seeded random (tree, player, swap, k <= 4) cases with at most
/// `max_frontier` frontier members.
std::vector<OracleCase> generate_oracle_cases(int count, std::uint64_t seed, int max_frontier = 4);

struct OracleRow {
  int case_id = 0;
  int k = 1;
  CostKind kind = CostKind::Sum;
  Extended closed_min, closed_max, oracle_min, oracle_max;
  bool conclusive = false;
  bool agree = false;
};

OracleRow validate_case(const OracleCase& c, bool frontier_bridges = false);

/// CSV columns: case_id,k,kind,closed_min,closed_max,oracle_min,oracle_max,agree
void write_oracle_csv(std::ostream& out, const std::vector<OracleRow>& rows);

}  // namespace swapgame
