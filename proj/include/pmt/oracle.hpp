#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "pmt/instance.hpp"
#include "pmt/plan.hpp"

namespace pmt {

struct OracleLimits {
  std::size_t max_states = 2'000'000;
  std::size_t max_depth = 10'000;
};

enum class OracleStatus { Optimal, Infeasible, LimitExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::LimitExceeded;
  Plan plan;  // shortest, when Optimal
  std::size_t states = 0;
};

/// Breadth-first search over configurations (holes anonymous). In ts, a
/// crossing of a trans-shipment vertex is one transition of two moves, and
/// plan length counts moves, so the search is Dijkstra-like over 1/2 costs.
OracleResult bfs_solve(const Instance& inst, const OracleLimits& limits = {});

bool check_assumption(const Instance& inst);

/// Every labeled configuration reachable from start (pebble positions tuples).
std::set<std::vector<Vertex>> reachable_configurations(const Tree& tree, Variant variant,
                                                       const Configuration& start,
                                                       std::size_t max_states = 5'000'000);

}  // namespace pmt
