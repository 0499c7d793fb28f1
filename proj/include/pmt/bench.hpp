#pragma once

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "pmt/instance.hpp"

namespace pmt {

struct BenchConfig {
  ProblemKind kind = ProblemKind::Motion;  // Motion or Pmt
  Variant variant = Variant::Plain;
  int n_min = 20;
  int n_max = 200;
  int n_step = 20;
  int p_step = 0;  // 0: 1 for motion, 5 for pmt
  int seeds = 100;
  std::uint64_t seed_base = 1;
  int threads = 0;  // 0: hardware concurrency
  int max_attempts = 100;
  int probe_seeds = 5;  // a cell is dropped when its first probe_seeds seeds all fail
};

struct BenchCell {
  int n = 0;
  int p = 0;
  int instances = 0;
  double c = 0;      // mean c (c~ - 1 in ts)
  double bound = 0;  // mean n*c (motion) or p*n*c + n^2 (pmt)
  double mean_moves = 0;
  long max_moves = 0;
  int max_crossing = 0;
  double mean_runtime_ms = 0;
  double max_bound_ratio = 0;     // max over instances of moves / bound
  double max_crossing_ratio = 0;  // max over instances of crossing / (p*c)
  int invalid = 0;                // plans that failed replay or missed the goal
};

/// (n, p) cells in grid order: motion p = 2..n-2, pmt p = 5..3n/4.
std::vector<std::pair<int, int>> bench_grid(const BenchConfig& cfg);

std::vector<BenchCell> run_bench(const BenchConfig& cfg);

/// CSV columns: n,p,c,bound,mean_moves,max_moves,max_crossing,mean_runtime_ms
void write_csv(std::ostream& out, const std::vector<BenchCell>& cells);

}  // namespace pmt
