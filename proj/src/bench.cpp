#include "pmt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <thread>

#include "pmt/caterpillar.hpp"
#include "pmt/io.hpp"
#include "pmt/pmt.hpp"

namespace pmt {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t instance_seed(std::uint64_t base, int n, int p, int s) {
  return mix(mix(mix(base) ^ static_cast<std::uint64_t>(n)) ^ static_cast<std::uint64_t>(p) << 20) ^
         static_cast<std::uint64_t>(s);
}

BenchCell run_cell(const BenchConfig& cfg, int n, int p) {
  BenchCell cell;
  cell.n = n;
  cell.p = p;
  GeneratorOptions gen;
  gen.max_attempts = cfg.max_attempts;
  double moves_sum = 0, time_sum = 0, c_sum = 0, bound_sum = 0;
  for (int s = 0; s < cfg.seeds; ++s) {
    Instance inst;
    try {
      inst = generate_random_instance(instance_seed(cfg.seed_base, n, p, s), n, p, cfg.variant,
                                      cfg.kind, gen);
    } catch (const Error&) {
      if (cell.instances == 0 && s + 1 >= cfg.probe_seeds) break;
      continue;
    }
    const TreeView full(inst.tree, inst.variant);
    const double c = analyze(full).required_regular_holes();
    const double bound = cfg.kind == ProblemKind::Pmt ? p * n * c + double(n) * n : n * c;

    auto t0 = std::chrono::steady_clock::now();
    Plan plan;
    bool ok = true;
    try {
      plan = cfg.kind == ProblemKind::Pmt ? solve_pmt(inst)
                                          : solve_motion_planning(full, inst.start, inst.marked, inst.goal);
    } catch (const Error&) {
      ok = false;
    }
    auto t1 = std::chrono::steady_clock::now();
    if (ok) {
      ValidationReport rep = replay(inst.tree, inst.start, plan, inst.variant);
      ok = rep.legal && goal_reached(inst, rep.final_config);
    }
    if (!ok) ++cell.invalid;

    const long len = static_cast<long>(plan.size());
    const int cross = max_crossing(plan, n);
    ++cell.instances;
    moves_sum += len;
    time_sum += std::chrono::duration<double, std::milli>(t1 - t0).count();
    c_sum += c;
    bound_sum += bound;
    cell.max_moves = std::max(cell.max_moves, len);
    cell.max_crossing = std::max(cell.max_crossing, cross);
    cell.max_bound_ratio = std::max(cell.max_bound_ratio, len / bound);
    const double pc = p * std::max(c, 1.0);
    cell.max_crossing_ratio = std::max(cell.max_crossing_ratio, cross / pc);
  }
  if (cell.instances > 0) {
    cell.mean_moves = moves_sum / cell.instances;
    cell.mean_runtime_ms = time_sum / cell.instances;
    cell.c = c_sum / cell.instances;
    cell.bound = bound_sum / cell.instances;
  }
  return cell;
}

}  // namespace

std::vector<std::pair<int, int>> bench_grid(const BenchConfig& cfg) {
  std::vector<std::pair<int, int>> grid;
  const bool pmt = cfg.kind == ProblemKind::Pmt;
  const int step = cfg.p_step > 0 ? cfg.p_step : (pmt ? 5 : 1);
  for (int n = cfg.n_min; n <= cfg.n_max; n += cfg.n_step) {
    const int lo = pmt ? 5 : 2;
    const int hi = pmt ? 3 * n / 4 : n - 2;
    for (int p = lo; p <= hi; p += step) grid.emplace_back(n, p);
  }
  return grid;
}

std::vector<BenchCell> run_bench(const BenchConfig& cfg) {
  const auto grid = bench_grid(cfg);
  std::vector<BenchCell> cells(grid.size());
  // Largest cells first so the tail of the schedule is short.
  std::vector<std::size_t> order(grid.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return grid[a].first * grid[a].second > grid[b].first * grid[b].second;
  });
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < order.size();) {
      const std::size_t i = order[k];
      cells[i] = run_cell(cfg, grid[i].first, grid[i].second);
    }
  };
  int threads = cfg.threads > 0 ? cfg.threads : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, threads);
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  cells.erase(std::remove_if(cells.begin(), cells.end(), [](const BenchCell& c) { return c.instances == 0; }),
              cells.end());
  return cells;
}

void write_csv(std::ostream& out, const std::vector<BenchCell>& cells) {
  out << "n,p,c,bound,mean_moves,max_moves,max_crossing,mean_runtime_ms\n";
  char buf[256];
  for (const auto& c : cells) {
    std::snprintf(buf, sizeof buf, "%d,%d,%.3f,%.1f,%.2f,%ld,%d,%.4f\n", c.n, c.p, c.c, c.bound,
                  c.mean_moves, c.max_moves, c.max_crossing, c.mean_runtime_ms);
    out << buf;
  }
}

}  // namespace pmt
