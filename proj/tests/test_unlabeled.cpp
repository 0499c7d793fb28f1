#include <doctest.h>

#include <random>

#include <pmt/io.hpp>
#include <pmt/oracle.hpp>
#include <pmt/unlabeled.hpp>

#include "support/figures.hpp"
#include "support/oracles.hpp"
#include "support/random_plans.hpp"

using namespace pmt;

namespace {

bool occupies(const Configuration& c, const std::vector<Vertex>& set) {
  int n = 0;
  for (Vertex v : set) n += c.has_pebble(v) ? 1 : 0;
  return n == c.pebble_count() && n == static_cast<int>(set.size());
}

}  // namespace

TEST_CASE("unlabeled: fixed cases") {
  SUBCASE("already in place") {
    Tree t(4, {{0, 1}, {1, 2}, {1, 3}});
    Configuration c(4, {0, 2});
    CHECK(solve_unlabeled(TreeView(t), c, {0, 2}).empty());
  }
  SUBCASE("path 1-2-3 with the pebble at the far end") {
    Tree t(3, {{0, 1}, {1, 2}});
    Configuration c(3, {0});
    auto plan = solve_unlabeled(TreeView(t), c, {2});
    Plan expect;
    expect.push_back(0, 1);
    expect.push_back(1, 2);
    CHECK(plan == expect);
    Instance inst;
    inst.tree = t;
    inst.kind = ProblemKind::Unlabeled;
    inst.start = c;
    inst.destinations = {2};
    auto best = bfs_solve(inst);
    REQUIRE(best.status == OracleStatus::Optimal);
    CHECK(best.plan.size() == plan.size());
  }
  SUBCASE("destination count must match") {
    Tree t(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(solve_unlabeled(TreeView(t), Configuration(3, {0}), {1, 2}), Error);
  }
}

TEST_CASE("unlabeled: random instances reach the destination set within n^2") {
  std::mt19937_64 rng(17);
  for (int round = 0; round < 200; ++round) {
    const bool ts = round % 3 == 2;
    const Variant var = ts ? Variant::TransShipment : Variant::Plain;
    const int n = 2 + static_cast<int>(rng() % 99);
    const int p = static_cast<int>(rng() % n);
    Instance inst;
    try {
      inst = generate_random_instance(rng(), n, p, var, ProblemKind::Unlabeled);
    } catch (const Error&) {
      continue;
    }
    auto plan = solve_unlabeled(TreeView(inst.tree, var), inst.start, inst.destinations);
    auto after = apply_plan(inst.tree, inst.start, plan, var);
    INFO("round " << round << " n=" << n << " p=" << p);
    CHECK(occupies(after, inst.destinations));
    CHECK(plan.size() <= static_cast<std::size_t>(n) * n);
  }
}

TEST_CASE("unlabeled never gets stuck on small trees") {
  for (int n = 1; n <= 7; ++n)
    for (const Tree& t : oracle::nonisomorphic_trees(n)) {
      const int c = analyze(t).c;
      for (int mask = 0; mask < (1 << n); ++mask) {
        const int p = __builtin_popcount(mask);
        if (n - p < c) continue;
        std::vector<Vertex> pos;
        for (Vertex v = 0; v < n; ++v)
          if (mask >> v & 1) pos.push_back(v);
        Configuration start(n, pos);
        for (int dmask = 0; dmask < (1 << n); ++dmask) {
          if (__builtin_popcount(dmask) != p) continue;
          std::vector<Vertex> dest;
          for (Vertex v = 0; v < n; ++v)
            if (dmask >> v & 1) dest.push_back(v);
          auto plan = solve_unlabeled(TreeView(t), start, dest);
          CHECK(occupies(apply_plan(t, start, plan, Variant::Plain), dest));
        }
      }
    }
}

TEST_CASE("gather_holes: drawn example") {
  using namespace fig::gather;
  Tree t = tree();
  Configuration c(17, {B, C, D, E, F, G, I, O, P, M});
  auto plan = gather_holes(TreeView(t), c, {D, E, F});
  auto after = apply_plan(t, c, plan, Variant::Plain);
  CHECK(after.is_hole(D));
  CHECK(after.is_hole(E));
  CHECK(after.is_hole(F));
  CHECK(plan.size() <= 17u * 3u);
  // the three holes used are c, d and g; the others stay where they are
  CHECK(after.is_hole(a));
  CHECK(after.is_hole(b));
  CHECK(after.is_hole(e));
  CHECK(after.is_hole(f));
}

TEST_CASE("gather_holes: edge cases") {
  using namespace fig::gather;
  Tree t = tree();
  Configuration c(17, {B, C, G});
  CHECK(gather_holes(TreeView(t), c, {D, E, F}).empty());
  CHECK(gather_holes(TreeView(t), c, {}).empty());
  try {
    gather_holes(TreeView(t), c, {D, F});
    FAIL("expected NotConnectedSubtree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotConnectedSubtree);
  }
  Tree p3(3, {{0, 1}, {1, 2}});
  try {
    gather_holes(TreeView(p3), Configuration(3, {0, 1}), {0, 1});
    FAIL("expected NotEnoughHoles");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotEnoughHoles);
  }
}

TEST_CASE("gather_holes: random instances") {
  std::mt19937_64 rng(23);
  int done = 0;
  for (int round = 0; round < 260 && done < 200; ++round) {
    const bool ts = round % 3 == 2;
    const Variant var = ts ? Variant::TransShipment : Variant::Plain;
    const int n = 2 + static_cast<int>(rng() % 99);
    const int p = static_cast<int>(rng() % n);
    Instance inst;
    try {
      inst = generate_random_instance(rng(), n, p, var, ProblemKind::Gather);
    } catch (const Error&) {
      continue;
    }
    ++done;
    TreeView view(inst.tree, var);
    int q = 0;
    for (Vertex v : inst.subtree) q += view.is_regular(v) ? 1 : 0;
    auto plan = gather_holes(view, inst.start, inst.subtree);
    auto rep = replay(inst.tree, inst.start, plan, var);
    INFO("round " << round << " n=" << n << " q=" << q);
    REQUIRE(rep.legal);
    for (Vertex v : inst.subtree) CHECK(rep.final_config.is_hole(v));
    CHECK(plan.size() <= static_cast<std::size_t>(n) * q);
    CHECK(*std::max_element(rep.crossings.begin(), rep.crossings.end()) <= q + 1);
    // vertices no move touched keep their occupant
    std::vector<char> touched(n, 0);
    for (const Move& m : plan.moves) touched[m.from] = touched[m.to] = 1;
    for (Vertex v = 0; v < n; ++v)
      if (!touched[v]) CHECK(rep.final_config.occupant(v) == inst.start.occupant(v));
  }
  CHECK(done == 200);
}
