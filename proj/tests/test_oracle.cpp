#include <doctest.h>

#include <pmt/oracle.hpp>

using namespace pmt;

namespace {

Tree path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Tree(n, e);
}

}  // namespace

TEST_CASE("oracle: motion along a path") {
  Instance inst;
  inst.tree = path(3);
  inst.kind = ProblemKind::Motion;
  inst.start = Configuration(3, {0});
  inst.goal = 2;
  auto res = bfs_solve(inst);
  REQUIRE(res.status == OracleStatus::Optimal);
  CHECK(res.plan.size() == 2);
}

TEST_CASE("oracle: swap on a path is infeasible") {
  Instance inst;
  inst.tree = path(3);
  inst.start = Configuration(3, {0, 2});
  inst.target = Configuration(3, {2, 0});
  CHECK(bfs_solve(inst).status == OracleStatus::Infeasible);
}

TEST_CASE("oracle: star swap, plans replay") {
  Tree star(4, {{0, 1}, {0, 2}, {0, 3}});
  Instance inst;
  inst.tree = star;
  inst.start = Configuration(4, {1, 2});
  inst.target = Configuration(4, {2, 1});
  auto res = bfs_solve(inst);
  REQUIRE(res.status == OracleStatus::Optimal);
  // 1 -> centre -> 3, 2 -> centre -> 1, 3 -> centre -> 2
  CHECK(res.plan.size() == 6);
  CHECK(apply_plan(star, inst.start, res.plan, Variant::Plain) == inst.target);
}

TEST_CASE("oracle: ts crossing costs two moves") {
  Tree t(3, {{0, 1}, {1, 2}}, {1});
  Instance inst;
  inst.tree = t;
  inst.variant = Variant::TransShipment;
  inst.kind = ProblemKind::Motion;
  inst.start = Configuration(3, {0});
  inst.goal = 2;
  auto res = bfs_solve(inst);
  REQUIRE(res.status == OracleStatus::Optimal);
  CHECK(res.plan.size() == 2);
  CHECK(replay(t, inst.start, res.plan, Variant::TransShipment).legal);
}

TEST_CASE("oracle: unlabeled and gather goals") {
  Tree star(4, {{0, 1}, {0, 2}, {0, 3}});
  Instance u;
  u.tree = star;
  u.kind = ProblemKind::Unlabeled;
  u.start = Configuration(4, {1, 2});
  u.destinations = {2, 3};
  auto res = bfs_solve(u);
  REQUIRE(res.status == OracleStatus::Optimal);
  CHECK(res.plan.size() == 2);

  Instance g;
  g.tree = path(4);
  g.kind = ProblemKind::Gather;
  g.start = Configuration(4, {0, 1});
  g.subtree = {0, 1};
  res = bfs_solve(g);
  REQUIRE(res.status == OracleStatus::Optimal);
  CHECK(res.plan.size() == 4);
}

TEST_CASE("oracle: limits") {
  Instance inst;
  inst.tree = path(9);
  inst.start = Configuration(9, {0, 1, 2});
  inst.target = Configuration(9, {6, 7, 8});
  CHECK(bfs_solve(inst, {10, 100}).status == OracleStatus::LimitExceeded);
  CHECK(bfs_solve(inst).status == OracleStatus::Optimal);
}

TEST_CASE("check_assumption on small paths") {
  Instance inst;
  inst.tree = path(4);
  inst.start = Configuration(4, {0});
  inst.target = inst.start;
  CHECK(check_assumption(inst));
  inst.start = Configuration(4, {0, 1});
  inst.target = inst.start;
  CHECK_FALSE(check_assumption(inst));
}

TEST_CASE("reachable configurations") {
  // path with two pebbles: order is preserved, three placements reachable
  auto r = reachable_configurations(path(3), Variant::Plain, Configuration(3, {0, 1}));
  CHECK(r.size() == 3);
  Tree star(4, {{0, 1}, {0, 2}, {0, 3}});
  // star K1,3 with two pebbles and c = 2 holes: every injection reachable
  r = reachable_configurations(star, Variant::Plain, Configuration(4, {1, 2}));
  CHECK(r.size() == 12);
}
