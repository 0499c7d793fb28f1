#include "pmt/pmt.hpp"

#include <algorithm>
#include <map>

#include "pmt/caterpillar.hpp"
#include "pmt/unlabeled.hpp"

namespace pmt {

namespace {

struct Attachment {
  Vertex at = kNoVertex;
  int degree = 0;
};

// Where a leaf really hangs: a degree-2 ts neighbour is looked through, since
// it disappears together with the leaf.
Attachment attachment(const TreeView& view, Vertex leaf) {
  Vertex n = kNoVertex;
  view.for_each_neighbor(leaf, [&](Vertex w) { n = w; });
  if (n == kNoVertex) return {};
  if (view.is_transshipment(n) && view.degree(n) == 2) {
    Vertex y = kNoVertex;
    view.for_each_neighbor(n, [&](Vertex w) {
      if (w != leaf) y = w;
    });
    return {y, view.degree(y)};
  }
  return {n, view.degree(n)};
}

Vertex preferred_leaf(const TreeView& view, const CorridorProfile& profile,
                      const std::vector<Vertex>& leaves) {
  std::vector<Vertex> l2, l3, l4;
  std::map<Vertex, int> per_junction;
  for (Vertex v : leaves) {
    Attachment a = attachment(view, v);
    if (a.degree >= 4)
      l4.push_back(v);
    else if (a.degree <= 2)
      l2.push_back(v);
    else {
      l3.push_back(v);
      ++per_junction[a.at];
    }
  }
  if (!l4.empty()) return l4.front();
  if (!l2.empty()) return l2.front();
  if (profile.junction_corridors.empty()) return l3.front();
  for (Vertex v : l3)
    if (per_junction[attachment(view, v).at] == 2) return v;
  return l3.front();
}

}  // namespace

IntermediateTargets intermediate_targets(const TreeView& view, int k) {
  IntermediateTargets out;
  TreeView cur = view.normalized();
  for (int step = 0; step < k; ++step) {
    if (cur.regular_count() == 0)
      throw Error(ErrorCode::InfeasibleAssumption, "more pebbles than regular vertices");
    const CorridorProfile profile = analyze(cur);
    std::vector<Vertex> leaves;
    for (Vertex v : cur.vertices())
      if (cur.is_regular(v) && cur.degree(v) <= 1) leaves.push_back(v);
    if (leaves.empty()) throw Error(ErrorCode::InternalStuck, "tree view without a regular leaf");

    Vertex pick = preferred_leaf(cur, profile, leaves);
    TreeView next = cur.without(pick).normalized();
    if (next.size() > 0 && analyze(next).c_tilde > profile.c_tilde) {
      pick = kNoVertex;
      for (Vertex v : leaves) {
        TreeView probe = cur.without(v).normalized();
        if (analyze(probe).c_tilde <= profile.c_tilde) {
          pick = v;
          next = std::move(probe);
          break;
        }
      }
      if (pick == kNoVertex) throw Error(ErrorCode::InternalStuck, "every leaf removal increases c");
    }
    out.targets.push_back(pick);
    out.views.push_back(cur);
    cur = std::move(next);
  }
  return out;
}

Plan solve_pmt(const Instance& inst) {
  validate_instance(inst);
  if (!hole_requirement_met(inst.tree, inst.variant, inst.start))
    throw Error(ErrorCode::InfeasibleAssumption, "instance has fewer holes than the tree requires");
  const TreeView full(inst.tree, inst.variant);
  const int k = inst.start.pebble_count();
  const IntermediateTargets it = intermediate_targets(full, k);

  const Plan g = solve_unlabeled(full, inst.target, it.targets);
  Trace parked(inst.target);
  parked.extend(g);

  Trace tr(inst.start);
  for (int i = 0; i < k; ++i) {
    const Vertex goal = it.targets[i];
    const PebbleId p = parked.config().occupant(goal);
    tr.extend(solve_motion_planning(it.views[i], tr.config(), p, goal));
  }
  tr.extend(reverse_plan(g));
  return tr.take_plan();
}

Plan solve(const Instance& inst) {
  validate_instance(inst);
  const TreeView full(inst.tree, inst.variant);
  Plan plan;
  switch (inst.kind) {
    case ProblemKind::Pmt:
      plan = solve_pmt(inst);
      break;
    case ProblemKind::Unlabeled:
      if (!hole_requirement_met(inst.tree, inst.variant, inst.start))
        throw Error(ErrorCode::InfeasibleAssumption, "instance has fewer holes than the tree requires");
      plan = solve_unlabeled(full, inst.start, inst.destinations);
      break;
    case ProblemKind::Motion:
      plan = solve_motion_planning(full, inst.start, inst.marked, inst.goal);
      break;
    case ProblemKind::Gather:
      plan = gather_holes(full, inst.start, inst.subtree);
      break;
  }
  ValidationReport rep = replay(inst.tree, inst.start, plan, inst.variant);
  if (!rep.legal) throw Error(ErrorCode::ValidationFailed, "solver emitted an illegal plan: " + rep.message);
  if (!goal_reached(inst, rep.final_config))
    throw Error(ErrorCode::ValidationFailed, "solver plan does not reach the goal");
  return plan;
}

}  // namespace pmt
