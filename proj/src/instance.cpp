#include "pmt/instance.hpp"

#include <algorithm>

namespace pmt {

const char* to_string(ProblemKind k) {
  switch (k) {
    case ProblemKind::Pmt: return "pmt";
    case ProblemKind::Unlabeled: return "unlabeled";
    case ProblemKind::Motion: return "motion";
    case ProblemKind::Gather: return "gather";
  }
  return "?";
}

namespace {

void check_config(const Instance& inst, const Configuration& c, const char* what) {
  if (c.vertex_count() != inst.tree.size())
    throw Error(ErrorCode::InvalidConfiguration, std::string(what) + " has the wrong vertex count");
  if (inst.variant == Variant::TransShipment)
    for (Vertex s : inst.tree.transshipment_vertices())
      if (c.has_pebble(s))
        throw Error(ErrorCode::InvalidConfiguration, std::string(what) +
                                                         " puts a pebble on trans-shipment vertex " +
                                                         std::to_string(s));
}

void check_set(const Instance& inst, const std::vector<Vertex>& set, const char* what) {
  std::vector<char> seen(inst.tree.size(), 0);
  for (Vertex v : set) {
    if (!inst.tree.valid(v) || seen[v])
      throw Error(ErrorCode::InvalidConfiguration,
                  std::string(what) + " has invalid or repeated vertex " + std::to_string(v));
    seen[v] = 1;
  }
}

}  // namespace

void validate_instance(const Instance& inst) {
  check_config(inst, inst.start, "start");
  const bool ts = inst.variant == Variant::TransShipment;
  switch (inst.kind) {
    case ProblemKind::Pmt:
      check_config(inst, inst.target, "target");
      if (inst.target.pebble_count() != inst.start.pebble_count())
        throw Error(ErrorCode::InvalidConfiguration, "start and target pebble counts differ");
      break;
    case ProblemKind::Unlabeled:
      check_set(inst, inst.destinations, "destinations");
      if (static_cast<int>(inst.destinations.size()) != inst.start.pebble_count())
        throw Error(ErrorCode::InvalidConfiguration, "need one destination per pebble");
      if (ts)
        for (Vertex d : inst.destinations)
          if (inst.tree.is_transshipment(d))
            throw Error(ErrorCode::InvalidConfiguration, "destination on a trans-shipment vertex");
      break;
    case ProblemKind::Motion:
      if (inst.marked < 0 || inst.marked >= inst.start.pebble_count())
        throw Error(ErrorCode::InvalidConfiguration, "marked pebble does not exist");
      if (!inst.tree.valid(inst.goal))
        throw Error(ErrorCode::InvalidConfiguration, "goal vertex out of range");
      if (ts && inst.tree.is_transshipment(inst.goal))
        throw Error(ErrorCode::TargetIsTransShipment, "goal is a trans-shipment vertex");
      break;
    case ProblemKind::Gather:
      check_set(inst, inst.subtree, "subtree");
      break;
  }
}

bool hole_requirement_met(const Tree& tree, Variant variant, const Configuration& config) {
  TreeView view(tree, variant);
  int holes = 0;
  for (Vertex v = 0; v < tree.size(); ++v) holes += view.is_regular(v) && config.is_hole(v) ? 1 : 0;
  return holes >= analyze(view).required_regular_holes();
}

bool goal_reached(const Instance& inst, const Configuration& c) {
  switch (inst.kind) {
    case ProblemKind::Pmt:
      return c == inst.target;
    case ProblemKind::Unlabeled:
      return std::all_of(inst.destinations.begin(), inst.destinations.end(),
                         [&](Vertex d) { return c.has_pebble(d); });
    case ProblemKind::Motion:
      return c.position(inst.marked) == inst.goal;
    case ProblemKind::Gather:
      return std::all_of(inst.subtree.begin(), inst.subtree.end(),
                         [&](Vertex v) { return c.is_hole(v); });
  }
  return false;
}

}  // namespace pmt
