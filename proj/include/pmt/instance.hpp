#pragma once

#include <string>
#include <vector>

#include "pmt/plan.hpp"
#include "pmt/tree.hpp"

namespace pmt {

enum class ProblemKind : unsigned char { Pmt, Unlabeled, Motion, Gather };

const char* to_string(ProblemKind k);

struct Instance {
  Tree tree;
  Variant variant = Variant::Plain;
  ProblemKind kind = ProblemKind::Pmt;
  Configuration start;
  Configuration target;              // Pmt
  std::vector<Vertex> destinations;  // Unlabeled
  PebbleId marked = 0;               // Motion
  Vertex goal = kNoVertex;           // Motion
  std::vector<Vertex> subtree;       // Gather
};

/// Structural checks (sizes, ranges, no pebble on ts vertices). Does not check
/// the hole-count assumption. Throws Error(InvalidConfiguration).
void validate_instance(const Instance& inst);

bool goal_reached(const Instance& inst, const Configuration& config);

/// Regular holes >= c~ - 1 on the whole tree: |H| >= c in plain,
/// |H| >= |V_T| + c~ - 1 in ts.
bool hole_requirement_met(const Tree& tree, Variant variant, const Configuration& config);

}  // namespace pmt
