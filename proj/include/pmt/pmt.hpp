#pragma once

#include <vector>

#include "pmt/instance.hpp"
#include "pmt/plan.hpp"
#include "pmt/tree.hpp"

namespace pmt {

struct IntermediateTargets {
  std::vector<Vertex> targets;  // t_1..t_k
  std::vector<TreeView> views;  // T_1..T_k; t_i is a leaf of T_i
};

/// Picks k leaves one at a time so that c never grows on the shrinking tree.
IntermediateTargets intermediate_targets(const TreeView& view, int k);

/// Labeled PMT via the Leaves procedure: f_1 ... f_k g^-1.
Plan solve_pmt(const Instance& inst);

/// Dispatches on the problem kind and validates the plan before returning it.
Plan solve(const Instance& inst);

}  // namespace pmt
