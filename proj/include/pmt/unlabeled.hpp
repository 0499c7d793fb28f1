#pragma once

#include <vector>

#include "pmt/plan.hpp"
#include "pmt/tree.hpp"

namespace pmt {

/// Leaf-pruning solver for interchangeable pebbles. Moves the pebble set onto
/// `destinations` inside the view. Length <= n^2.
Plan solve_unlabeled(const TreeView& view, const Configuration& config,
                     const std::vector<Vertex>& destinations);

/// Empties the connected vertex set `subtree` by pulling in the nearest holes.
/// Pebbles only move inside the view. Length <= n * q.
Plan gather_holes(const TreeView& view, const Configuration& config,
                  const std::vector<Vertex>& subtree);

}  // namespace pmt
