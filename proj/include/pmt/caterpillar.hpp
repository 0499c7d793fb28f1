#pragma once

#include <vector>

#include "pmt/plan.hpp"
#include "pmt/tree.hpp"

namespace pmt {

struct CaterpillarStep {
  Vertex i = kNoVertex;
  Vertex j = kNoVertex;
  Vertex parking = kNoVertex;  // l_k
};

struct CaterpillarDecomposition {
  std::vector<CaterpillarStep> triples;
  std::vector<std::vector<Vertex>> sets;  // S_0..S_m, each sorted
  int m() const { return static_cast<int>(triples.size()) - 1; }
};

/// Caterpillar sets along the route r -> t. Distances count regular vertices,
/// so the plain case is the ts case without ts vertices.
CaterpillarDecomposition build_caterpillar_sets(const TreeView& view, const CorridorProfile& profile,
                                                Vertex r, Vertex t);

/// Regular holes in T(F(r), t).
int target_side_holes(const TreeView& view, const Configuration& config, Vertex r, Vertex t);

/// Case A: T(F(r),t) already holds enough holes.
Plan procedure_a(const TreeView& view, const CorridorProfile& profile, const Configuration& config,
                 PebbleId pebble, Vertex t);

struct Relocation {
  Plan plan;
  Vertex parking = kNoVertex;               // v, where the pebble waits
  std::vector<std::vector<Vertex>> hole_sets;  // H_1, H_2, ...
};

/// Case B steps 1-3: collects the missing holes behind r and moves the pebble
/// to the farthest gathered vertex, after which Case A applies.
Relocation relocate_for_holes(const TreeView& view, const CorridorProfile& profile,
                              const Configuration& config, PebbleId pebble, Vertex t);

Plan procedure_b(const TreeView& view, const CorridorProfile& profile, const Configuration& config,
                 PebbleId pebble, Vertex t);

/// Moves one pebble to t; other pebbles may be displaced but stay in the view.
Plan solve_motion_planning(const TreeView& view, const Configuration& config, PebbleId pebble,
                           Vertex t);

}  // namespace pmt
