#include "pmt/unlabeled.hpp"

#include <algorithm>

namespace pmt {

namespace {

// Nearest vertex of the view (by BFS from `from`) satisfying pred; ties lowest id.
template <class Pred>
Vertex nearest(const TreeView& view, Vertex from, Pred pred) {
  auto dist = distances_from(view, {from});
  Vertex best = kNoVertex;
  for (Vertex x = 0; x < static_cast<Vertex>(dist.size()); ++x) {
    if (dist[x] < 0 || !pred(x)) continue;
    if (best == kNoVertex || dist[x] < dist[best]) best = x;
  }
  return best;
}

}  // namespace

Plan solve_unlabeled(const TreeView& view, const Configuration& config,
                     const std::vector<Vertex>& destinations) {
  const Tree& tree = view.tree();
  const int n = tree.size();
  std::vector<char> dest(n, 0);
  for (Vertex d : destinations) {
    if (!view.contains(d) || dest[d])
      throw Error(ErrorCode::InfeasibleAssumption, "bad destination " + std::to_string(d));
    if (view.is_transshipment(d))
      throw Error(ErrorCode::InfeasibleAssumption,
                  "destination " + std::to_string(d) + " is a trans-shipment vertex");
    dest[d] = 1;
  }
  int inside = 0;
  for (Vertex p : config.positions()) inside += view.contains(p) ? 1 : 0;
  if (inside != static_cast<int>(destinations.size()))
    throw Error(ErrorCode::InfeasibleAssumption,
                "unlabeled instance needs as many destinations as pebbles");

  Trace trace(config);
  TreeView cur = view;
  while (cur.size() > 0) {
    Vertex v = kNoVertex;
    for (Vertex x = 0; x < n && v == kNoVertex; ++x)
      if (cur.contains(x) && cur.degree(x) <= 1) v = x;
    const bool in_s = trace.config().has_pebble(v);
    if (dest[v] && !in_s) {
      Vertex w = nearest(cur, v, [&](Vertex x) { return trace.config().has_pebble(x); });
      if (w == kNoVertex) throw Error(ErrorCode::InternalStuck, "no pebble left for destination");
      trace.extend(move_pebble(cur, trace.config(), w, v));
    } else if (!dest[v] && in_s) {
      Vertex u = nearest(cur, v, [&](Vertex x) {
        return x != v && trace.config().is_hole(x) && cur.is_regular(x);
      });
      if (u == kNoVertex) throw Error(ErrorCode::InternalStuck, "no hole left to push into");
      trace.extend(bring_hole(cur, trace.config(), u, v));
    }
    cur = cur.without(v);
  }
  return trace.take_plan();
}

Plan gather_holes(const TreeView& view, const Configuration& config,
                  const std::vector<Vertex>& subtree) {
  const int n = view.tree().size();
  std::vector<char> in(n, 0);
  for (Vertex v : subtree) {
    if (!view.contains(v))
      throw Error(ErrorCode::NotConnectedSubtree, "vertex " + std::to_string(v) + " outside the tree");
    in[v] = 1;
  }
  if (!is_connected_set(view, subtree))
    throw Error(ErrorCode::NotConnectedSubtree, "gather target is not a connected subtree");

  int q = 0;
  int occupied = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!in[v]) continue;
    q += view.is_regular(v) ? 1 : 0;
    occupied += config.has_pebble(v) ? 1 : 0;
  }
  Trace trace(config);
  if (occupied == 0) return trace.take_plan();

  std::vector<Vertex> holes;
  for (Vertex v = 0; v < n; ++v)
    if (view.contains(v) && view.is_regular(v) && config.is_hole(v)) holes.push_back(v);
  if (static_cast<int>(holes.size()) < q)
    throw Error(ErrorCode::NotEnoughHoles, "need " + std::to_string(q) + " holes, tree has " +
                                               std::to_string(holes.size()));
  auto chosen = closest_subset(view, holes, subtree, q);

  // Nearest first: a hole still waiting is never strictly inside the path of
  // an earlier step, so its position stays valid.
  for (Vertex h : chosen) {
    if (in[h]) continue;
    Vertex u = nearest(view, h, [&](Vertex x) { return in[x] && trace.config().has_pebble(x); });
    if (u == kNoVertex) break;
    auto path = path_between(view.tree(), u, h);
    std::size_t wi = 0;
    for (std::size_t i = 0; i < path.size(); ++i)
      if (in[path[i]]) wi = i;
    if (wi == 0) {
      trace.extend(bring_hole(view, trace.config(), h, u));
    } else if (view.is_transshipment(path[wi])) {
      Vertex after = path[wi + 1];
      trace.extend(bring_hole(view, trace.config(), h, after));
      trace.extend(move_pebble(view, trace.config(), u, after));
    } else {
      trace.extend(move_pebble(view, trace.config(), u, path[wi]));
      trace.extend(bring_hole(view, trace.config(), h, path[wi]));
    }
  }
  for (Vertex v : subtree)
    if (trace.config().has_pebble(v))
      throw Error(ErrorCode::InternalStuck, "gather left a pebble on " + std::to_string(v));
  return trace.take_plan();
}

}  // namespace pmt
