#include "pmt/caterpillar.hpp"

#include <algorithm>

#include "pmt/unlabeled.hpp"

namespace pmt {

namespace {

// Off-route parking spot next to junction i: a regular neighbour, or a regular
// vertex behind a ts neighbour. Returns the path i..l.
std::vector<Vertex> parking_path(const TreeView& view, Vertex i, Vertex before, Vertex after) {
  Vertex direct = kNoVertex;
  std::vector<Vertex> via;
  view.for_each_neighbor(i, [&](Vertex w) {
    if (w == before || w == after) return;
    if (view.is_regular(w)) {
      if (direct == kNoVertex) direct = w;
    } else {
      via.push_back(w);
    }
  });
  if (direct != kNoVertex) return {i, direct};
  std::vector<Vertex> best;
  for (Vertex s : via)
    view.for_each_neighbor(s, [&](Vertex y) {
      if (y != i && (best.empty() || y < best.back())) best = {i, s, y};
    });
  return best;
}

void merge_into(std::vector<Vertex>& dst, const std::vector<Vertex>& src) {
  dst.insert(dst.end(), src.begin(), src.end());
}

int regular_holes(const TreeView& view, const Configuration& config) {
  int n = 0;
  for (Vertex v : view.vertices()) n += view.is_regular(v) && config.is_hole(v) ? 1 : 0;
  return n;
}

}  // namespace

CaterpillarDecomposition build_caterpillar_sets(const TreeView& view, const CorridorProfile& profile,
                                                Vertex r, Vertex t) {
  if (r == t) throw Error(ErrorCode::DegenerateGeometry, "caterpillar needs r != t");
  const auto route = path_between(view.tree(), r, t);
  const int last = static_cast<int>(route.size()) - 1;
  std::vector<int> reg(route.size() + 1, 0);  // reg[k] = regular vertices among route[0..k-1]
  for (int k = 0; k <= last; ++k) reg[k + 1] = reg[k] + (view.is_regular(route[k]) ? 1 : 0);
  auto dt = [&](int a, int b) { return reg[b + 1] - reg[a]; };
  const int ct = profile.c_tilde;

  std::vector<int> is, js;
  std::vector<std::vector<Vertex>> parks;
  is.push_back(1);
  parks.push_back({route[1], r});
  while (true) {
    const int i = is.back();
    if (dt(i, last) <= ct - 1) {
      js.push_back(last);
      break;
    }
    const int lo = js.empty() ? i : js.back();
    int j = -1, next = -1;
    for (int x = i; x <= last && next < 0; ++x) {
      if (dt(i, x) != ct - 2) continue;
      for (int y = x; y > lo; --y)
        if (view.degree(route[y]) > 2) {
          j = x;
          next = y;
          break;
        }
    }
    if (next < 0)
      throw Error(ErrorCode::DegenerateGeometry,
                  "no junction to continue the caterpillar after vertex " + std::to_string(route[i]));
    auto park = parking_path(view, route[next], route[next - 1], route[next + 1]);
    if (park.empty())
      throw Error(ErrorCode::DegenerateGeometry,
                  "junction " + std::to_string(route[next]) + " has no parking vertex");
    js.push_back(j);
    is.push_back(next);
    parks.push_back(std::move(park));
  }

  CaterpillarDecomposition out;
  const std::size_t steps = is.size();
  for (std::size_t k = 0; k < steps; ++k) {
    out.triples.push_back({route[is[k]], route[js[k]], parks[k].back()});
    std::vector<Vertex> s(route.begin() + is[k], route.begin() + js[k] + 1);
    merge_into(s, parks[k]);
    if (k + 1 < steps) merge_into(s, parks[k + 1]);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    out.sets.push_back(std::move(s));
  }
  return out;
}

int target_side_holes(const TreeView& view, const Configuration& config, Vertex r, Vertex t) {
  return regular_holes(forest_component(view, r, t), config);
}

Plan procedure_a(const TreeView& view, const CorridorProfile& profile, const Configuration& config,
                 PebbleId pebble, Vertex t) {
  const Vertex r = config.position(pebble);
  Trace tr(config);
  if (r == t) return tr.take_plan();
  TreeView side = forest_component(view, r, t);
  if (regular_holes(side, config) < profile.required_regular_holes())
    throw Error(ErrorCode::PreconditionHoleDeficit, "target side lacks holes for Case A");

  const auto cat = build_caterpillar_sets(view, profile, r, t);
  const int m = cat.m();
  auto minus = [](std::vector<Vertex> s, Vertex x) {
    s.erase(std::remove(s.begin(), s.end(), x), s.end());
    return s;
  };

  tr.extend(gather_holes(side, tr.config(), minus(cat.sets[0], r)));
  Vertex at = r;
  Vertex next = m == 0 ? t : cat.triples[1].parking;
  tr.extend(move_pebble(view, tr.config(), at, next));
  at = next;
  for (int k = 0; k < m; ++k) {
    std::vector<Vertex> both = cat.sets[k];
    merge_into(both, cat.sets[k + 1]);
    TreeView slide = view.restricted(minus(both, at));
    tr.extend(gather_holes(slide, tr.config(), minus(cat.sets[k + 1], at)));
    next = k + 1 == m ? t : cat.triples[k + 2].parking;
    tr.extend(move_pebble(view, tr.config(), at, next));
    at = next;
  }
  return tr.take_plan();
}

Relocation relocate_for_holes(const TreeView& view, const CorridorProfile& profile,
                              const Configuration& config, PebbleId pebble, Vertex t) {
  const Vertex r = config.position(pebble);
  Relocation out;
  out.parking = r;
  int deficit = profile.required_regular_holes() - target_side_holes(view, config, r, t);
  if (deficit <= 0) return out;

  const Vertex toward_t = path_between(view.tree(), r, t)[1];
  Trace tr(config);
  for (Vertex z : view.neighbors(r)) {
    if (deficit == 0) break;
    if (z == toward_t) continue;
    TreeView sub = forest_component(view, r, z);
    std::vector<Vertex> regular;
    int holes = 0;
    for (Vertex v : sub.vertices()) {
      if (!sub.is_regular(v)) continue;
      regular.push_back(v);
      holes += tr.config().is_hole(v) ? 1 : 0;
    }
    const int take = std::min(holes, deficit);
    if (take == 0) continue;
    auto chosen = closest_subset(view, regular, {r}, take);
    std::vector<Vertex> closure;
    for (Vertex h : chosen) merge_into(closure, path_between(view.tree(), z, h));
    std::sort(closure.begin(), closure.end());
    closure.erase(std::unique(closure.begin(), closure.end()), closure.end());
    tr.extend(gather_holes(sub, tr.config(), closure));
    deficit -= take;
    out.hole_sets.push_back(std::move(chosen));
  }
  if (deficit > 0)
    throw Error(ErrorCode::InfeasibleAssumption,
                "not enough holes to free the route of pebble " + std::to_string(pebble));

  // closest_subset orders by distance then id, so the farthest vertex with the
  // lowest id is the first one at the last distance.
  const auto& last = out.hole_sets.back();
  const int far = distance(view.tree(), r, last.back());
  for (Vertex h : last)
    if (distance(view.tree(), r, h) == far) {
      out.parking = h;
      break;
    }
  tr.extend(move_pebble(view, tr.config(), r, out.parking));
  out.plan = tr.take_plan();
  return out;
}

Plan procedure_b(const TreeView& view, const CorridorProfile& profile, const Configuration& config,
                 PebbleId pebble, Vertex t) {
  Relocation rel = relocate_for_holes(view, profile, config, pebble, t);
  Trace tr(config);
  tr.extend(rel.plan);
  tr.extend(procedure_a(view, profile, tr.config(), pebble, t));
  return tr.take_plan();
}

Plan solve_motion_planning(const TreeView& input, const Configuration& config, PebbleId pebble,
                           Vertex t) {
  if (pebble < 0 || pebble >= config.pebble_count())
    throw Error(ErrorCode::InvalidConfiguration, "no pebble " + std::to_string(pebble));
  const Vertex r = config.position(pebble);
  if (!input.contains(r) || !input.contains(t))
    throw Error(ErrorCode::InvalidConfiguration, "pebble or target outside the tree");
  if (input.is_transshipment(t))
    throw Error(ErrorCode::TargetIsTransShipment,
                "target " + std::to_string(t) + " is a trans-shipment vertex");
  if (r == t) return {};
  const TreeView view = input.normalized();
  const CorridorProfile profile = analyze(view);
  if (regular_holes(view, config) < profile.required_regular_holes())
    throw Error(ErrorCode::InfeasibleAssumption, "too few holes for motion planning");
  if (profile.path_graph) return move_pebble(view, config, r, t);
  if (target_side_holes(view, config, r, t) >= profile.required_regular_holes())
    return procedure_a(view, profile, config, pebble, t);
  return procedure_b(view, profile, config, pebble, t);
}

}  // namespace pmt
