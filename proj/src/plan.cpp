#include "pmt/plan.hpp"

#include <algorithm>

namespace pmt {

namespace {

std::string move_text(Move m) { return std::to_string(m.from) + " -> " + std::to_string(m.to); }

}  // namespace

Configuration::Configuration(int vertex_count, std::vector<Vertex> positions)
    : occupant_(vertex_count, kHole), position_(std::move(positions)) {
  for (PebbleId p = 0; p < pebble_count(); ++p) {
    Vertex v = position_[p];
    if (v < 0 || v >= vertex_count)
      throw Error(ErrorCode::InvalidConfiguration,
                  "pebble " + std::to_string(p) + " on invalid vertex " + std::to_string(v));
    if (occupant_[v] != kHole)
      throw Error(ErrorCode::InvalidConfiguration, "two pebbles on vertex " + std::to_string(v));
    occupant_[v] = p;
  }
}

void Configuration::swap(Vertex a, Vertex b) {
  std::swap(occupant_[a], occupant_[b]);
  if (occupant_[a] != kHole) position_[occupant_[a]] = a;
  if (occupant_[b] != kHole) position_[occupant_[b]] = b;
}

Configuration apply_move(const Tree& tree, const Configuration& config, Move move) {
  if (!tree.adjacent(move.from, move.to))
    throw Error(ErrorCode::NonAdjacent, "not an edge: " + move_text(move));
  if (config.has_pebble(move.to))
    throw Error(ErrorCode::DestinationOccupied, "destination occupied: " + move_text(move));
  Configuration out = config;
  out.swap(move.from, move.to);
  return out;
}

ValidationReport replay(const Tree& tree, const Configuration& config, const Plan& plan,
                        Variant variant) {
  ValidationReport r;
  r.final_config = config;
  r.crossings.assign(tree.size(), 0);
  const bool ts = variant == Variant::TransShipment;
  auto fail = [&](std::size_t i, ErrorCode cause, std::string msg) {
    r.legal = false;
    r.failed_at = i;
    r.cause = cause;
    r.message = "move " + std::to_string(i) + ": " + msg;
    return r;
  };
  if (config.vertex_count() != tree.size())
    return fail(0, ErrorCode::InvalidConfiguration, "configuration size does not match tree");
  if (ts)
    for (Vertex s : tree.transshipment_vertices())
      if (config.has_pebble(s))
        return fail(0, ErrorCode::PebbleRestsOnTransShipment,
                    "start has a pebble on trans-shipment vertex " + std::to_string(s));

  Configuration& cur = r.final_config;
  Vertex pending = kNoVertex;  // ts vertex holding a pebble in transit
  std::size_t pending_since = 0;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    Move m = plan.moves[i];
    if (pending != kNoVertex && m.from != pending)
      return fail(pending_since, ErrorCode::PebbleRestsOnTransShipment,
                  "pebble left at rest on trans-shipment vertex " + std::to_string(pending));
    if (!tree.valid(m.from) || !tree.valid(m.to) || !tree.adjacent(m.from, m.to))
      return fail(i, ErrorCode::NonAdjacent, "not an edge: " + move_text(m));
    if (cur.has_pebble(m.to))
      return fail(i, ErrorCode::DestinationOccupied, "destination occupied: " + move_text(m));
    bool carries = cur.has_pebble(m.from);
    cur.swap(m.from, m.to);
    ++r.crossings[m.to];
    pending = kNoVertex;
    if (ts && carries && tree.is_transshipment(m.to)) {
      pending = m.to;
      pending_since = i;
    }
    r.length = i + 1;
  }
  if (pending != kNoVertex)
    return fail(pending_since, ErrorCode::PebbleRestsOnTransShipment,
                "plan ends with a pebble on trans-shipment vertex " + std::to_string(pending));
  return r;
}

Configuration apply_plan(const Tree& tree, const Configuration& config, const Plan& plan,
                         Variant variant) {
  ValidationReport r = replay(tree, config, plan, variant);
  if (!r.legal) throw PlanError(r.cause, r.failed_at, r.message);
  return std::move(r.final_config);
}

Plan reverse_plan(const Plan& plan) {
  Plan out;
  out.moves.reserve(plan.size());
  for (auto it = plan.moves.rbegin(); it != plan.moves.rend(); ++it) out.push_back(it->to, it->from);
  return out;
}

Plan bring_hole(const TreeView& view, const Configuration& config, Vertex w, Vertex v) {
  if (config.has_pebble(w))
    throw Error(ErrorCode::SourceNotHole, "bring_hole: vertex " + std::to_string(w) + " is occupied");
  if (view.is_transshipment(w))
    throw Error(ErrorCode::TransShipmentSource,
                "bring_hole: cannot take a hole from trans-shipment vertex " + std::to_string(w));
  Plan plan;
  if (v == w) return plan;
  auto path = path_between(view.tree(), v, w);
  std::vector<char> full(path.size(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) full[i] = config.has_pebble(path[i]) ? 1 : 0;
  for (std::size_t j = path.size() - 1; j-- > 0;) {
    if (!full[j]) continue;
    std::size_t to = j + 1;
    plan.push_back(path[j], path[to]);
    if (view.is_transshipment(path[to])) {
      plan.push_back(path[to], path[to + 1]);  // to + 1 exists: w is regular
      ++to;
    }
    full[j] = 0;
    full[to] = 1;
  }
  return plan;
}

Plan move_pebble(const TreeView& view, const Configuration& config, Vertex v, Vertex w) {
  Plan plan;
  if (v == w) return plan;
  if (config.is_hole(v))
    throw Error(ErrorCode::InvalidConfiguration, "move_pebble: no pebble at " + std::to_string(v));
  if (view.is_transshipment(w))
    throw Error(ErrorCode::TransShipmentTarget,
                "move_pebble: target " + std::to_string(w) + " is a trans-shipment vertex");
  auto path = path_between(view.tree(), v, w);
  for (std::size_t i = 1; i < path.size(); ++i)
    if (config.has_pebble(path[i]))
      throw Error(ErrorCode::PathBlocked, "move_pebble: vertex " + std::to_string(path[i]) +
                                              " on the path is occupied");
  for (std::size_t i = 0; i + 1 < path.size(); ++i) plan.push_back(path[i], path[i + 1]);
  return plan;
}

std::vector<int> vertex_crossings(const Plan& plan, int vertex_count) {
  std::vector<int> c(vertex_count, 0);
  for (const Move& m : plan.moves)
    if (m.to >= 0 && m.to < vertex_count) ++c[m.to];
  return c;
}

int max_crossing(const Plan& plan, int vertex_count) {
  auto c = vertex_crossings(plan, vertex_count);
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end());
}

void Trace::step(Vertex from, Vertex to) {
  if (config_.has_pebble(to))
    throw Error(ErrorCode::InternalStuck, "internal move into occupied vertex " + move_text({from, to}));
  config_.swap(from, to);
  plan_.push_back(from, to);
}

void Trace::extend(const Plan& p) {
  for (const Move& m : p.moves) step(m.from, m.to);
}

}  // namespace pmt
