#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pmt/error.hpp"
#include "pmt/tree.hpp"

namespace pmt {

using PebbleId = int;
inline constexpr PebbleId kHole = -1;

/// Pebble placement. Pebble ids are 0..k-1; everything else is a hole.
/// Holes are anonymous, so equality compares pebble positions only.
class Configuration {
 public:
  Configuration() = default;
  Configuration(int vertex_count, std::vector<Vertex> positions);

  int vertex_count() const { return static_cast<int>(occupant_.size()); }
  int pebble_count() const { return static_cast<int>(position_.size()); }
  int hole_count() const { return vertex_count() - pebble_count(); }

  PebbleId occupant(Vertex v) const { return occupant_[v]; }
  bool is_hole(Vertex v) const { return occupant_[v] == kHole; }
  bool has_pebble(Vertex v) const { return occupant_[v] != kHole; }
  Vertex position(PebbleId p) const { return position_[p]; }
  const std::vector<Vertex>& positions() const { return position_; }

  /// Exchanges the occupants of a and b (the A[u,v] update). No legality checks.
  void swap(Vertex a, Vertex b);

  bool operator==(const Configuration& o) const {
    return position_ == o.position_ && occupant_.size() == o.occupant_.size();
  }
  bool operator!=(const Configuration& o) const { return !(*this == o); }

 private:
  std::vector<PebbleId> occupant_;
  std::vector<Vertex> position_;
};

struct Move {
  Vertex from = kNoVertex;
  Vertex to = kNoVertex;
  bool operator==(const Move& o) const { return from == o.from && to == o.to; }
};

struct Plan {
  std::vector<Move> moves;

  std::size_t size() const { return moves.size(); }
  bool empty() const { return moves.empty(); }
  void push_back(Vertex from, Vertex to) { moves.push_back({from, to}); }
  void append(const Plan& other) { moves.insert(moves.end(), other.moves.begin(), other.moves.end()); }
  bool operator==(const Plan& o) const { return moves == o.moves; }
};

Configuration apply_move(const Tree& tree, const Configuration& config, Move move);

struct ValidationReport {
  bool legal = true;
  std::size_t failed_at = 0;
  ErrorCode cause = ErrorCode::ValidationFailed;
  std::string message;
  std::size_t length = 0;
  std::vector<int> crossings;
  Configuration final_config;  // after the legal prefix
};

/// Replays the plan without throwing and reports the first violation.
ValidationReport replay(const Tree& tree, const Configuration& config, const Plan& plan,
                        Variant variant);
/// Throws PlanError at the first illegal move.
Configuration apply_plan(const Tree& tree, const Configuration& config, const Plan& plan,
                         Variant variant);

Plan reverse_plan(const Plan& plan);

/// alpha_vw: shifts every pebble on the path v..w one (regular) slot toward w,
/// leaving v empty. w must hold a hole.
Plan bring_hole(const TreeView& view, const Configuration& config, Vertex w, Vertex v);
/// beta_vw: walks the pebble at v to w along an empty path.
Plan move_pebble(const TreeView& view, const Configuration& config, Vertex v, Vertex w);

std::vector<int> vertex_crossings(const Plan& plan, int vertex_count);
int max_crossing(const Plan& plan, int vertex_count);

/// A plan being built together with the configuration it leads to.
/// Every step is checked; a broken step is an internal error.
class Trace {
 public:
  explicit Trace(Configuration start) : config_(std::move(start)) {}

  const Configuration& config() const { return config_; }
  const Plan& plan() const { return plan_; }
  Plan take_plan() { return std::move(plan_); }

  void step(Vertex from, Vertex to);
  void extend(const Plan& p);

 private:
  Configuration config_;
  Plan plan_;
};

}  // namespace pmt
