#include "pmt/oracle.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace pmt {

namespace {

using Key = std::string;  // one char per pebble slot

struct Node {
  Key key;
  int parent;
  Move first;
  Move second;  // from == kNoVertex when the transition is a single move
  std::size_t cost;
};

class StateSpace {
 public:
  StateSpace(const Instance& inst) : inst_(inst), ts_(inst.variant == Variant::TransShipment) {}

  Key canonical(std::vector<Vertex> pos) const {
    switch (inst_.kind) {
      case ProblemKind::Unlabeled:
      case ProblemKind::Gather:
        std::sort(pos.begin(), pos.end());
        break;
      case ProblemKind::Motion:
        if (!pos.empty()) {
          std::swap(pos[0], pos[inst_.marked]);
          std::sort(pos.begin() + 1, pos.end());
        }
        break;
      case ProblemKind::Pmt:
        break;
    }
    return Key(pos.begin(), pos.end());
  }

  bool goal(const Key& k) const {
    switch (inst_.kind) {
      case ProblemKind::Pmt:
        for (std::size_t i = 0; i < k.size(); ++i)
          if (static_cast<unsigned char>(k[i]) != inst_.target.position(static_cast<PebbleId>(i))) return false;
        return true;
      case ProblemKind::Unlabeled: {
        std::vector<Vertex> d = inst_.destinations;
        std::sort(d.begin(), d.end());
        return Key(d.begin(), d.end()) == k;
      }
      case ProblemKind::Motion:
        return !k.empty() && static_cast<unsigned char>(k[0]) == inst_.goal;
      case ProblemKind::Gather:
        for (char c : k)
          if (std::find(inst_.subtree.begin(), inst_.subtree.end(), static_cast<unsigned char>(c)) !=
              inst_.subtree.end())
            return false;
        return true;
    }
    return false;
  }

  // Calls f(successor positions, first move, second move, cost).
  template <class F>
  void expand(const Key& k, F&& f) const {
    const Tree& tree = inst_.tree;
    std::vector<Vertex> pos(k.begin(), k.end());
    for (auto& v : pos) v = static_cast<unsigned char>(v);
    std::vector<char> occ(tree.size(), 0);
    for (Vertex v : pos) occ[v] = 1;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      const Vertex u = pos[i];
      for (Vertex x : tree.neighbors(u)) {
        if (occ[x]) continue;
        if (ts_ && tree.is_transshipment(x)) {
          for (Vertex y : tree.neighbors(x)) {
            if (y == u || occ[y]) continue;
            pos[i] = y;
            f(pos, Move{u, x}, Move{x, y}, 2);
          }
        } else {
          pos[i] = x;
          f(pos, Move{u, x}, Move{}, 1);
        }
        pos[i] = u;
      }
    }
  }

 private:
  const Instance& inst_;
  bool ts_;
};

}  // namespace

bool check_assumption(const Instance& inst) {
  return hole_requirement_met(inst.tree, inst.variant, inst.start);
}

OracleResult bfs_solve(const Instance& inst, const OracleLimits& limits) {
  OracleResult res;
  if (inst.tree.size() > 255) return res;
  StateSpace space(inst);
  std::vector<Node> nodes;
  std::unordered_map<Key, std::size_t> best;  // settled or queued cost
  std::vector<std::vector<int>> buckets(1);

  Key start = space.canonical(inst.start.positions());
  nodes.push_back({start, -1, {}, {}, 0});
  best[start] = 0;
  buckets[0].push_back(0);
  bool truncated = false;
  int found = -1;

  for (std::size_t cost = 0; cost < buckets.size() && found < 0; ++cost) {
    for (std::size_t b = 0; b < buckets[cost].size() && found < 0; ++b) {
      const int id = buckets[cost][b];
      if (best[nodes[id].key] < cost) continue;  // stale entry
      if (space.goal(nodes[id].key)) {
        found = id;
        break;
      }
      if (cost >= limits.max_depth) {
        truncated = true;
        continue;
      }
      space.expand(nodes[id].key, [&](const std::vector<Vertex>& pos, Move a, Move b2, std::size_t w) {
        Key nk = space.canonical(pos);
        const std::size_t nc = cost + w;
        auto it = best.find(nk);
        if (it != best.end() && it->second <= nc) return;
        if (nodes.size() >= limits.max_states) {
          truncated = true;
          return;
        }
        best[nk] = nc;
        nodes.push_back({std::move(nk), id, a, b2, nc});
        if (buckets.size() <= nc) buckets.resize(nc + 1);
        buckets[nc].push_back(static_cast<int>(nodes.size()) - 1);
      });
    }
  }
  res.states = nodes.size();
  if (found < 0) {
    res.status = truncated ? OracleStatus::LimitExceeded : OracleStatus::Infeasible;
    return res;
  }
  std::vector<Move> rev;
  for (int id = found; nodes[id].parent >= 0; id = nodes[id].parent) {
    if (nodes[id].second.from != kNoVertex) rev.push_back(nodes[id].second);
    rev.push_back(nodes[id].first);
  }
  res.plan.moves.assign(rev.rbegin(), rev.rend());
  res.status = OracleStatus::Optimal;
  return res;
}

std::set<std::vector<Vertex>> reachable_configurations(const Tree& tree, Variant variant,
                                                       const Configuration& start,
                                                       std::size_t max_states) {
  Instance inst;
  inst.tree = tree;
  inst.variant = variant;
  inst.kind = ProblemKind::Pmt;
  inst.start = start;
  StateSpace space(inst);
  std::set<std::vector<Vertex>> seen;
  std::vector<std::vector<Vertex>> queue{start.positions()};
  seen.insert(start.positions());
  for (std::size_t head = 0; head < queue.size() && seen.size() < max_states; ++head) {
    const auto cur = queue[head];
    space.expand(Key(cur.begin(), cur.end()), [&](const std::vector<Vertex>& pos, Move, Move, std::size_t) {
      if (seen.insert(pos).second) queue.push_back(pos);
    });
  }
  return seen;
}

}  // namespace pmt
