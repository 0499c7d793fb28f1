#include "pmt/tree.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pmt/error.hpp"

namespace pmt {

const char* to_string(Variant v) { return v == Variant::TransShipment ? "ts" : "plain"; }

Tree::Tree(int n, const std::vector<Edge>& edges, const std::vector<Vertex>& transshipment) {
  if (n < 1) throw Error(ErrorCode::InvalidTree, "tree needs at least one vertex");
  if (static_cast<int>(edges.size()) != n - 1)
    throw Error(ErrorCode::InvalidTree, "tree on " + std::to_string(n) + " vertices needs " +
                                            std::to_string(n - 1) + " edges, got " +
                                            std::to_string(edges.size()));
  adj_.assign(n, {});
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw Error(ErrorCode::InvalidTree,
                  "bad edge " + std::to_string(a) + "-" + std::to_string(b));
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw Error(ErrorCode::InvalidTree, "duplicate edge");
  }

  parent_.assign(n, kNoVertex);
  depth_.assign(n, -1);
  std::vector<Vertex> queue{0};
  depth_[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : adj_[u]) {
      if (depth_[w] >= 0) continue;
      depth_[w] = depth_[u] + 1;
      parent_[w] = u;
      queue.push_back(w);
    }
  }
  if (static_cast<int>(queue.size()) != n) throw Error(ErrorCode::InvalidTree, "tree is not connected");

  kind_.assign(n, VertexKind::Regular);
  for (Vertex s : transshipment) {
    if (!valid(s)) throw Error(ErrorCode::InvalidTree, "trans-shipment id out of range");
    if (kind_[s] == VertexKind::TransShipment)
      throw Error(ErrorCode::InvalidTree, "trans-shipment vertex listed twice");
    if (degree(s) < 2)
      throw Error(ErrorCode::InvalidTree,
                  "trans-shipment vertex " + std::to_string(s) + " has degree < 2");
    kind_[s] = VertexKind::TransShipment;
  }
  for (Vertex s : transshipment)
    for (Vertex w : adj_[s])
      if (kind_[w] == VertexKind::TransShipment)
        throw Error(ErrorCode::InvalidTree, "adjacent trans-shipment vertices " +
                                                std::to_string(s) + "," + std::to_string(w));
  ts_ = transshipment;
  std::sort(ts_.begin(), ts_.end());
}

bool Tree::adjacent(Vertex a, Vertex b) const {
  if (!valid(a) || !valid(b)) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex w : adj_[u])
      if (u < w) out.emplace_back(u, w);
  return out;
}

TreeView::TreeView(const Tree& tree, Variant variant)
    : tree_(&tree), variant_(variant), mask_(tree.size(), 1), size_(tree.size()) {}

TreeView::TreeView(const Tree& tree, Variant variant, std::vector<char> mask)
    : tree_(&tree), variant_(variant), mask_(std::move(mask)) {
  mask_.resize(tree.size(), 0);
  size_ = static_cast<int>(std::count_if(mask_.begin(), mask_.end(), [](char c) { return c != 0; }));
}

int TreeView::degree(Vertex v) const {
  int d = 0;
  for (Vertex w : tree_->neighbors(v)) d += mask_[w] ? 1 : 0;
  return d;
}

std::vector<Vertex> TreeView::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for_each_neighbor(v, [&](Vertex w) { out.push_back(w); });
  return out;
}

std::vector<Vertex> TreeView::vertices() const {
  std::vector<Vertex> out;
  out.reserve(size_);
  for (Vertex v = 0; v < tree_->size(); ++v)
    if (mask_[v]) out.push_back(v);
  return out;
}

int TreeView::regular_count() const {
  int n = 0;
  for (Vertex v = 0; v < tree_->size(); ++v)
    if (mask_[v] && is_regular(v)) ++n;
  return n;
}

TreeView TreeView::without(Vertex v) const {
  auto m = mask_;
  if (tree_->valid(v)) m[v] = 0;
  return TreeView(*tree_, variant_, std::move(m));
}

TreeView TreeView::restricted(const std::vector<Vertex>& keep) const {
  std::vector<char> m(tree_->size(), 0);
  for (Vertex v : keep)
    if (contains(v)) m[v] = 1;
  return TreeView(*tree_, variant_, std::move(m));
}

TreeView TreeView::normalized() const {
  if (variant_ != Variant::TransShipment) return *this;
  auto m = mask_;
  std::vector<Vertex> stack;
  TreeView probe(*tree_, variant_, m);
  for (Vertex s : tree_->transshipment_vertices())
    if (m[s] && probe.degree(s) <= 1) stack.push_back(s);
  // A ts vertex only loses neighbours when a neighbouring ts vertex is dropped,
  // which cannot happen (ts vertices are never adjacent), so one pass suffices.
  for (Vertex s : stack) m[s] = 0;
  return TreeView(*tree_, variant_, std::move(m));
}

bool TreeView::is_connected() const { return is_connected_set(*this, vertices()); }

std::vector<Vertex> path_between(const Tree& tree, Vertex a, Vertex b) {
  std::vector<Vertex> front, back;
  while (tree.depth(a) > tree.depth(b)) {
    front.push_back(a);
    a = tree.parent(a);
  }
  while (tree.depth(b) > tree.depth(a)) {
    back.push_back(b);
    b = tree.parent(b);
  }
  while (a != b) {
    front.push_back(a);
    back.push_back(b);
    a = tree.parent(a);
    b = tree.parent(b);
  }
  front.push_back(a);
  front.insert(front.end(), back.rbegin(), back.rend());
  return front;
}

int distance(const Tree& tree, Vertex a, Vertex b) {
  int d = 0;
  while (a != b) {
    if (tree.depth(a) >= tree.depth(b))
      a = tree.parent(a);
    else
      b = tree.parent(b);
    ++d;
  }
  return d;
}

int regular_distance(const TreeView& view, Vertex a, Vertex b) {
  int n = 0;
  for (Vertex v : path_between(view.tree(), a, b)) n += view.is_regular(v) ? 1 : 0;
  return n;
}

std::vector<Vertex> forest_component(const Tree& tree, Vertex removed, Vertex anchor) {
  TreeView full(tree);
  return forest_component(full, removed, anchor).vertices();
}

TreeView forest_component(const TreeView& view, Vertex removed, Vertex anchor) {
  const Tree& tree = view.tree();
  std::vector<char> m(tree.size(), 0);
  if (!view.contains(anchor) || anchor == removed) return TreeView(tree, view.variant(), std::move(m));
  std::vector<Vertex> stack{anchor};
  m[anchor] = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    view.for_each_neighbor(u, [&](Vertex w) {
      if (w == removed || m[w]) return;
      m[w] = 1;
      stack.push_back(w);
    });
  }
  return TreeView(tree, view.variant(), std::move(m));
}

std::vector<int> distances_from(const TreeView& view, const std::vector<Vertex>& sources) {
  std::vector<int> dist(view.tree().size(), -1);
  std::vector<Vertex> queue;
  for (Vertex s : sources) {
    if (view.contains(s) && dist[s] < 0) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    view.for_each_neighbor(u, [&](Vertex w) {
      if (dist[w] >= 0) return;
      dist[w] = dist[u] + 1;
      queue.push_back(w);
    });
  }
  return dist;
}

std::vector<Vertex> closest_subset(const TreeView& view, const std::vector<Vertex>& candidates,
                                   const std::vector<Vertex>& anchors, int q) {
  if (q < 0 || q > static_cast<int>(candidates.size()))
    throw Error(ErrorCode::InsufficientCandidates,
                "asked for " + std::to_string(q) + " of " + std::to_string(candidates.size()) +
                    " candidates");
  auto dist = distances_from(view, anchors);
  std::vector<std::pair<int, Vertex>> order;
  order.reserve(candidates.size());
  for (Vertex v : candidates) {
    int d = view.contains(v) ? dist[v] : -1;
    if (d < 0)
      throw Error(ErrorCode::InsufficientCandidates,
                  "candidate " + std::to_string(v) + " unreachable from anchors");
    order.emplace_back(d, v);
  }
  std::sort(order.begin(), order.end());
  std::vector<Vertex> out;
  out.reserve(q);
  for (int i = 0; i < q; ++i) out.push_back(order[i].second);
  return out;
}

bool is_connected_set(const TreeView& view, const std::vector<Vertex>& set) {
  if (set.empty()) return true;
  std::vector<char> in(view.tree().size(), 0);
  for (Vertex v : set) {
    if (!view.contains(v)) return false;
    in[v] = 1;
  }
  std::vector<char> seen(view.tree().size(), 0);
  std::vector<Vertex> stack{set.front()};
  seen[set.front()] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : view.tree().neighbors(u)) {
      if (!in[w] || seen[w]) continue;
      seen[w] = 1;
      ++reached;
      stack.push_back(w);
    }
  }
  std::size_t distinct = static_cast<std::size_t>(std::count(in.begin(), in.end(), 1));
  return reached == distinct;
}

namespace {

std::pair<Vertex, int> farthest(const TreeView& view, Vertex from) {
  auto dist = distances_from(view, {from});
  Vertex best = from;
  for (Vertex v = 0; v < static_cast<Vertex>(dist.size()); ++v)
    if (dist[v] > dist[best]) best = v;
  return {best, dist[best]};
}

}  // namespace

CorridorProfile analyze(const Tree& tree, Variant variant) { return analyze(TreeView(tree, variant)); }

CorridorProfile analyze(const TreeView& view) {
  CorridorProfile p;
  const Tree& tree = view.tree();
  const int n = tree.size();
  std::vector<int> deg(n, 0);
  Vertex any = kNoVertex;
  for (Vertex v = 0; v < n; ++v) {
    if (!view.contains(v)) continue;
    if (any == kNoVertex) any = v;
    deg[v] = view.degree(v);
    if (deg[v] > 2) p.junctions.push_back(v);
  }
  if (any == kNoVertex) return p;
  p.path_graph = p.junctions.empty();

  for (Vertex e = 0; e < n; ++e) {
    if (!view.contains(e) || deg[e] == 2) continue;
    view.for_each_neighbor(e, [&](Vertex first) {
      Corridor cor;
      cor.vertices = {e, first};
      Vertex prev = e, cur = first;
      while (deg[cur] == 2) {
        Vertex next = kNoVertex;
        view.for_each_neighbor(cur, [&](Vertex w) {
          if (w != prev) next = w;
        });
        prev = cur;
        cur = next;
        cor.vertices.push_back(cur);
      }
      if (e > cur) return;  // each corridor is walked from both ends; keep one
      for (Vertex v : cor.vertices) cor.regular_length += view.is_regular(v) ? 1 : 0;
      cor.between_junctions = deg[e] > 2 && deg[cur] > 2;
      p.corridors.push_back(std::move(cor));
    });
  }

  for (std::size_t i = 0; i < p.corridors.size(); ++i) {
    const Corridor& cor = p.corridors[i];
    p.c1 = std::max(p.c1, cor.length());
    p.c1_tilde = std::max(p.c1_tilde, cor.regular_length);
    if (cor.between_junctions) {
      p.junction_corridors.push_back(i);
      p.c2 = std::max(p.c2, cor.length());
      p.c2_tilde = std::max(p.c2_tilde, cor.regular_length);
    }
  }
  if (p.corridors.empty()) p.c1_tilde = view.is_regular(any) ? 1 : 0;  // single vertex

  if (p.path_graph) {
    p.c = p.c1;
    p.c_tilde = p.c1_tilde;
  } else {
    p.c = std::max(p.c1 + 1, p.c2 + 2);
    p.c_tilde = std::max(p.c1_tilde + 1, p.c2_tilde + 2);
  }
  auto [end, ignored] = farthest(view, any);
  p.diameter = farthest(view, end).second;
  return p;
}

}  // namespace pmt
