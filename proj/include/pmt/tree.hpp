#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace pmt {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
inline constexpr Vertex kNoVertex = -1;

enum class VertexKind : unsigned char { Regular, TransShipment };
enum class Variant : unsigned char { Plain, TransShipment };

const char* to_string(Variant v);

/// Undirected tree on vertices 0..n-1. Immutable after construction.
/// Also keeps a rooting at vertex 0 so paths can be read off by climbing.
class Tree {
 public:
  Tree() = default;
  Tree(int n, const std::vector<Edge>& edges, const std::vector<Vertex>& transshipment = {});

  int size() const { return static_cast<int>(adj_.size()); }
  bool valid(Vertex v) const { return v >= 0 && v < size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(Vertex a, Vertex b) const;

  VertexKind kind(Vertex v) const { return kind_[v]; }
  bool is_transshipment(Vertex v) const { return kind_[v] == VertexKind::TransShipment; }
  const std::vector<Vertex>& transshipment_vertices() const { return ts_; }

  /// Edges as (min, max) pairs in increasing order.
  std::vector<Edge> edges() const;

  Vertex parent(Vertex v) const { return parent_[v]; }
  int depth(Vertex v) const { return depth_[v]; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexKind> kind_;
  std::vector<Vertex> ts_;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
};

/// A connected vertex subset of a tree, plus the variant that decides whether
/// trans-shipment vertices count as such. Paths inside a view are tree paths.
/// The referenced Tree must outlive the view.
class TreeView {
 public:
  explicit TreeView(const Tree& tree, Variant variant = Variant::Plain);
  TreeView(const Tree& tree, Variant variant, std::vector<char> mask);

  const Tree& tree() const { return *tree_; }
  Variant variant() const { return variant_; }
  const std::vector<char>& mask() const { return mask_; }

  bool contains(Vertex v) const { return tree_->valid(v) && mask_[v] != 0; }
  int size() const { return size_; }
  int degree(Vertex v) const;
  bool is_transshipment(Vertex v) const {
    return variant_ == Variant::TransShipment && tree_->is_transshipment(v);
  }
  bool is_regular(Vertex v) const { return !is_transshipment(v); }

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    for (Vertex w : tree_->neighbors(v))
      if (mask_[w]) f(w);
  }
  std::vector<Vertex> neighbors(Vertex v) const;
  std::vector<Vertex> vertices() const;
  int regular_count() const;

  TreeView without(Vertex v) const;
  TreeView restricted(const std::vector<Vertex>& keep) const;
  /// Drops trans-shipment vertices of view degree <= 1, repeatedly.
  TreeView normalized() const;
  bool is_connected() const;

 private:
  const Tree* tree_;
  Variant variant_;
  std::vector<char> mask_;
  int size_ = 0;
};

struct Corridor {
  std::vector<Vertex> vertices;  // endpoint, interior..., endpoint
  int regular_length = 0;        // regular vertices on the corridor
  bool between_junctions = false;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

struct CorridorProfile {
  std::vector<Corridor> corridors;
  std::vector<std::size_t> junction_corridors;  // indices into corridors
  std::vector<Vertex> junctions;
  bool path_graph = true;
  int c1 = 0;
  int c2 = 0;
  int c = 0;
  int c1_tilde = 0;
  int c2_tilde = 0;
  int c_tilde = 0;
  int diameter = 0;

  /// Holes needed on regular vertices: c in plain, c~ - 1 in general.
  int required_regular_holes() const { return c_tilde > 0 ? c_tilde - 1 : 0; }
};

CorridorProfile analyze(const TreeView& view);
CorridorProfile analyze(const Tree& tree, Variant variant = Variant::Plain);

std::vector<Vertex> path_between(const Tree& tree, Vertex a, Vertex b);
int distance(const Tree& tree, Vertex a, Vertex b);
/// Regular vertices on the path a..b, endpoints included.
int regular_distance(const TreeView& view, Vertex a, Vertex b);

/// T(F(removed), anchor): component of tree - removed containing anchor.
std::vector<Vertex> forest_component(const Tree& tree, Vertex removed, Vertex anchor);
TreeView forest_component(const TreeView& view, Vertex removed, Vertex anchor);

/// Multi-source BFS distances inside the view; -1 where unreachable.
std::vector<int> distances_from(const TreeView& view, const std::vector<Vertex>& sources);

/// The q candidates nearest to the anchor set, ordered by (distance, id).
std::vector<Vertex> closest_subset(const TreeView& view, const std::vector<Vertex>& candidates,
                                   const std::vector<Vertex>& anchors, int q);

bool is_connected_set(const TreeView& view, const std::vector<Vertex>& set);

}  // namespace pmt
