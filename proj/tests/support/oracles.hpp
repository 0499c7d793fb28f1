#pragma once
// Independent reference computations used as test oracles. Nothing here calls
// the library's analysis code; it works straight from adjacency lists.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <pmt/tree.hpp>

namespace oracle {

using pmt::Tree;
using pmt::Vertex;

inline std::vector<int> bfs(const Tree& t, Vertex s, std::vector<Vertex>* parent = nullptr) {
  std::vector<int> d(t.size(), -1);
  if (parent) parent->assign(t.size(), -1);
  std::vector<Vertex> q{s};
  d[s] = 0;
  for (std::size_t h = 0; h < q.size(); ++h)
    for (Vertex w : t.neighbors(q[h]))
      if (d[w] < 0) {
        d[w] = d[q[h]] + 1;
        if (parent) (*parent)[w] = q[h];
        q.push_back(w);
      }
  return d;
}

inline std::vector<Vertex> bfs_path(const Tree& t, Vertex a, Vertex b) {
  std::vector<Vertex> parent;
  bfs(t, a, &parent);
  std::vector<Vertex> p{b};
  while (p.back() != a) p.push_back(parent[p.back()]);
  std::reverse(p.begin(), p.end());
  return p;
}

struct Constants {
  int c1 = 0, c2 = 0, c = 0, c1t = 0, c2t = 0, ct = 0, corridors = 0, edges = 0;
};

// Corridors by brute force: every pair of non-degree-2 vertices whose path
// interior is all degree 2.
inline Constants corridor_constants(const Tree& t, bool ts) {
  Constants k;
  const int n = t.size();
  auto regular = [&](Vertex v) { return !(ts && t.is_transshipment(v)); };
  bool path = true;
  for (Vertex v = 0; v < n; ++v) path = path && t.degree(v) <= 2;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      if (t.degree(a) == 2 || t.degree(b) == 2) continue;
      auto p = bfs_path(t, a, b);
      bool ok = true;
      for (std::size_t i = 1; i + 1 < p.size(); ++i) ok = ok && t.degree(p[i]) == 2;
      if (!ok) continue;
      const int len = static_cast<int>(p.size()) - 1;
      int reg = 0;
      for (Vertex v : p) reg += regular(v) ? 1 : 0;
      ++k.corridors;
      k.edges += len;
      k.c1 = std::max(k.c1, len);
      k.c1t = std::max(k.c1t, reg);
      if (t.degree(a) > 2 && t.degree(b) > 2) {
        k.c2 = std::max(k.c2, len);
        k.c2t = std::max(k.c2t, reg);
      }
    }
  if (n == 1) k.c1t = 1;
  k.c = path ? k.c1 : std::max(k.c1 + 1, k.c2 + 2);
  k.ct = path ? k.c1t : std::max(k.c1t + 1, k.c2t + 2);
  return k;
}

// Sum of distances to the anchor set for the best q-subset, by enumeration.
inline int best_subset_cost(const Tree& t, const std::vector<Vertex>& cand,
                            const std::vector<Vertex>& anchors, int q) {
  std::vector<int> dist(t.size(), 1 << 20);
  for (Vertex a : anchors) {
    auto d = bfs(t, a);
    for (Vertex v = 0; v < t.size(); ++v) dist[v] = std::min(dist[v], d[v]);
  }
  int best = 1 << 30;
  const int m = static_cast<int>(cand.size());
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != q) continue;
    int s = 0;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) s += dist[cand[i]];
    best = std::min(best, s);
  }
  return best;
}

inline std::vector<pmt::Edge> pruefer_edges(const std::vector<int>& code, int n) {
  std::vector<pmt::Edge> e;
  if (n == 2) return {{0, 1}};
  std::vector<int> deg(n, 1);
  for (int x : code) ++deg[x];
  for (int x : code) {
    int leaf = 0;
    while (deg[leaf] != 1) ++leaf;
    e.emplace_back(leaf, x);
    --deg[leaf];
    --deg[x];
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) last.push_back(v);
  e.emplace_back(last[0], last[1]);
  return e;
}

// AHU encoding of the tree rooted at its centre(s); equal strings iff isomorphic.
inline std::string canonical_form(const Tree& t) {
  const int n = t.size();
  if (n == 1) return "()";
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int left = n;
  while (left > 2) {
    left -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : t.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = next;
  }
  std::function<std::string(Vertex, Vertex)> enc = [&](Vertex v, Vertex from) {
    std::vector<std::string> kids;
    for (Vertex w : t.neighbors(v))
      if (w != from) kids.push_back(enc(w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    return s + ")";
  };
  std::string best;
  for (Vertex c : layer) {
    std::string s = enc(c, -1);
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// One representative per isomorphism class of trees on n vertices.
inline std::vector<Tree> nonisomorphic_trees(int n) {
  std::vector<Tree> out;
  if (n == 1) {
    out.emplace_back(1, std::vector<pmt::Edge>{});
    return out;
  }
  std::set<std::string> seen;
  std::vector<int> code(std::max(0, n - 2), 0);
  while (true) {
    Tree t(n, pruefer_edges(code, n));
    if (seen.insert(canonical_form(t)).second) out.push_back(t);
    int i = 0;
    while (i < n - 2 && ++code[i] == n) code[i++] = 0;
    if (i == n - 2) break;
  }
  return out;
}

}  // namespace oracle
