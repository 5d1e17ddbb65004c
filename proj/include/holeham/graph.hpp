#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "holeham/vertex_set.hpp"

namespace holeham {

/// Thrown when a caller violates an operation's documented precondition.
class precondition_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphBuilder;

/**
 * Immutable simple undirected graph on vertices 0..n-1, n <= 64.
 *
 * Each adjacency row is a single 64-bit word, so neighbourhood unions,
 * coverage tests and connectivity sweeps are word operations. Build one
 * through GraphBuilder or the named constructions below.
 */
class Graph {
public:
  static constexpr int max_order = 64;

  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(check_order(n)) {}

  Graph(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int size() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
  }

  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  /// N(S) = union of N(x) over x in S, minus S itself.
  VertexSet neighbors(VertexSet s) const {
    VertexSet out;
    for (int x : s) out |= rows_[x];
    return out - s;
  }
  VertexSet closed_neighbors(int v) const { return rows_[v] | VertexSet::singleton(v); }

  int degree(int v) const { return rows_[v].size(); }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }

  bool is_complete() const {
    for (int v = 0; v < n_; ++v)
      if (degree(v) != n_ - 1) return false;
    return true;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (int v : rows_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  /// Copy of this graph with the edge uv added (a no-op if already present).
  Graph with_edge(int u, int v) const;

  /// G[S], re-indexed so that the i-th smallest member of S becomes vertex i.
  Graph induced(VertexSet s) const;

  /// True iff G[s] is connected. The empty set and singletons count as connected.
  bool is_connected_within(VertexSet s) const {
    if (s.size() <= 1) return true;
    VertexSet reached = VertexSet::singleton(s.front());
    VertexSet frontier = reached;
    while (!frontier.empty()) {
      VertexSet next;
      for (int x : frontier) next |= rows_[x];
      next &= s;
      frontier = next - reached;
      reached |= next;
    }
    return reached == s;
  }
  bool is_connected() const { return is_connected_within(vertices()); }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.rows_[v] != b.rows_[v]) return false;
    return true;
  }

private:
  friend class GraphBuilder;

  static int check_order(int n) {
    if (n < 0 || n > max_order)
      throw precondition_error("graph order " + std::to_string(n) + " outside supported range 0.." +
                               std::to_string(max_order));
    return n;
  }

  void link(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw precondition_error("edge endpoint out of range: " + std::to_string(u) + "-" +
                               std::to_string(v));
    if (u == v) throw precondition_error("self-loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
  }

  int n_ = 0;
  std::array<VertexSet, max_order> rows_{};
};

/// Mutable staging area for a Graph; build() hands over the finished value.
class GraphBuilder {
public:
  explicit GraphBuilder(int n) : g_(n) {}
  explicit GraphBuilder(Graph start) : g_(std::move(start)) {}

  GraphBuilder& add_edge(int u, int v) {
    g_.link(u, v);
    return *this;
  }
  int order() const { return g_.order(); }
  Graph build() const { return g_; }

private:
  Graph g_;
};

inline Graph::Graph(int n, const std::vector<Edge>& edges) : n_(check_order(n)) {
  for (auto [u, v] : edges) link(u, v);
}

inline Graph Graph::with_edge(int u, int v) const {
  Graph out = *this;
  out.link(u, v);
  return out;
}

inline Graph Graph::induced(VertexSet s) const {
  std::vector<int> keep = s.to_vector();
  std::array<int, max_order> index{};
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
  GraphBuilder b(static_cast<int>(keep.size()));
  for (int u : keep)
    for (int v : rows_[u] & s)
      if (u < v) b.add_edge(index[u], index[v]);
  return b.build();
}

// ---------------------------------------------------------------------------
// Standard constructions

/// G v H: disjoint union plus every edge between the two sides.
/// Vertices of g keep their indices; h is shifted up by |g|.
inline Graph join(const Graph& g, const Graph& h) {
  const int offset = g.order();
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + offset, v + offset);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) b.add_edge(u, v + offset);
  return b.build();
}

inline Graph disjoint_union(const Graph& g, const Graph& h) {
  const int offset = g.order();
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + offset, v + offset);
  return b.build();
}

inline Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return b.build();
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw precondition_error("cycle requires n >= 3");
  GraphBuilder b(n);
  for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return b.build();
}

/// Outer 5-cycle on 0..4, inner pentagram on 5..9, spokes i ~ i+5.
inline Graph petersen_graph() {
  GraphBuilder b(10);
  for (int i = 0; i < 5; ++i) {
    b.add_edge(i, (i + 1) % 5);
    b.add_edge(5 + i, 5 + (i + 2) % 5);
    b.add_edge(i, i + 5);
  }
  return b.build();
}

}  // namespace holeham
