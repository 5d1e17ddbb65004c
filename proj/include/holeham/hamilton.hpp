#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holeham/graph.hpp"

namespace holeham {

enum class SequenceKind { path, cycle };

/**
 * A Hamilton path or cycle v1, ..., vn of its ambient graph.
 *
 * Orientation helpers follow the path direction: successor(x) is x+, the
 * vertex right after x; predecessor(x) is x-. On a path the last vertex has
 * no successor and the first no predecessor; on a cycle both wrap around.
 * Construction checks every invariant and throws precondition_error on a
 * sequence that is not a Hamilton path/cycle of the graph.
 */
class HamiltonSequence {
public:
  HamiltonSequence(Graph ambient, std::vector<int> vertices, SequenceKind kind)
      : ambient_(std::move(ambient)), vertices_(std::move(vertices)), kind_(kind) {
    if (auto why = first_violation(ambient_, vertices_, kind_)) throw precondition_error(*why);
    for (int i = 0; i < size(); ++i) position_[vertices_[i]] = i;
  }

  /// Why `seq` is not a Hamilton path/cycle of g, or nullopt if it is one.
  static std::optional<std::string> first_violation(const Graph& g, const std::vector<int>& seq,
                                                    SequenceKind kind) {
    const int n = g.order();
    if (static_cast<int>(seq.size()) != n) return "sequence has " + std::to_string(seq.size()) + " vertices, graph has " + std::to_string(n);
    VertexSet seen;
    for (int v : seq) {
      if (v < 0 || v >= n) return "vertex " + std::to_string(v) + " out of range";
      if (seen.contains(v)) return "vertex " + std::to_string(v) + " repeated";
      seen.insert(v);
    }
    for (int i = 0; i + 1 < n; ++i)
      if (!g.adjacent(seq[i], seq[i + 1]))
        return "missing edge " + std::to_string(seq[i]) + "-" + std::to_string(seq[i + 1]);
    if (kind == SequenceKind::cycle) {
      if (n < 3) return std::string("a cycle needs at least 3 vertices");
      if (!g.adjacent(seq.back(), seq.front()))
        return "missing closing edge " + std::to_string(seq.back()) + "-" + std::to_string(seq.front());
    }
    return std::nullopt;
  }

  const Graph& ambient() const { return ambient_; }
  const std::vector<int>& vertices() const { return vertices_; }
  SequenceKind kind() const { return kind_; }
  int size() const { return static_cast<int>(vertices_.size()); }

  /// v_i with the 1-based index used when reasoning about v1..vn.
  int at(int i) const { return vertices_.at(i - 1); }
  /// 1-based index of vertex v.
  int index_of(int v) const { return position_.at(v) + 1; }
  int front() const { return vertices_.front(); }
  int back() const { return vertices_.back(); }

  std::optional<int> successor(int x) const {
    const int i = position_.at(x);
    if (i + 1 < size()) return vertices_[i + 1];
    if (kind_ == SequenceKind::cycle) return vertices_.front();
    return std::nullopt;
  }
  std::optional<int> predecessor(int x) const {
    const int i = position_.at(x);
    if (i > 0) return vertices_[i - 1];
    if (kind_ == SequenceKind::cycle) return vertices_.back();
    return std::nullopt;
  }
  /// S+ = { x+ : x in S, x has a successor }.
  VertexSet successors(VertexSet s) const {
    VertexSet out;
    for (int x : s)
      if (auto y = successor(x)) out.insert(*y);
    return out;
  }
  /// S- = { x- : x in S, x has a predecessor }.
  VertexSet predecessors(VertexSet s) const {
    VertexSet out;
    for (int x : s)
      if (auto y = predecessor(x)) out.insert(*y);
    return out;
  }
  /// P[x, y] traversed along the orientation (x must not come after y on a path).
  std::vector<int> segment(int x, int y) const {
    std::vector<int> out;
    int i = position_.at(x);
    const int j = position_.at(y);
    if (kind_ == SequenceKind::path && i > j) throw precondition_error("segment endpoints out of order");
    while (true) {
      out.push_back(vertices_[i]);
      if (i == j) break;
      i = (i + 1) % size();
    }
    return out;
  }

  HamiltonSequence reversed() const {
    return HamiltonSequence(ambient_, {vertices_.rbegin(), vertices_.rend()}, kind_);
  }

private:
  Graph ambient_;
  std::vector<int> vertices_;
  SequenceKind kind_;
  std::array<int, Graph::max_order> position_{};
};

/// Why a search returned no sequence.
enum class Refusal { none, order, exhausted };

struct HamiltonResult {
  std::optional<HamiltonSequence> witness;
  Refusal reason = Refusal::none;

  explicit operator bool() const { return witness.has_value(); }
};

namespace detail {

/**
 * Depth-first extension of a path from a fixed start.
 *
 * The path must eventually cover every vertex and end in `finals`. With
 * `end_fixed`, `finals` is a single vertex that may only be entered last.
 * Pruning at each node:
 *   - the unvisited vertices must all be reachable from the current end
 *     through unvisited vertices;
 *   - every unvisited vertex needs two usable neighbours, except the one
 *     that ends the path, which needs one;
 *   - an unvisited neighbour of the end whose only usable neighbours are the
 *     end and one other vertex must be taken next (two of them: dead end).
 * Candidates are tried in ascending degree, ties by index.
 */
class PathExtender {
public:
  PathExtender(const Graph& g, VertexSet finals, bool end_fixed)
      : g_(g), n_(g.order()), all_(g.vertices()), finals_(finals), end_fixed_(end_fixed) {
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  }

  std::optional<std::vector<int>> from(int start) {
    path_.clear();
    path_.push_back(start);
    if (extend(start, VertexSet::singleton(start))) return path_;
    return std::nullopt;
  }

private:
  bool may_end_at(int w) const { return finals_.contains(w); }

  bool extend(int end, VertexSet visited) {
    const VertexSet rest = all_ - visited;
    if (rest.empty()) return finals_.contains(end);
    if (!finals_.intersects(rest)) return false;

    VertexSet moves = g_.neighbors(end) & rest;
    if (end_fixed_ && rest != finals_) moves -= finals_;
    if (moves.empty()) return false;

    // Everything left must hang off the current end.
    VertexSet reached = moves;
    VertexSet frontier = moves;
    while (!frontier.empty()) {
      VertexSet next;
      for (int x : frontier) next |= g_.neighbors(x);
      next &= rest;
      frontier = next - reached;
      reached |= next;
    }
    if (reached != rest) return false;

    const VertexSet usable = rest | VertexSet::singleton(end);
    int deficient = 0;
    std::optional<int> forced;
    for (int w : rest) {
      const VertexSet avail = g_.neighbors(w) & usable;
      const int count = avail.size();
      if (count < 2) {
        if (count == 0 || !may_end_at(w) || ++deficient > 1) return false;
      } else if (count == 2 && avail.contains(end) && !may_end_at(w)) {
        if (forced && *forced != w) return false;
        forced = w;
      }
    }
    if (forced) {
      if (!moves.contains(*forced)) return false;
      moves = VertexSet::singleton(*forced);
    }

    for (int w : order_) {
      if (!moves.contains(w)) continue;
      path_.push_back(w);
      if (extend(w, visited | VertexSet::singleton(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  int n_;
  VertexSet all_;
  VertexSet finals_;
  bool end_fixed_;
  std::vector<int> order_;
  std::vector<int> path_;
};

inline int min_degree_vertex(const Graph& g) {
  int best = 0;
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) < g.degree(best)) best = v;
  return best;
}

}  // namespace detail

/// Exact: a Hamilton cycle if one exists. Refuses with Refusal::order when n < 3.
/// The search starts at the minimum-degree vertex (ties: smallest index).
inline HamiltonResult find_hamilton_cycle(const Graph& g) {
  if (g.order() < 3) return {std::nullopt, Refusal::order};
  const int start = detail::min_degree_vertex(g);
  detail::PathExtender search(g, g.neighbors(start), false);
  if (auto seq = search.from(start)) return {HamiltonSequence(g, std::move(*seq), SequenceKind::cycle), Refusal::none};
  return {std::nullopt, Refusal::exhausted};
}

/// Exact: a Hamilton path from u to v if one exists. Requires u != v.
inline HamiltonResult find_hamilton_path(const Graph& g, int u, int v) {
  const int n = g.order();
  if (u < 0 || v < 0 || u >= n || v >= n) throw precondition_error("path endpoint out of range");
  if (u == v) throw precondition_error("find_hamilton_path requires u != v");
  // Start from the more constrained end; paths are reversible.
  const bool flip = g.degree(v) < g.degree(u);
  const int from = flip ? v : u;
  const int to = flip ? u : v;
  detail::PathExtender search(g, VertexSet::singleton(to), true);
  auto seq = search.from(from);
  if (!seq) return {std::nullopt, Refusal::exhausted};
  if (flip) std::reverse(seq->begin(), seq->end());
  return {HamiltonSequence(g, std::move(*seq), SequenceKind::path), Refusal::none};
}

/// Exact: any Hamilton path. Directly searched, free at both ends.
inline HamiltonResult find_hamilton_path(const Graph& g) {
  const int n = g.order();
  if (n < 1) return {std::nullopt, Refusal::order};
  if (n == 1) return {HamiltonSequence(g, {0}, SequenceKind::path), Refusal::none};
  std::vector<int> starts(n);
  std::iota(starts.begin(), starts.end(), 0);
  std::stable_sort(starts.begin(), starts.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  if (g.degree(starts.front()) == 0) return {std::nullopt, Refusal::exhausted};
  // A degree-1 vertex has to be an end, so starting there alone is enough.
  if (g.degree(starts.front()) == 1) starts.resize(1);
  detail::PathExtender search(g, g.vertices(), false);
  for (int s : starts)
    if (auto seq = search.from(s)) return {HamiltonSequence(g, std::move(*seq), SequenceKind::path), Refusal::none};
  return {std::nullopt, Refusal::exhausted};
}

/// G v K1 with the apex as the last vertex.
inline Graph cone(const Graph& g) { return join(g, complete_graph(1)); }

inline bool is_traceable(const Graph& g) { return static_cast<bool>(find_hamilton_path(g)); }

/// Traceability decided through the cone: G has a Hamilton path iff G v K1 has
/// a Hamilton cycle. Single vertices are traceable; the cone K2 has no cycle.
inline bool is_traceable_via_cone(const Graph& g) {
  if (g.order() == 1) return true;
  return static_cast<bool>(find_hamilton_cycle(cone(g)));
}

inline bool is_hamiltonian(const Graph& g) { return static_cast<bool>(find_hamilton_cycle(g)); }

struct ConnectednessResult {
  bool connected = false;
  /// The first unordered pair (u < v, lexicographic) with no Hamilton path.
  std::optional<std::pair<int, int>> failing_pair;
};

/// Every unordered pair of distinct vertices joined by a Hamilton path.
inline ConnectednessResult is_hamiltonian_connected(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw precondition_error("hamiltonian-connectedness requires n >= 2");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!find_hamilton_path(g, u, v)) return {false, std::pair{u, v}};
  return {true, std::nullopt};
}

// ---------------------------------------------------------------------------
// Subset dynamic programming (Held-Karp style). Independent of the
// backtracking engine above and used to cross-check it.

namespace dp {

inline constexpr int max_order = 20;

/// ends[mask] = vertices x such that some path from `start` visits exactly
/// `mask` and finishes at x.
inline std::vector<std::uint32_t> path_table(const Graph& g, int start) {
  const int n = g.order();
  if (n > max_order) throw precondition_error("subset DP supports n <= 20");
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<std::uint32_t> ends(std::size_t{full} + 1, 0);
  ends[std::uint32_t{1} << start] = std::uint32_t{1} << start;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t here = ends[mask];
    while (here) {
      const int x = std::countr_zero(here);
      here &= here - 1;
      std::uint32_t out = static_cast<std::uint32_t>(g.neighbors(x).bits()) & ~mask;
      while (out) {
        const int y = std::countr_zero(out);
        out &= out - 1;
        ends[mask | (std::uint32_t{1} << y)] |= std::uint32_t{1} << y;
      }
    }
  }
  return ends;
}

inline bool hamiltonian(const Graph& g) {
  const int n = g.order();
  if (n < 3) return false;
  const auto ends = path_table(g, 0);
  return (ends.back() & static_cast<std::uint32_t>(g.neighbors(0).bits())) != 0;
}

/// Vertices v != u with a Hamilton (u, v)-path.
inline VertexSet path_partners(const Graph& g, int u) {
  const auto ends = path_table(g, u);
  return VertexSet(ends.back()) - VertexSet::singleton(u);
}

inline bool traceable(const Graph& g) {
  if (g.order() == 1) return true;
  for (int u = 0; u < g.order(); ++u)
    if (!path_partners(g, u).empty()) return true;
  return false;
}

}  // namespace dp

}  // namespace holeham
