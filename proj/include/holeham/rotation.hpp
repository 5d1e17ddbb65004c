#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "holeham/graph.hpp"
#include "holeham/hamilton.hpp"

namespace holeham {

/**
 * Closing a Hamilton path P = v1, ..., vn into a Hamilton cycle.
 *
 * All indices here are 1-based positions on P, so v1 is P.front().
 *
 *   situation 1: i in [2, n-1], v_i ~ v1 and v_{i-1} ~ vn.
 *     cycle v1 .. v_{i-1}, vn .. v_i
 *   situation 2: k in [2, n-1], i in [2, k], j in [k, n-1] (i = j allowed),
 *     v_i ~ v1, v_j ~ vn, v_{i-1} ~ v_{j+1}.
 *     cycle v_i .. v_j, vn .. v_{j+1}, v_{i-1} .. v1
 *   situation 3: k in [2, n-1], i in [k, n-1], j in [1, k-1] (i = j+1 allowed),
 *     v_i ~ v1, v_j ~ vn, v_{i+1} ~ v_{j+1}.
 *     cycle v1 .. v_j, vn .. v_{i+1}, v_{j+1} .. v_i
 *
 * Situation 2 uses chords from the ends that do not cross; situation 3 uses
 * crossing ones. k only bounds i and j; callers scanning for a closure
 * iterate it explicitly.
 */
enum class Situation { one = 1, two = 2, three = 3 };

struct RotationMove {
  Situation situation = Situation::one;
  int i = 0;
  int j = 0;  // unused by situation 1
  int k = 0;  // unused by situation 1
  friend bool operator==(const RotationMove&, const RotationMove&) = default;
};

namespace detail {

inline std::string adjacency_name(const HamiltonSequence& p, int a, int b) {
  return "v" + std::to_string(a) + "~v" + std::to_string(b) + " (vertices " + std::to_string(p.at(a)) + " and " +
         std::to_string(p.at(b)) + ")";
}

inline void require_range(const char* name, int value, int lo, int hi) {
  if (value < lo || value > hi)
    throw precondition_error(std::string(name) + "=" + std::to_string(value) + " outside [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]");
}

/// Positions [from, to] of p, stepping forwards or backwards.
inline void append_run(std::vector<int>& out, const HamiltonSequence& p, int from, int to) {
  const int step = from <= to ? 1 : -1;
  for (int x = from;; x += step) {
    out.push_back(p.at(x));
    if (x == to) break;
  }
}

}  // namespace detail

/// The first hypothesis adjacency of `move` that fails on p, or nullopt when
/// the move applies. Also checks the index ranges.
inline std::optional<std::string> rotation_violation(const HamiltonSequence& p, const RotationMove& move) {
  const int n = p.size();
  const Graph& g = p.ambient();
  auto missing = [&](int a, int b) -> std::optional<std::string> {
    if (g.adjacent(p.at(a), p.at(b))) return std::nullopt;
    return "missing adjacency " + detail::adjacency_name(p, a, b);
  };
  try {
    if (p.kind() != SequenceKind::path) return std::string("rotation closure needs a Hamilton path");
    if (n < 3) return std::string("rotation closure needs n >= 3");
    const auto [situation, i, j, k] = move;
    switch (situation) {
      case Situation::one:
        detail::require_range("i", i, 2, n - 1);
        if (auto m = missing(i, 1)) return m;
        return missing(i - 1, n);
      case Situation::two:
        detail::require_range("k", k, 2, n - 1);
        detail::require_range("i", i, 2, k);
        detail::require_range("j", j, k, n - 1);
        if (auto m = missing(i, 1)) return m;
        if (auto m = missing(j, n)) return m;
        return missing(i - 1, j + 1);
      case Situation::three:
        detail::require_range("k", k, 2, n - 1);
        detail::require_range("i", i, k, n - 1);
        detail::require_range("j", j, 1, k - 1);
        if (auto m = missing(i, 1)) return m;
        if (auto m = missing(j, n)) return m;
        return missing(i + 1, j + 1);
    }
  } catch (const precondition_error& e) {
    return std::string(e.what());
  }
  return std::string("unknown situation");
}

/// Re-splice a Hamilton path into a Hamilton cycle of the same graph.
/// Throws precondition_error naming the first missing adjacency or bad index.
inline HamiltonSequence rotation_close(const HamiltonSequence& p, const RotationMove& move) {
  if (auto why = rotation_violation(p, move)) throw precondition_error(*why);
  const int n = p.size();
  const auto [situation, i, j, k] = move;
  std::vector<int> cycle;
  cycle.reserve(n);
  switch (situation) {
    case Situation::one:
      detail::append_run(cycle, p, 1, i - 1);
      detail::append_run(cycle, p, n, i);
      break;
    case Situation::two:
      detail::append_run(cycle, p, i, j);
      detail::append_run(cycle, p, n, j + 1);
      detail::append_run(cycle, p, i - 1, 1);
      break;
    case Situation::three:
      detail::append_run(cycle, p, 1, j);
      detail::append_run(cycle, p, n, i + 1);
      detail::append_run(cycle, p, j + 1, i);
      break;
  }
  return HamiltonSequence(p.ambient(), std::move(cycle), SequenceKind::cycle);
}

/// The trivial closure through the edge v1 vn, if present.
inline std::optional<HamiltonSequence> close_ends(const HamiltonSequence& p) {
  if (p.kind() != SequenceKind::path || p.size() < 3 || !p.ambient().adjacent(p.front(), p.back()))
    return std::nullopt;
  return HamiltonSequence(p.ambient(), p.vertices(), SequenceKind::cycle);
}

/// Every (situation, i, j, k) that applies to p, situation 1 first, then by
/// k, i, j ascending.
inline std::vector<RotationMove> applicable_rotations(const HamiltonSequence& p) {
  std::vector<RotationMove> out;
  const int n = p.size();
  if (p.kind() != SequenceKind::path || n < 3) return out;
  const Graph& g = p.ambient();
  auto adj = [&](int a, int b) { return g.adjacent(p.at(a), p.at(b)); };
  for (int i = 2; i <= n - 1; ++i)
    if (adj(i, 1) && adj(i - 1, n)) out.push_back({Situation::one, i, 0, 0});
  for (int k = 2; k <= n - 1; ++k)
    for (int i = 2; i <= k; ++i)
      for (int j = k; j <= n - 1; ++j)
        if (adj(i, 1) && adj(j, n) && adj(i - 1, j + 1)) out.push_back({Situation::two, i, j, k});
  for (int k = 2; k <= n - 1; ++k)
    for (int i = k; i <= n - 1; ++i)
      for (int j = 1; j <= k - 1; ++j)
        if (adj(i, 1) && adj(j, n) && adj(i + 1, j + 1)) out.push_back({Situation::three, i, j, k});
  return out;
}

/// First applicable closure in O(n^2): situation 1, then 2 with k = i,
/// then 3 with k = j + 1.
inline std::optional<RotationMove> find_rotation_closure(const HamiltonSequence& p) {
  const int n = p.size();
  if (p.kind() != SequenceKind::path || n < 3) return std::nullopt;
  const Graph& g = p.ambient();
  auto adj = [&](int a, int b) { return g.adjacent(p.at(a), p.at(b)); };
  for (int i = 2; i <= n - 1; ++i)
    if (adj(i, 1) && adj(i - 1, n)) return RotationMove{Situation::one, i, 0, 0};
  for (int i = 2; i <= n - 1; ++i) {
    if (!adj(i, 1)) continue;
    for (int j = i; j <= n - 1; ++j)
      if (adj(j, n) && adj(i - 1, j + 1)) return RotationMove{Situation::two, i, j, i};
  }
  for (int j = 1; j <= n - 2; ++j) {
    if (!adj(j, n)) continue;
    for (int i = j + 1; i <= n - 1; ++i)
      if (adj(i, 1) && adj(i + 1, j + 1)) return RotationMove{Situation::three, i, j, j + 1};
  }
  return std::nullopt;
}

inline long default_rotation_budget(int n) { return 50L * n * n; }

struct ConstructionResult {
  std::optional<HamiltonSequence> cycle;  // nullopt: gave up
  long rotations = 0;
};

/**
 * Sound but incomplete Hamilton cycle search by rotation-extension.
 *
 * Grows a path greedily at both ends. A path that cannot grow is either
 * closed (directly or by one of the three situations) and, if vertices are
 * still outside, broken open at a vertex with an outside neighbour; or it is
 * rotated: for a chord vn ~ v_i, the path becomes v1 .. v_i, vn .. v_{i+1}.
 * Each rotation costs one unit of budget. Chord choice and end choice come
 * from a fixed-seed mt19937_64, so runs are reproducible.
 */
inline ConstructionResult rotation_extension_construct(const Graph& g, long budget) {
  const int n = g.order();
  ConstructionResult result;
  if (n < 3 || !g.is_connected()) return result;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return result;

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::vector<int> path{detail::min_degree_vertex(g)};
  VertexSet on_path = VertexSet::singleton(path.front());

  auto grow_back = [&] {
    bool grew = true;
    while (grew) {
      grew = false;
      const VertexSet out = g.neighbors(path.back()) - on_path;
      if (out.empty()) break;
      int pick = out.front();
      for (int w : out)
        if (g.degree(w) < g.degree(pick)) pick = w;
      path.push_back(pick);
      on_path.insert(pick);
      grew = true;
    }
  };

  while (true) {
    grow_back();
    std::reverse(path.begin(), path.end());
    grow_back();

    const int m = static_cast<int>(path.size());
    // Try to close the current path into a cycle on its own vertex set.
    std::optional<std::vector<int>> closed;
    if (m >= 3) {
      const Graph sub = g.induced(on_path);
      std::array<int, Graph::max_order> local_index{};
      std::vector<int> members = on_path.to_vector();
      for (int x = 0; x < static_cast<int>(members.size()); ++x) local_index[members[x]] = x;
      std::vector<int> local_path;
      for (int v : path) local_path.push_back(local_index[v]);
      const HamiltonSequence lp(sub, local_path, SequenceKind::path);
      std::optional<HamiltonSequence> cyc = close_ends(lp);
      if (!cyc)
        if (auto move = find_rotation_closure(lp)) cyc = rotation_close(lp, *move);
      if (cyc) {
        closed.emplace();
        for (int x : cyc->vertices()) closed->push_back(members[x]);
      }
    }
    if (closed) {
      if (m == n) {
        result.cycle = HamiltonSequence(g, std::move(*closed), SequenceKind::cycle);
        return result;
      }
      // Break the cycle open next to a vertex with an outside neighbour.
      const auto& c = *closed;
      bool opened_up = false;
      for (int x = 0; x < m && !opened_up; ++x) {
        const VertexSet out = g.neighbors(c[x]) - on_path;
        if (out.empty()) continue;
        std::vector<int> opened{out.front()};
        for (int y = 0; y < m; ++y) opened.push_back(c[(x + y) % m]);
        path = std::move(opened);
        on_path.insert(path.front());
        opened_up = true;
      }
      if (!opened_up) return result;  // unreachable on a connected graph
      continue;
    }

    if (result.rotations >= budget) return result;
    ++result.rotations;
    if (rng() & 1) std::reverse(path.begin(), path.end());
    // Chords from the back end to v_i with i <= m-2 (0-based index <= m-3).
    std::vector<int> pivots;
    for (int x = 0; x + 2 < m; ++x)
      if (g.adjacent(path.back(), path[x])) pivots.push_back(x);
    if (pivots.empty()) continue;
    const int x = pivots[rng() % pivots.size()];
    std::reverse(path.begin() + x + 1, path.end());
  }
}

inline ConstructionResult rotation_extension_construct(const Graph& g) {
  return rotation_extension_construct(g, default_rotation_budget(g.order()));
}

}  // namespace holeham
