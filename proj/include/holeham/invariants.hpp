#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <limits>
#include <string>

#include "holeham/graph.hpp"

namespace holeham {

/// Minimum degree sum over nonadjacent pairs, or infinity when no such pair
/// exists. Infinity compares greater than every finite value.
class DegreeSum {
public:
  static constexpr DegreeSum infinite() { return DegreeSum(); }
  constexpr explicit DegreeSum(long value) : value_(value) {}

  constexpr bool is_infinite() const { return value_ == kInfinite; }
  /// Finite value; meaningless when is_infinite().
  constexpr long value() const { return value_; }

  constexpr bool at_least(long bound) const { return is_infinite() || value_ >= bound; }

  friend constexpr auto operator<=>(DegreeSum a, DegreeSum b) = default;
  friend constexpr bool operator==(DegreeSum a, long b) { return !a.is_infinite() && a.value_ == b; }
  friend constexpr auto operator<=>(DegreeSum a, long b) {
    return a.is_infinite() ? std::strong_ordering::greater : a.value_ <=> b;
  }

  std::string to_string() const { return is_infinite() ? "infinity" : std::to_string(value_); }

private:
  static constexpr long kInfinite = std::numeric_limits<long>::max();
  constexpr DegreeSum() : value_(kInfinite) {}
  long value_;
};

inline DegreeSum sigma2(const Graph& g) {
  const int n = g.order();
  long best = std::numeric_limits<long>::max();
  bool found = false;
  for (int u = 0; u < n; ++u) {
    const VertexSet non_adjacent = g.vertices() - g.closed_neighbors(u);
    for (int v : non_adjacent) {
      if (v <= u) continue;
      found = true;
      best = std::min<long>(best, g.degree(u) + g.degree(v));
    }
  }
  return found ? DegreeSum(best) : DegreeSum::infinite();
}

inline int min_degree(const Graph& g) {
  if (g.order() < 1) throw precondition_error("min_degree requires n >= 1");
  int best = g.degree(0);
  for (int v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

namespace detail {

/// Calls visit(mask) for every size-k subset of `pool`, in lexicographic
/// order of the sorted member lists. Stops early when visit returns true.
template <typename Visit>
bool for_each_subset_of_size(VertexSet pool, int k, Visit&& visit) {
  std::array<int, Graph::max_order> items{};
  int m = 0;
  for (int v : pool) items[m++] = v;
  if (k < 0 || k > m) return false;
  std::array<int, Graph::max_order> idx{};
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet chosen;
    for (int i = 0; i < k; ++i) chosen.insert(items[idx[i]]);
    if (visit(chosen)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Some c-subset D with G - D disconnected (and at least two vertices left).
inline bool has_separator_of_size(const Graph& g, int c) {
  const VertexSet all = g.vertices();
  if (g.order() - c < 2) return false;
  return for_each_subset_of_size(all, c, [&](VertexSet removed) { return !g.is_connected_within(all - removed); });
}

}  // namespace detail

/**
 * Vertex connectivity. n-1 for complete graphs; otherwise the smallest c such
 * that deleting some c vertices disconnects what remains, found by testing
 * every c-subset for c = 0, 1, 2, ... with early exit.
 */
inline int kappa(const Graph& g) {
  const int n = g.order();
  if (n < 1) throw precondition_error("kappa requires n >= 1");
  if (g.is_complete()) return n - 1;
  for (int c = 0; c < n - 1; ++c)
    if (detail::has_separator_of_size(g, c)) return c;
  return n - 1;  // unreachable for non-complete graphs
}

/// kappa(g) >= k, without computing kappa beyond the threshold.
inline bool is_k_connected(const Graph& g, int k) {
  const int n = g.order();
  if (k <= 0) return true;
  if (n < 1) return false;
  if (g.is_complete()) return n - 1 >= k;
  for (int c = 0; c < k; ++c)
    if (detail::has_separator_of_size(g, c)) return false;
  return true;
}

}  // namespace holeham
