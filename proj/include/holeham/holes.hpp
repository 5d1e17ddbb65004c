#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "holeham/graph.hpp"
#include "holeham/invariants.hpp"

namespace holeham {

/// Disjoint vertex sets with no edge between them: an (|S|,|T|)-bipartite-hole.
struct HoleWitness {
  VertexSet s_side;
  VertexSet t_side;

  bool validates(const Graph& g) const {
    if (!s_side.is_subset_of(g.vertices()) || !t_side.is_subset_of(g.vertices())) return false;
    if (s_side.intersects(t_side)) return false;
    for (int x : s_side)
      if (g.neighbors(x).intersects(t_side)) return false;
    return true;
  }
  friend bool operator==(const HoleWitness&, const HoleWitness&) = default;
};

/**
 * f(s) = max over |A| = s of the number of vertices outside A u N(A).
 *
 * An (s,t)-hole with s >= 1 exists iff t <= f(s): the T side may be any t of
 * the untouched vertices. f(0) = n, f(n) = 0, and f is non-increasing.
 */
class CoverageProfile {
public:
  CoverageProfile() = default;
  explicit CoverageProfile(std::vector<int> values) : f_(std::move(values)) {}

  int order() const { return static_cast<int>(f_.size()) - 1; }
  /// Absent for s > n (no set of that size exists).
  std::optional<int> operator()(int s) const {
    if (s < 0 || s > order()) return std::nullopt;
    return f_[s];
  }
  const std::vector<int>& values() const { return f_; }

  /// Whether an (s,t)-hole exists, including the vacuous conventions:
  /// sides larger than the vertex set never fit.
  bool admits_hole(int s, int t) const {
    if (s < 0 || t < 0 || s + t > order()) return false;
    if (s == 0) return true;
    return t <= f_[s];
  }

private:
  std::vector<int> f_;
};

namespace detail {

class ProfileSearch {
public:
  explicit ProfileSearch(const Graph& g) : g_(g), n_(g.order()), best_(n_ + 1, 0) {}

  std::vector<int> run() {
    best_[0] = n_;
    descend(0, 0, VertexSet(), 0);
    return std::move(best_);
  }

private:
  // f is non-increasing, so a set of size k leaving u untouched also shows
  // f(j) >= u for every j <= k.
  void record(int size, int uncovered) {
    for (int s = size; s >= 0 && best_[s] < uncovered; --s) best_[s] = uncovered;
  }

  // `carried` counts free vertices skipped by ancestors below `next`.
  void descend(int next, int size, VertexSet cover, int carried) {
    const int uncovered = n_ - cover.size();
    // Vertices whose closed neighbourhood is already covered can be added
    // without changing the cover, so they are counted rather than branched on.
    int free = carried;
    for (int v = next; v < n_; ++v)
      if (g_.closed_neighbors(v).is_subset_of(cover)) ++free;
    record(std::min(n_, size + free), uncovered);
    // A superset of size s leaves at most min(uncovered, n - s) untouched;
    // stop once that cannot beat any current f(s).
    bool improvable = false;
    for (int s = size + free + 1; s <= n_ && !improvable; ++s)
      improvable = best_[s] < std::min(uncovered, n_ - s);
    if (!improvable) return;
    int skipped = carried;
    for (int v = next; v < n_; ++v) {
      const VertexSet grown = cover | g_.closed_neighbors(v);
      if (grown == cover) {
        ++skipped;
        continue;
      }
      descend(v + 1, size + 1, grown, skipped);
    }
  }

  const Graph& g_;
  int n_;
  std::vector<int> best_;
};

}  // namespace detail

/// Exact f(s) for every s in [0, n], by pruned enumeration of vertex subsets.
inline CoverageProfile coverage_profile(const Graph& g) {
  return CoverageProfile(detail::ProfileSearch(g).run());
}

/**
 * An (s,t)-hole if one exists. Only the S side is enumerated (size-s subsets
 * in lexicographic order); T is taken as the t smallest vertices untouched by
 * S u N(S). The result is therefore the lexicographically smallest S that
 * works, paired with the smallest T for it.
 */
inline std::optional<HoleWitness> find_hole(const Graph& g, int s, int t) {
  if (s < 0 || t < 0) throw precondition_error("find_hole requires s, t >= 0");
  const int n = g.order();
  if (s + t > n) return std::nullopt;
  auto first_t = [t](VertexSet pool) {
    VertexSet out;
    for (int v : pool) {
      if (out.size() == t) break;
      out.insert(v);
    }
    return out;
  };
  if (s == 0) return HoleWitness{VertexSet(), first_t(g.vertices())};
  std::optional<HoleWitness> found;
  detail::for_each_subset_of_size(g.vertices(), s, [&](VertexSet a) {
    const VertexSet untouched = g.vertices() - a - g.neighbors(a);
    if (untouched.size() < t) return false;
    found = HoleWitness{a, first_t(untouched)};
    return true;
  });
  return found;
}

/// Direct search over (S, T) pairs without the coverage reformulation.
/// Exponential in both sides; meant as a cross-check on small graphs.
inline bool hole_exists_by_pair_search(const Graph& g, int s, int t) {
  if (s < 0 || t < 0 || s + t > g.order()) return false;
  return detail::for_each_subset_of_size(g.vertices(), s, [&](VertexSet a) {
    return detail::for_each_subset_of_size(g.vertices() - a, t, [&](VertexSet b) {
      for (int x : a)
        if (g.neighbors(x).intersects(b)) return false;
      return true;
    });
  });
}

struct HoleNumberCertificate {
  int value = 0;
  /// (s, t) with s + t = value + 1, s, t >= 1, admitting no hole.
  std::pair<int, int> blocking_pair{};
  /// One witness per split s + t = value, s = 0..value, in order of s.
  std::vector<HoleWitness> full_row;
};

/// Smallest k such that some positive split s + t = k + 1 has no hole, with the
/// split chosen as balanced as possible, s <= t.
inline std::pair<int, std::pair<int, int>> hole_number_from_profile(const CoverageProfile& f) {
  const int n = f.order();
  if (n < 2) throw precondition_error("bipartite-hole-number requires n >= 2");
  // For s in [1, n] the first blocked t is f(s) + 1, so k = s + f(s).
  int value = n + 1;
  for (int s = 1; s <= n; ++s) value = std::min(value, s + *f(s));
  std::pair<int, int> blocking{};
  for (int s = 1; 2 * s <= value + 1; ++s) {
    const int t = value + 1 - s;
    if (!f.admits_hole(s, t)) blocking = {s, t};
  }
  return {value, blocking};
}

/// Largest r such that an (s, r-s)-hole exists for every s in [0, r].
inline int hole_number_dual(const CoverageProfile& f) {
  const int n = f.order();
  if (n < 2) throw precondition_error("bipartite-hole-number requires n >= 2");
  int best = -1;
  for (int r = 0; r <= n + 1; ++r) {
    bool all = true;
    for (int s = 0; s <= r && all; ++s) all = f.admits_hole(s, r - s);
    if (!all) break;
    best = r;
  }
  return best;
}

inline int hole_number_dual(const Graph& g) { return hole_number_dual(coverage_profile(g)); }

/// Value only; the corpus sweeps call this in their inner loop.
inline int bipartite_hole_number(const Graph& g) { return hole_number_from_profile(coverage_profile(g)).first; }

/**
 * The bipartite-hole-number with evidence: a blocking pair and a full row of
 * witnesses one level below it. The blocking pair is re-checked by a
 * separate exhaustive S-side search; disagreement with the profile is an
 * internal error.
 */
inline HoleNumberCertificate hole_number(const Graph& g) {
  if (g.order() < 2) throw precondition_error("bipartite-hole-number requires n >= 2");
  const CoverageProfile f = coverage_profile(g);
  auto [value, blocking] = hole_number_from_profile(f);
  if (find_hole(g, blocking.first, blocking.second))
    throw std::logic_error("coverage profile disagrees with direct hole search");
  HoleNumberCertificate cert{value, blocking, {}};
  for (int s = 0; s <= value; ++s) {
    auto w = find_hole(g, s, value - s);
    if (!w) throw std::logic_error("coverage profile promised a hole that find_hole cannot produce");
    cert.full_row.push_back(*w);
  }
  return cert;
}

}  // namespace holeham
