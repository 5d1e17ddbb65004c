#pragma once

#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "holeham/graph.hpp"

namespace holeham {

/// Largest order for built-in exhaustive enumeration; larger sweeps should
/// ingest a graph6 corpus produced by an external generator.
inline constexpr int max_enumeration_order = 7;

/**
 * All labeled simple graphs on n vertices, indexed by edge mask.
 *
 * Bit b of the mask is the b-th pair in graph6 order (0,1) (0,2) (1,2)
 * (0,3) ..., so mask 0 is the empty graph and the last mask is K_n.
 */
class LabeledGraphs {
public:
  explicit LabeledGraphs(int n) : n_(n) {
    if (n < 1 || n > max_enumeration_order)
      throw precondition_error("labeled enumeration supports 1 <= n <= " + std::to_string(max_enumeration_order) +
                               "; use a graph6 corpus for larger orders");
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pairs_.push_back({i, j});
  }

  int order() const { return n_; }
  std::uint64_t count() const { return std::uint64_t{1} << pairs_.size(); }
  int pair_count() const { return static_cast<int>(pairs_.size()); }

  Graph operator[](std::uint64_t mask) const {
    GraphBuilder b(n_);
    for (std::size_t k = 0; k < pairs_.size(); ++k)
      if ((mask >> k) & 1U) b.add_edge(pairs_[k].u, pairs_[k].v);
    return b.build();
  }

private:
  int n_;
  std::vector<Edge> pairs_;
};

/// Visit every labeled graph on n vertices that passes `filter`, in ascending
/// edge-mask order. visit(mask, graph) may return false to stop early.
template <typename Filter, typename Visit>
void enumerate_labeled(int n, Filter&& filter, Visit&& visit) {
  const LabeledGraphs graphs(n);
  for (std::uint64_t mask = 0; mask < graphs.count(); ++mask) {
    Graph g = graphs[mask];
    if (!filter(g)) continue;
    if constexpr (std::is_same_v<decltype(visit(mask, g)), bool>) {
      if (!visit(mask, g)) return;
    } else {
      visit(mask, g);
    }
  }
}

}  // namespace holeham
