#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holeham/graph.hpp"
#include "holeham/graph6.hpp"
#include "holeham/hamilton.hpp"
#include "holeham/holes.hpp"
#include "holeham/invariants.hpp"

namespace holeham {

/// Sufficient conditions for hamiltonicity, traceability and
/// hamiltonian-connectedness, each a (hypothesis, conclusion) pair.
enum class TheoremId {
  dirac,           // n >= 3, delta >= n/2                       => hamiltonian
  ore,             // n >= 3, sigma2 >= n                        => hamiltonian
  mcdiarmid_yolov, // n >= 3, delta >= alpha~                    => hamiltonian
  ore_hc,          // n >= 3, sigma2 >= n+1                      => hamiltonian-connected
  zhou_hc,         // n >= 3, delta >= alpha~ + 1                => hamiltonian-connected
  ore_hole,        // n >= 3, 2-connected, sigma2 >= 2 alpha~    => hamiltonian
  ore_hole_trace,  // n >= 2, connected, sigma2 >= 2 alpha~ - 2  => traceable
  ore_hole_hc,     // n >= 3, 3-connected, sigma2 >= 2 alpha~ + 1 => hamiltonian-connected
};

inline constexpr std::array<TheoremId, 8> all_theorems{
    TheoremId::dirac,   TheoremId::ore,      TheoremId::mcdiarmid_yolov, TheoremId::ore_hc,
    TheoremId::zhou_hc, TheoremId::ore_hole, TheoremId::ore_hole_trace,  TheoremId::ore_hole_hc,
};

enum class Conclusion { hamiltonian, traceable, hamiltonian_connected };

struct TheoremInfo {
  TheoremId id;
  std::string_view key;  // command-line / JSON name
  int min_order;
  Conclusion conclusion;
};

inline constexpr TheoremInfo theorem_info(TheoremId id) {
  switch (id) {
    case TheoremId::dirac: return {id, "dirac", 3, Conclusion::hamiltonian};
    case TheoremId::ore: return {id, "ore", 3, Conclusion::hamiltonian};
    case TheoremId::mcdiarmid_yolov: return {id, "mcdiarmid-yolov", 3, Conclusion::hamiltonian};
    case TheoremId::ore_hc: return {id, "ore-hc", 3, Conclusion::hamiltonian_connected};
    case TheoremId::zhou_hc: return {id, "zhou-hc", 3, Conclusion::hamiltonian_connected};
    case TheoremId::ore_hole: return {id, "ore-hole", 3, Conclusion::hamiltonian};
    case TheoremId::ore_hole_trace: return {id, "ore-hole-trace", 2, Conclusion::traceable};
    case TheoremId::ore_hole_hc: return {id, "ore-hole-hc", 3, Conclusion::hamiltonian_connected};
  }
  return {id, "?", 0, Conclusion::hamiltonian};
}

inline std::optional<TheoremId> parse_theorem(std::string_view key) {
  for (TheoremId id : all_theorems)
    if (theorem_info(id).key == key) return id;
  return std::nullopt;
}

/**
 * Invariants of one graph, each computed on first use and then cached.
 *
 * Theorem checks ask for the cheap values (order, degrees, sigma2, a
 * connectivity threshold) before alpha~, and alpha~ before any Hamilton
 * search, so most graphs never pay for the expensive ones.
 */
class GraphFacts {
public:
  explicit GraphFacts(Graph g) : g_(std::move(g)) {}

  const Graph& graph() const { return g_; }
  int order() const { return g_.order(); }

  int min_degree() {
    if (!delta_) delta_ = holeham::min_degree(g_);
    return *delta_;
  }
  DegreeSum sigma2() {
    if (!sigma2_) sigma2_ = holeham::sigma2(g_);
    return *sigma2_;
  }
  int kappa() {
    if (!kappa_) kappa_ = holeham::kappa(g_);
    return *kappa_;
  }
  bool connectivity_at_least(int k) {
    if (kappa_) return *kappa_ >= k;
    auto& slot = k_connected_.at(k);
    if (!slot) slot = is_k_connected(g_, k);
    return *slot;
  }
  int alpha_tilde() {
    if (!alpha_) alpha_ = bipartite_hole_number(g_);
    return *alpha_;
  }
  bool hamiltonian() {
    if (!hamiltonian_) hamiltonian_ = is_hamiltonian(g_);
    return *hamiltonian_;
  }
  bool traceable() {
    if (!traceable_) traceable_ = is_traceable(g_);
    return *traceable_;
  }
  bool hamiltonian_connected() {
    if (!hc_) hc_ = is_hamiltonian_connected(g_).connected;
    return *hc_;
  }

private:
  Graph g_;
  std::optional<int> delta_;
  std::optional<DegreeSum> sigma2_;
  std::optional<int> kappa_;
  std::array<std::optional<bool>, 4> k_connected_{};
  std::optional<int> alpha_;
  std::optional<bool> hamiltonian_;
  std::optional<bool> traceable_;
  std::optional<bool> hc_;
};

/// Outcome of a predicate; out_of_range when the graph is below the
/// theorem's minimum order (never counted as true or false).
enum class Check { holds, fails, out_of_range };

inline constexpr std::string_view to_string(Check c) {
  switch (c) {
    case Check::holds: return "true";
    case Check::fails: return "false";
    case Check::out_of_range: return "out_of_range";
  }
  return "?";
}

inline Check check_hypothesis(GraphFacts& facts, TheoremId id) {
  const int n = facts.order();
  if (n < theorem_info(id).min_order) return Check::out_of_range;
  auto verdict = [](bool b) { return b ? Check::holds : Check::fails; };
  switch (id) {
    case TheoremId::dirac: return verdict(2L * facts.min_degree() >= n);
    case TheoremId::ore: return verdict(facts.sigma2().at_least(n));
    case TheoremId::mcdiarmid_yolov: return verdict(facts.min_degree() >= facts.alpha_tilde());
    case TheoremId::ore_hc: return verdict(facts.sigma2().at_least(n + 1));
    case TheoremId::zhou_hc: return verdict(facts.min_degree() >= facts.alpha_tilde() + 1);
    case TheoremId::ore_hole:
      if (!facts.connectivity_at_least(2)) return Check::fails;
      return verdict(facts.sigma2().is_infinite() || facts.sigma2().at_least(2L * facts.alpha_tilde()));
    case TheoremId::ore_hole_trace:
      if (!facts.connectivity_at_least(1)) return Check::fails;
      return verdict(facts.sigma2().is_infinite() || facts.sigma2().at_least(2L * facts.alpha_tilde() - 2));
    case TheoremId::ore_hole_hc:
      if (!facts.connectivity_at_least(3)) return Check::fails;
      return verdict(facts.sigma2().is_infinite() || facts.sigma2().at_least(2L * facts.alpha_tilde() + 1));
  }
  return Check::out_of_range;
}

inline Check check_conclusion(GraphFacts& facts, TheoremId id) {
  if (facts.order() < theorem_info(id).min_order) return Check::out_of_range;
  bool ok = false;
  switch (theorem_info(id).conclusion) {
    case Conclusion::hamiltonian: ok = facts.hamiltonian(); break;
    case Conclusion::traceable: ok = facts.traceable(); break;
    case Conclusion::hamiltonian_connected: ok = facts.hamiltonian_connected(); break;
  }
  return ok ? Check::holds : Check::fails;
}

inline Check check_hypothesis(const Graph& g, TheoremId id) {
  GraphFacts facts(g);
  return check_hypothesis(facts, id);
}

inline Check check_conclusion(const Graph& g, TheoremId id) {
  GraphFacts facts(g);
  return check_conclusion(facts, id);
}

struct TheoremOutcome {
  TheoremId id;
  Check hypothesis = Check::out_of_range;
  /// Evaluated when the hypothesis holds, or for every in-range graph in survey mode.
  std::optional<Check> conclusion;

  bool consistent() const { return hypothesis != Check::holds || conclusion == Check::holds; }
};

/// Full picture of one graph against a set of theorems.
struct ConditionReport {
  std::string graph_id;
  std::string graph6;
  int n = 0;
  DegreeSum sigma2 = DegreeSum::infinite();
  std::optional<int> delta;
  std::optional<int> kappa;
  std::optional<int> alpha_tilde;  // absent for n < 2
  std::vector<TheoremOutcome> outcomes;

  bool consistent() const {
    for (const auto& o : outcomes)
      if (!o.consistent()) return false;
    return true;
  }
};

inline TheoremOutcome evaluate(GraphFacts& facts, TheoremId id, bool survey) {
  TheoremOutcome out{id, check_hypothesis(facts, id), std::nullopt};
  if (out.hypothesis == Check::holds || (survey && out.hypothesis != Check::out_of_range))
    out.conclusion = check_conclusion(facts, id);
  return out;
}

/// Fill in every invariant of the report (used for counterexamples and the CLI).
inline ConditionReport describe(GraphFacts& facts, std::string graph_id, std::vector<TheoremOutcome> outcomes) {
  ConditionReport r;
  r.graph_id = std::move(graph_id);
  r.graph6 = to_graph6(facts.graph());
  r.n = facts.order();
  r.sigma2 = facts.sigma2();
  if (r.n >= 1) {
    r.delta = facts.min_degree();
    r.kappa = facts.kappa();
  }
  if (r.n >= 2) r.alpha_tilde = facts.alpha_tilde();
  r.outcomes = std::move(outcomes);
  return r;
}

}  // namespace holeham
