// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "holeham/holeham.hpp"
#include "oracles.hpp"

using namespace holeham;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] %2d %s: %s (%.1fs)\n", o.pass ? "PASS" : "FAIL", number, name.c_str(), o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

/// Counterexample counts per theorem over all labeled graphs with order in [lo, hi].
Outcome sweep(int lo, int hi, std::vector<TheoremId> ids) {
  const EnumerationSource src(lo, hi);
  const auto report = verify_corpus(src, ids);
  std::ostringstream out;
  out << report.graphs_scanned << " graphs";
  bool pass = report.graphs_scanned == src.size();
  for (TheoremId id : report.theorems) {
    const auto& t = report.tallies.at(id);
    out << "; " << theorem_info(id).key << " hypothesis " << t.hypothesis_true << ", counterexamples "
        << t.counterexamples;
    pass = pass && t.counterexamples == 0 && t.conclusion_true == t.hypothesis_true;
  }
  return {pass, out.str()};
}

template <typename Body>
void for_all_labeled(int lo, int hi, Body&& body) {
  for (int n = lo; n <= hi; ++n) {
    const LabeledGraphs graphs(n);
    for (std::uint64_t mask = 0; mask < graphs.count(); ++mask) body(graphs[mask]);
  }
}

Graph random_graph(std::mt19937_64& rng, int lo, int hi) {
  const int n = lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  const double p = 0.1 + 0.8 * static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return gnp(n, p, rng());
}

std::string fail_at(const Graph& g, const std::string& what) { return what + " at " + to_graph6(g); }

}  // namespace

int main() {
  criterion(1, "2-connected, sigma2 >= 2 alpha~ => hamiltonian, all graphs n=3..7", [] {
    return sweep(3, 7, {TheoremId::ore_hole});
  });

  criterion(2, "connected, sigma2 >= 2 alpha~ - 2 => traceable, all graphs n=2..7", [] {
    return sweep(2, 7, {TheoremId::ore_hole_trace});
  });

  criterion(3, "3-connected, sigma2 >= 2 alpha~ + 1 => hamiltonian-connected, all graphs n=4..7", [] {
    return sweep(4, 7, {TheoremId::ore_hole_hc});
  });

  criterion(4, "classical conditions, all graphs n=3..6", [] {
    return sweep(3, 6, {TheoremId::dirac, TheoremId::ore, TheoremId::mcdiarmid_yolov, TheoremId::ore_hc,
                        TheoremId::zhou_hc});
  });

  criterion(5, "first sharpness family a=1,2,3, b=3a+4", [] {
    Outcome o;
    std::ostringstream out;
    for (int a = 1; a <= 3; ++a) {
      const int b = 3 * a + 4;
      const auto audit = audit_sharpness1(a, b);
      // Independent recomputation of the measured values.
      const bool oracle_ok = oracle::sigma2(audit.graph) == audit.sigma2.value() &&
                             oracle::kappa(audit.graph) == audit.kappa && !dp::hamiltonian(audit.graph);
      const bool ok = audit.all_confirmed() && oracle_ok;
      out << (a > 1 ? "; " : "") << "a=" << a << " sigma2=" << audit.sigma2.to_string()
          << " alpha~=" << audit.alpha_tilde << " kappa=" << audit.kappa << (ok ? "" : " MISMATCH");
      o.pass = o.pass && ok;
    }
    o.detail = out.str();
    return o;
  });

  criterion(6, "second sharpness family a=6,7,8", [] {
    Outcome o;
    std::ostringstream out;
    for (int a = 6; a <= 8; ++a) {
      const auto audit = audit_sharpness2(a);
      bool hc_oracle = true;
      for (int u = 0; u < audit.graph.order() && hc_oracle; ++u)
        hc_oracle = dp::path_partners(audit.graph, u).size() == audit.graph.order() - 1;
      const bool ok = audit.claims_asserted && audit.all_confirmed() && !hc_oracle &&
                      oracle::alpha_tilde(audit.graph) == audit.alpha_tilde &&
                      oracle::kappa(audit.graph) == audit.kappa;
      out << (a > 6 ? "; " : "") << "a=" << a << " sigma2=" << audit.sigma2.to_string()
          << " alpha~=" << audit.alpha_tilde << " kappa=" << audit.kappa << (ok ? "" : " MISMATCH");
      o.pass = o.pass && ok;
    }
    o.detail = out.str();
    return o;
  });

  criterion(7, "hole number equals its dual form, all graphs n=2..7 and 500 random n<=12", [] {
    long checked = 0;
    std::string bad;
    auto check = [&](const Graph& g) {
      ++checked;
      if (bad.empty() && hole_number(g).value != hole_number_dual(g)) bad = fail_at(g, "mismatch");
    };
    for_all_labeled(2, 7, check);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 500; ++i) check(random_graph(rng, 2, 12));
    return Outcome{bad.empty(), bad.empty() ? std::to_string(checked) + " graphs agree" : bad};
  });

  criterion(8, "adding an edge never raises the hole number, 1000 samples n<=12", [] {
    std::mt19937_64 rng(8);
    int samples = 0;
    std::string bad;
    while (samples < 1000) {
      const Graph g = random_graph(rng, 2, 12);
      if (g.is_complete()) continue;
      std::vector<Edge> missing;
      for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
          if (!g.adjacent(u, v)) missing.push_back({u, v});
      const Edge e = missing[rng() % missing.size()];
      if (bad.empty() && bipartite_hole_number(g.with_edge(e.u, e.v)) > bipartite_hole_number(g))
        bad = fail_at(g, "increase after adding " + std::to_string(e.u) + "-" + std::to_string(e.v));
      ++samples;
    }
    return Outcome{bad.empty(), bad.empty() ? "1000 samples monotone" : bad};
  });

  criterion(9, "cone identities, all graphs n=2..7", [] {
    long checked = 0;
    std::string bad;
    for_all_labeled(2, 7, [&](const Graph& g) {
      if (!bad.empty()) return;
      ++checked;
      const Graph c = cone(g);
      if (is_hamiltonian(c) != is_traceable(g)) bad = fail_at(g, "traceable vs cone hamiltonian");
      else if (kappa(c) != kappa(g) + 1) bad = fail_at(g, "kappa");
      else if (bipartite_hole_number(c) != bipartite_hole_number(g)) bad = fail_at(g, "alpha~");
      else if (!g.is_complete() && !sigma2(c).at_least(sigma2(g).value() + 2)) bad = fail_at(g, "sigma2");
    });
    return Outcome{bad.empty(), bad.empty() ? std::to_string(checked) + " graphs" : bad};
  });

  criterion(10, "backtracking agrees with subset DP", [] {
    long pairs = 0;
    std::string bad;
    for_all_labeled(1, 6, [&](const Graph& g) {
      if (!bad.empty()) return;
      if (is_hamiltonian(g) != dp::hamiltonian(g)) bad = fail_at(g, "hamiltonicity");
      for (int u = 0; u < g.order() && bad.empty(); ++u) {
        const VertexSet partners = dp::path_partners(g, u);
        for (int v = 0; v < g.order(); ++v) {
          if (v == u) continue;
          ++pairs;
          if (static_cast<bool>(find_hamilton_path(g, u, v)) != partners.contains(v)) {
            bad = fail_at(g, "path " + std::to_string(u) + "-" + std::to_string(v));
            break;
          }
        }
      }
    });
    std::mt19937_64 rng(10);
    for (int i = 0; i < 300 && bad.empty(); ++i) {
      const Graph g = random_graph(rng, 3, 14);
      if (is_hamiltonian(g) != dp::hamiltonian(g)) bad = fail_at(g, "hamiltonicity");
    }
    return Outcome{bad.empty(),
                   bad.empty() ? "all graphs n<=6 (" + std::to_string(pairs) + " endpoint pairs), 300 random n<=14"
                               : bad};
  });

  criterion(11, "rotation closures yield Hamilton cycles, 1000 instances n<=10", [] {
    std::mt19937_64 rng(11);
    int instances = 0;
    int attempts = 0;
    std::string bad;
    while (instances < 1000 && bad.empty() && attempts < 1000000) {
      ++attempts;
      const int n = 3 + static_cast<int>(rng() % 8);
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      std::shuffle(order.begin(), order.end(), rng);
      GraphBuilder b(gnp(n, 0.25, rng()));
      for (int x = 0; x + 1 < n; ++x) b.add_edge(order[x], order[x + 1]);
      const Graph g = b.build();
      const HamiltonSequence p(g, order, SequenceKind::path);
      const auto moves = applicable_rotations(p);
      if (moves.empty()) continue;
      const RotationMove m = moves[rng() % moves.size()];
      if (!oracle::valid_sequence(g, rotation_close(p, m).vertices(), true)) bad = fail_at(g, "invalid closure");
      ++instances;
    }
    return Outcome{bad.empty() && instances == 1000,
                   bad.empty() ? std::to_string(instances) + " closures valid" : bad};
  });

  criterion(12, "named values", [] {
    struct Row {
      const char* name;
      long expected;
      long library;
      long brute;
    };
    std::vector<Row> rows{
        {"alpha~(C5)", 3, bipartite_hole_number(cycle_graph(5)), oracle::alpha_tilde(cycle_graph(5))},
        {"alpha~(Petersen)", 5, bipartite_hole_number(petersen_graph()), oracle::alpha_tilde(petersen_graph())},
        {"kappa(Petersen)", 3, kappa(petersen_graph()), oracle::kappa(petersen_graph())},
        {"sigma2(C4)", 4, sigma2(cycle_graph(4)).value(), *oracle::sigma2(cycle_graph(4))},
    };
    for (int n = 2; n <= 8; ++n) {
      rows.push_back({"alpha~(K_n)", 1, bipartite_hole_number(complete_graph(n)), oracle::alpha_tilde(complete_graph(n))});
      rows.push_back({"alpha~(empty_n)", n, bipartite_hole_number(empty_graph(n)), oracle::alpha_tilde(empty_graph(n))});
    }
    std::string bad;
    for (const auto& r : rows)
      if (bad.empty() && (r.library != r.expected || r.brute != r.expected))
        bad = std::string(r.name) + " expected " + std::to_string(r.expected) + ", library " +
              std::to_string(r.library) + ", brute force " + std::to_string(r.brute);
    return Outcome{bad.empty(), bad.empty() ? std::to_string(rows.size()) + " values match" : bad};
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
