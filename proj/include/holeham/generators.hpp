#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "holeham/graph.hpp"

namespace holeham {

/// Name and version of the generator behind gnp(). Reports embed this so a
/// corpus can be regenerated bit-for-bit by a later build.
inline constexpr std::string_view gnp_prng_name = "mt19937_64/53bit-uniform/v1";

/**
 * Erdos-Renyi G(n, p). Pairs (i, j), i < j, are visited in lexicographic
 * order; each draws one 64-bit word w from std::mt19937_64(seed) and keeps
 * the edge iff (w >> 11) * 2^-53 < p. Both steps are fixed by the standard,
 * so the result is identical across compilers and platforms.
 */
inline Graph gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw precondition_error("gnp requires 0 <= p <= 1");
  std::mt19937_64 rng(seed);
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) b.add_edge(i, j);
    }
  return b.build();
}

/// K_a and K_b side by side plus one bridge between vertex 0 and vertex a.
/// Requires b >= 3a + 4.
inline Graph sharpness1(int a, int b) {
  if (a < 1) throw precondition_error("sharpness1 requires a >= 1");
  if (b < 3 * a + 4) throw precondition_error("sharpness1 requires b ≥ 3a+4");
  return GraphBuilder(disjoint_union(complete_graph(a), complete_graph(b))).add_edge(0, a).build();
}

/// (K_{a-2} u K_1) v K_2. The K_1 vertex is a-2; the K_2 block is {a-1, a}.
inline Graph sharpness2(int a) {
  if (a < 3) throw precondition_error("sharpness2 requires a >= 3");
  return join(disjoint_union(complete_graph(a - 2), complete_graph(1)), complete_graph(2));
}

enum class Family { complete, cycle, path, empty, petersen, gnp, sharpness1, sharpness2 };

inline std::optional<Family> parse_family(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "cycle") return Family::cycle;
  if (name == "path") return Family::path;
  if (name == "empty") return Family::empty;
  if (name == "petersen") return Family::petersen;
  if (name == "gnp") return Family::gnp;
  if (name == "sharpness1") return Family::sharpness1;
  if (name == "sharpness2") return Family::sharpness2;
  return std::nullopt;
}

struct FamilyParams {
  std::optional<int> n;
  std::optional<int> a;
  std::optional<int> b;
  std::optional<double> p;
  std::optional<std::uint64_t> seed;
};

inline Graph generate(Family family, const FamilyParams& params) {
  auto need = [](const auto& field, const char* what) {
    if (!field) throw precondition_error(std::string("missing parameter ") + what);
    return *field;
  };
  switch (family) {
    case Family::complete: return complete_graph(need(params.n, "n"));
    case Family::cycle: return cycle_graph(need(params.n, "n"));
    case Family::path: return path_graph(need(params.n, "n"));
    case Family::empty: return empty_graph(need(params.n, "n"));
    case Family::petersen: return petersen_graph();
    case Family::gnp: return gnp(need(params.n, "n"), need(params.p, "p"), need(params.seed, "seed"));
    case Family::sharpness1: return sharpness1(need(params.a, "a"), need(params.b, "b"));
    case Family::sharpness2: return sharpness2(need(params.a, "a"));
  }
  throw precondition_error("unknown family");
}

}  // namespace holeham
