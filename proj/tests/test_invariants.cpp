#include <catch2/catch_amalgamated.hpp>

#include "holeham/generators.hpp"
#include "holeham/invariants.hpp"
#include "oracles.hpp"

using namespace holeham;

TEST_CASE("DegreeSum ordering") {
  const DegreeSum inf = DegreeSum::infinite();
  CHECK(inf.is_infinite());
  CHECK(inf > DegreeSum(1000000));
  CHECK(inf > 5L);
  CHECK_FALSE(inf == 5L);
  CHECK(inf.at_least(1L << 40));
  CHECK(inf.to_string() == "infinity");
  CHECK(DegreeSum(4) == 4L);
  CHECK(DegreeSum(4) < 5L);
  CHECK_FALSE(DegreeSum(4).at_least(5));
}

TEST_CASE("sigma2 on named graphs") {
  CHECK(sigma2(cycle_graph(4)) == 4L);
  CHECK(sigma2(cycle_graph(5)) == 4L);
  CHECK(sigma2(petersen_graph()) == 6L);
  CHECK(sigma2(complete_graph(6)).is_infinite());
  CHECK(sigma2(complete_graph(1)).is_infinite());
  CHECK(sigma2(empty_graph(3)) == 0L);
  CHECK(sigma2(sharpness1(1, 7)) == 7L);
}

TEST_CASE("kappa on named graphs") {
  CHECK(kappa(petersen_graph()) == 3);
  CHECK(kappa(cycle_graph(5)) == 2);
  CHECK(kappa(complete_graph(5)) == 4);
  CHECK(kappa(complete_graph(1)) == 0);
  CHECK(kappa(empty_graph(4)) == 0);
  CHECK(kappa(path_graph(4)) == 1);
  CHECK(kappa(sharpness2(7)) == 2);
  CHECK_THROWS_AS(kappa(Graph(0)), precondition_error);
  CHECK(is_k_connected(petersen_graph(), 3));
  CHECK_FALSE(is_k_connected(petersen_graph(), 4));
  CHECK_FALSE(is_k_connected(complete_graph(3), 3));
}

TEST_CASE("sigma2, delta and kappa match brute force on every labeled graph n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      const Graph g = oracle::graph_from_mask(n, mask);
      const auto s = oracle::sigma2(g);
      if (s) {
        REQUIRE(sigma2(g) == static_cast<long>(*s));
      } else {
        REQUIRE(sigma2(g).is_infinite());
      }
      REQUIRE(kappa(g) == oracle::kappa(g));
      int delta = n;
      for (int v = 0; v < n; ++v) delta = std::min(delta, g.degree(v));
      REQUIRE(min_degree(g) == delta);
    }
  }
}

TEST_CASE("kappa matches brute force on random graphs up to n = 12") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const int n = 7 + static_cast<int>(seed % 6);
    const Graph g = gnp(n, 0.35 + 0.1 * static_cast<double>(seed % 5), seed);
    REQUIRE(kappa(g) == oracle::kappa(g));
    for (int k = 0; k <= 4; ++k) CHECK(is_k_connected(g, k) == (oracle::kappa(g) >= k));
  }
}

TEST_CASE("min_degree requires a vertex") { CHECK_THROWS_AS(min_degree(Graph(0)), precondition_error); }
