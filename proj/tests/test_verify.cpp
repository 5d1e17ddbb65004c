#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "holeham/enumerate.hpp"
#include "holeham/verify.hpp"
#include "oracles.hpp"

using namespace holeham;

namespace {

std::vector<TheoremId> every_theorem() { return {all_theorems.begin(), all_theorems.end()}; }

}  // namespace

TEST_CASE("labeled enumeration uses the same pair order as graph6") {
  const LabeledGraphs four(4);
  CHECK(four.count() == 64);
  for (std::uint64_t mask = 0; mask < four.count(); ++mask) CHECK(four[mask] == oracle::graph_from_mask(4, mask));

  int connected = 0;
  enumerate_labeled(4, [](const Graph& g) { return g.is_connected(); }, [&](std::uint64_t, const Graph&) { ++connected; });
  CHECK(connected == 38);
  CHECK_THROWS_AS(LabeledGraphs(8), precondition_error);
}

TEST_CASE("enumeration source sizes and ids") {
  const EnumerationSource src(2, 4);
  CHECK(src.size() == 2 + 8 + 64);
  CHECK(src.item(0).id == "n2:mask0");
  CHECK(src.item(2).id == "n3:mask0");
  CHECK(src.item(73).id == "n4:mask63");
  CHECK(*src.item(73).graph == complete_graph(4));
  CHECK_THROWS_AS(EnumerationSource(5, 4), precondition_error);
}

TEST_CASE("sweep over n <= 5 has no counterexamples and counts ranges") {
  const EnumerationSource src(1, 5);
  const auto report = verify_corpus(src, every_theorem());
  CHECK(report.graphs_scanned == src.size());
  CHECK(report.all_consistent());
  for (TheoremId id : all_theorems) {
    const auto& t = report.tallies.at(id);
    const std::uint64_t below = theorem_info(id).min_order == 2 ? 1 : 1 + 2;
    CHECK(t.out_of_range == below);
    CHECK(t.in_range + t.out_of_range == src.size());
    CHECK(t.counterexamples == 0);
    CHECK(t.conclusion_evaluated == t.hypothesis_true);
    CHECK(t.conclusion_true == t.hypothesis_true);
  }
}

TEST_CASE("survey mode evaluates every in-range conclusion") {
  const EnumerationSource src(2, 5);
  const auto report = verify_corpus(src, {TheoremId::ore_hole, TheoremId::dirac}, {.survey = true});
  for (const auto& [id, t] : report.tallies) {
    CHECK(t.conclusion_evaluated == t.in_range);
    CHECK(t.conclusion_true >= t.hypothesis_true);
    CHECK(t.conclusion_true <= t.in_range);
  }
  CHECK(report.tallies.at(TheoremId::dirac).out_of_range == 2);  // both graphs on 2 vertices
}

TEST_CASE("reports do not depend on the worker count") {
  const EnumerationSource src(2, 6);
  const auto one = verify_corpus(src, every_theorem(), {.survey = true, .workers = 1});
  const auto four = verify_corpus(src, every_theorem(), {.survey = true, .workers = 4});
  CHECK(one.graphs_scanned == four.graphs_scanned);
  CHECK(one.tallies == four.tallies);
  CHECK(one.counterexamples.size() == four.counterexamples.size());
  CHECK_THROWS_AS(verify_corpus(src, every_theorem(), {.workers = 0}), precondition_error);
}

TEST_CASE("corpus with malformed lines") {
  std::istringstream in("Dhc\nnot graph6\nIheA@GUAo\n\n@\n");
  const CorpusSource src("test corpus", read_graph6_corpus(in));
  const auto report = verify_corpus(src, {TheoremId::ore_hole, TheoremId::ore_hole_trace}, {.workers = 2});
  CHECK(report.graphs_scanned == 3);
  REQUIRE(report.malformed.size() == 1);
  CHECK(report.malformed[0].line == 2);
  CHECK(report.malformed[0].text == "not graph6");
  CHECK(report.all_consistent());
  CHECK(report.tallies.at(TheoremId::ore_hole).out_of_range == 1);
  CHECK(report.tallies.at(TheoremId::ore_hole_trace).out_of_range == 1);
  CHECK(report.tallies.at(TheoremId::ore_hole).in_range == 2);
}

TEST_CASE("duplicate theorem ids are merged") {
  const EnumerationSource src(3, 3);
  const auto report = verify_corpus(src, {TheoremId::ore, TheoremId::ore});
  CHECK(report.theorems.size() == 1);
}
