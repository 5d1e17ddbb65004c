#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "holeham/enumerate.hpp"
#include "holeham/graph6.hpp"
#include "holeham/theorems.hpp"

namespace holeham {

/// One element of a verification stream: a graph, or a line that failed to parse.
struct SourceItem {
  std::string id;
  std::optional<Graph> graph;
  std::size_t line = 0;  // corpus line number, 0 for generated graphs
  std::string text;      // raw line for malformed corpus entries
  std::string error;
};

/// Random-access stream of graphs, readable from several threads at once.
class GraphSource {
public:
  virtual ~GraphSource() = default;
  virtual std::string description() const = 0;
  virtual std::size_t size() const = 0;
  virtual SourceItem item(std::size_t index) const = 0;
};

/// Every labeled graph for each order in [lo, hi], orders ascending, masks ascending.
class EnumerationSource final : public GraphSource {
public:
  EnumerationSource(int lo, int hi) : lo_(lo), hi_(hi) {
    if (lo > hi) throw precondition_error("empty order range");
    std::size_t total = 0;
    for (int n = lo; n <= hi; ++n) {
      orders_.emplace_back(n);
      offsets_.push_back(total);
      total += orders_.back().count();
    }
    total_ = total;
  }

  std::string description() const override {
    return "labeled enumeration n=" + std::to_string(lo_) + ".." + std::to_string(hi_);
  }
  std::size_t size() const override { return total_; }
  SourceItem item(std::size_t index) const override {
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index) - 1;
    const auto k = static_cast<std::size_t>(it - offsets_.begin());
    const std::uint64_t mask = index - *it;
    SourceItem out;
    out.id = "n" + std::to_string(orders_[k].order()) + ":mask" + std::to_string(mask);
    out.graph = orders_[k][mask];
    return out;
  }

private:
  int lo_;
  int hi_;
  std::vector<LabeledGraphs> orders_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
};

/// A parsed graph6 corpus; malformed lines stay in the stream as errors.
class CorpusSource final : public GraphSource {
public:
  CorpusSource(std::string description, std::vector<CorpusEntry> entries)
      : description_(std::move(description)), entries_(std::move(entries)) {}

  std::string description() const override { return description_; }
  std::size_t size() const override { return entries_.size(); }
  SourceItem item(std::size_t index) const override {
    const CorpusEntry& e = entries_[index];
    SourceItem out;
    out.id = "line" + std::to_string(e.line_number);
    out.graph = e.graph;
    out.line = e.line_number;
    out.text = e.text;
    out.error = e.error;
    return out;
  }

private:
  std::string description_;
  std::vector<CorpusEntry> entries_;
};

struct TheoremTally {
  std::uint64_t in_range = 0;
  std::uint64_t out_of_range = 0;
  std::uint64_t hypothesis_true = 0;
  std::uint64_t conclusion_evaluated = 0;
  std::uint64_t conclusion_true = 0;
  std::uint64_t counterexamples = 0;

  TheoremTally& operator+=(const TheoremTally& o) {
    in_range += o.in_range;
    out_of_range += o.out_of_range;
    hypothesis_true += o.hypothesis_true;
    conclusion_evaluated += o.conclusion_evaluated;
    conclusion_true += o.conclusion_true;
    counterexamples += o.counterexamples;
    return *this;
  }
  friend bool operator==(const TheoremTally&, const TheoremTally&) = default;
};

struct Counterexample {
  std::size_t index = 0;  // position in the source stream
  ConditionReport report;
};

struct MalformedLine {
  std::size_t line = 0;
  std::string text;
  std::string error;
};

struct VerifyOptions {
  bool survey = false;
  int workers = 1;
};

struct VerificationReport {
  std::string corpus;
  std::vector<TheoremId> theorems;
  bool survey = false;
  std::uint64_t graphs_scanned = 0;
  std::vector<MalformedLine> malformed;
  std::map<TheoremId, TheoremTally> tallies;
  std::vector<Counterexample> counterexamples;  // ascending stream index

  bool all_consistent() const { return counterexamples.empty(); }
};

namespace detail {

struct PartialReport {
  std::uint64_t scanned = 0;
  std::map<TheoremId, TheoremTally> tallies;
  std::vector<Counterexample> counterexamples;
  std::vector<std::pair<std::size_t, MalformedLine>> malformed;
};

inline void verify_one(const SourceItem& item, std::size_t index, const std::vector<TheoremId>& theorems, bool survey,
                       PartialReport& out) {
  if (!item.graph) {
    out.malformed.push_back({index, MalformedLine{item.line, item.text, item.error}});
    return;
  }
  ++out.scanned;
  GraphFacts facts(*item.graph);
  std::vector<TheoremOutcome> outcomes;
  bool bad = false;
  for (TheoremId id : theorems) {
    TheoremOutcome o = evaluate(facts, id, survey);
    TheoremTally& t = out.tallies[id];
    if (o.hypothesis == Check::out_of_range) {
      ++t.out_of_range;
    } else {
      ++t.in_range;
      if (o.hypothesis == Check::holds) ++t.hypothesis_true;
      if (o.conclusion) {
        ++t.conclusion_evaluated;
        if (*o.conclusion == Check::holds) ++t.conclusion_true;
      }
      if (!o.consistent()) {
        ++t.counterexamples;
        bad = true;
      }
    }
    outcomes.push_back(o);
  }
  if (bad) out.counterexamples.push_back({index, describe(facts, item.id, std::move(outcomes))});
}

}  // namespace detail

/**
 * Check hypothesis => conclusion for every graph in the source and every
 * theorem in the set. Conclusions are only solved where the hypothesis
 * holds unless opts.survey is set. Work is split across opts.workers threads
 * in fixed-size blocks; partial results are merged by summation and the
 * counterexample list is sorted by stream index, so the report does not
 * depend on the worker count.
 */
inline VerificationReport verify_corpus(const GraphSource& source, std::vector<TheoremId> theorems,
                                        const VerifyOptions& opts = {}) {
  if (opts.workers < 1) throw precondition_error("worker count must be >= 1");
  std::sort(theorems.begin(), theorems.end());
  theorems.erase(std::unique(theorems.begin(), theorems.end()), theorems.end());

  constexpr std::size_t block = 4096;
  const std::size_t total = source.size();
  std::atomic<std::size_t> next{0};
  std::mutex merge_lock;
  detail::PartialReport merged;

  auto work = [&] {
    detail::PartialReport local;
    while (true) {
      const std::size_t begin = next.fetch_add(block);
      if (begin >= total) break;
      const std::size_t end = std::min(total, begin + block);
      for (std::size_t i = begin; i < end; ++i)
        detail::verify_one(source.item(i), i, theorems, opts.survey, local);
    }
    std::lock_guard lock(merge_lock);
    merged.scanned += local.scanned;
    for (auto& [id, t] : local.tallies) merged.tallies[id] += t;
    for (auto& c : local.counterexamples) merged.counterexamples.push_back(std::move(c));
    for (auto& m : local.malformed) merged.malformed.push_back(std::move(m));
  };

  if (opts.workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < opts.workers; ++w) pool.emplace_back(work);
  }

  VerificationReport report;
  report.corpus = source.description();
  report.theorems = theorems;
  report.survey = opts.survey;
  report.graphs_scanned = merged.scanned;
  for (TheoremId id : theorems) report.tallies[id] = merged.tallies[id];
  std::sort(merged.counterexamples.begin(), merged.counterexamples.end(),
            [](const Counterexample& a, const Counterexample& b) { return a.index < b.index; });
  report.counterexamples = std::move(merged.counterexamples);
  std::sort(merged.malformed.begin(), merged.malformed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [_, m] : merged.malformed) report.malformed.push_back(std::move(m));
  return report;
}

}  // namespace holeham
