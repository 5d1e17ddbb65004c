#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "holeham/generators.hpp"
#include "holeham/holes.hpp"
#include "holeham/sharpness.hpp"
#include "holeham/theorems.hpp"
#include "holeham/verify.hpp"

namespace holeham {

inline constexpr std::string_view tool_version = "1.0.0";
inline constexpr int schema_version = 1;

using json = nlohmann::ordered_json;

inline json sigma2_json(DegreeSum s) { return s.is_infinite() ? json("infinity") : json(s.value()); }

inline json vertex_list(VertexSet s) { return json(s.to_vector()); }

inline json to_json(const HoleWitness& w) { return {{"s_side", vertex_list(w.s_side)}, {"t_side", vertex_list(w.t_side)}}; }

inline json to_json(const CoverageProfile& f) { return json(f.values()); }

inline json to_json(const HoleNumberCertificate& c) {
  json row = json::array();
  for (const auto& w : c.full_row) row.push_back(to_json(w));
  return {{"value", c.value},
          {"blocking_pair", {c.blocking_pair.first, c.blocking_pair.second}},
          {"full_row", std::move(row)}};
}

inline json to_json(const TheoremOutcome& o) {
  json j;
  j["theorem"] = theorem_info(o.id).key;
  j["hypothesis"] = to_string(o.hypothesis);
  j["conclusion"] = o.conclusion ? json(to_string(*o.conclusion)) : json(nullptr);
  j["consistent"] = o.consistent();
  return j;
}

inline json to_json(const ConditionReport& r) {
  json j;
  j["graph_id"] = r.graph_id;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["sigma2"] = sigma2_json(r.sigma2);
  j["delta"] = r.delta ? json(*r.delta) : json(nullptr);
  j["kappa"] = r.kappa ? json(*r.kappa) : json(nullptr);
  j["alpha_tilde"] = r.alpha_tilde ? json(*r.alpha_tilde) : json(nullptr);
  json outcomes = json::array();
  for (const auto& o : r.outcomes) outcomes.push_back(to_json(o));
  j["theorems"] = std::move(outcomes);
  return j;
}

/// Tool metadata every report starts with.
inline json report_header(std::string_view command, std::uint64_t seed, json config) {
  json j;
  j["schema_version"] = schema_version;
  j["tool"] = "holeham";
  j["tool_version"] = tool_version;
  j["command"] = command;
  j["seed"] = seed;
  j["prng"] = gnp_prng_name;
  j["config"] = std::move(config);
  return j;
}

inline json to_json(const VerificationReport& r) {
  json j;
  j["corpus"] = r.corpus;
  json ids = json::array();
  for (TheoremId id : r.theorems) ids.push_back(theorem_info(id).key);
  j["theorems"] = std::move(ids);
  j["survey"] = r.survey;
  j["graphs_scanned"] = r.graphs_scanned;
  j["malformed_lines"] = r.malformed.size();
  json malformed = json::array();
  for (const auto& m : r.malformed) malformed.push_back({{"line", m.line}, {"text", m.text}, {"error", m.error}});
  j["malformed"] = std::move(malformed);
  json tallies = json::object();
  for (TheoremId id : r.theorems) {
    const TheoremTally& t = r.tallies.at(id);
    tallies[std::string(theorem_info(id).key)] = {
        {"in_range", t.in_range},
        {"out_of_range", t.out_of_range},
        {"hypothesis_true", t.hypothesis_true},
        {"conclusion_evaluated", t.conclusion_evaluated},
        {"conclusion_true", t.conclusion_true},
        {"counterexamples", t.counterexamples},
    };
  }
  j["per_theorem"] = std::move(tallies);
  json list = json::array();
  for (const auto& c : r.counterexamples) list.push_back(to_json(c.report));
  j["counterexample_count"] = r.counterexamples.size();
  j["counterexamples"] = std::move(list);
  j["all_consistent"] = r.all_consistent();
  return j;
}

inline json to_json(const SharpnessAudit& a) {
  json j;
  j["family"] = a.family;
  j["a"] = a.a;
  if (a.family == 1) j["b"] = a.b;
  j["graph6"] = to_graph6(a.graph);
  j["n"] = a.graph.order();
  j["sigma2"] = sigma2_json(a.sigma2);
  j["alpha_tilde"] = a.alpha_tilde;
  j["kappa"] = a.kappa;
  j["hamiltonian"] = a.hamiltonian;
  j["hamiltonian_connected"] = a.hamiltonian_connected;
  j["claims_asserted"] = a.claims_asserted;
  json claims = json::array();
  for (const auto& c : a.claims)
    claims.push_back({{"claim", c.name}, {"expected", c.expected}, {"observed", c.observed}, {"confirmed", c.confirmed}});
  j["claims"] = std::move(claims);
  j["all_confirmed"] = a.all_confirmed();
  return j;
}

}  // namespace holeham
