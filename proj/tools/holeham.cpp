// holeham: bipartite-hole-number, Hamilton problems and theorem sweeps
// from the command line.
//
// Exit codes: 0 success, 1 verify found counterexamples, 2 usage or parse
// failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "holeham/holeham.hpp"
#include "holeham/report_json.hpp"

namespace {

using holeham::json;

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;

/// Raised for bad input that should end the run with exit code 2.
struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string format;  // empty until parsed: each subcommand has its own default
  std::uint64_t seed = 0;
  int workers = 1;
  std::string output;
};

struct GraphInput {
  std::string graph6;
  std::string path;

  holeham::Graph load() const {
    std::string line = graph6;
    if (!path.empty()) {
      std::ifstream file;
      std::istream* in = &std::cin;
      if (path != "-") {
        file.open(path);
        if (!file) throw usage_error("cannot open " + path);
        in = &file;
      }
      line.clear();
      while (std::getline(*in, line))
        if (!line.empty() && line != "\r") break;
    }
    if (line.empty()) throw usage_error("no graph given (pass a graph6 string or --input)");
    try {
      return holeham::from_graph6(line);
    } catch (const holeham::graph6_error& e) {
      throw usage_error(std::string("graph6 parse error: ") + e.what());
    }
  }
};

void add_graph_input(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("graph", in.graph6, "Graph in graph6 format");
  cmd->add_option("--input", in.path, "Read the graph from the first line of a file ('-' for stdin)");
}

void add_common(CLI::App* cmd, CommonOptions& opts, std::string default_format) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->default_str(std::move(default_format));
  cmd->add_option("--seed", opts.seed, "Seed, recorded in every report")->capture_default_str();
  cmd->add_option("--workers", opts.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--output", opts.output, "Write the report to this file instead of stdout");
}

void emit(const CommonOptions& opts, const std::string& text) {
  if (opts.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(opts.output);
  if (!out) throw usage_error("cannot write " + opts.output);
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json common_config(const CommonOptions& opts) {
  return {{"format", opts.format}, {"workers", opts.workers}, {"output", opts.output}};
}

// ---------------------------------------------------------------------------

int run_invariants(const GraphInput& input, const CommonOptions& opts) {
  const holeham::Graph g = input.load();
  json j = holeham::report_header("invariants", opts.seed, common_config(opts));
  j["graph6"] = holeham::to_graph6(g);
  j["n"] = g.order();
  j["e"] = g.size();
  if (g.order() >= 1) {
    j["delta"] = holeham::min_degree(g);
    j["kappa"] = holeham::kappa(g);
  } else {
    j["delta"] = nullptr;
    j["kappa"] = nullptr;
  }
  j["sigma2"] = holeham::sigma2_json(holeham::sigma2(g));
  if (g.order() >= 2) {
    const auto cert = holeham::hole_number(g);
    j["alpha_tilde"] = cert.value;
    j["blocking_pair"] = {cert.blocking_pair.first, cert.blocking_pair.second};
  } else {
    j["alpha_tilde"] = nullptr;
    j["alpha_tilde_reason"] = "bipartite-hole-number needs n >= 2";
    j["blocking_pair"] = nullptr;
  }
  if (opts.format == "text") {
    std::ostringstream out;
    for (const char* key : {"n", "e", "delta", "sigma2", "kappa", "alpha_tilde", "blocking_pair"})
      out << key << ": " << j[key].dump() << "\n";
    emit(opts, out.str());
  } else {
    emit(opts, dump(j));
  }
  return exit_ok;
}

struct HoleOptions {
  std::optional<int> s;
  std::optional<int> t;
};

int run_holes(const GraphInput& input, const HoleOptions& hole, const CommonOptions& opts) {
  const holeham::Graph g = input.load();
  json j = holeham::report_header("holes", opts.seed, common_config(opts));
  j["graph6"] = holeham::to_graph6(g);
  j["n"] = g.order();
  std::ostringstream text;
  if (hole.s || hole.t) {
    if (!hole.s || !hole.t) throw usage_error("--s and --t must be given together");
    if (*hole.s < 0 || *hole.t < 0) throw usage_error("--s and --t must be nonnegative");
    const auto w = holeham::find_hole(g, *hole.s, *hole.t);
    j["s"] = *hole.s;
    j["t"] = *hole.t;
    j["hole"] = w ? holeham::to_json(*w) : json(nullptr);
    if (w) {
      text << "S:";
      for (int v : w->s_side) text << ' ' << v;
      text << "\nT:";
      for (int v : w->t_side) text << ' ' << v;
      text << "\n";
    } else {
      text << "none\n";
    }
  } else {
    const auto f = holeham::coverage_profile(g);
    j["coverage_profile"] = holeham::to_json(f);
    if (g.order() >= 2) {
      j["certificate"] = holeham::to_json(holeham::hole_number(g));
    } else {
      j["certificate"] = nullptr;
    }
    text << "coverage profile: " << j["coverage_profile"].dump() << "\n";
    if (g.order() >= 2)
      text << "alpha_tilde: " << j["certificate"]["value"].dump()
           << "\nblocking pair: " << j["certificate"]["blocking_pair"].dump() << "\n";
  }
  emit(opts, opts.format == "text" ? text.str() : dump(j));
  return exit_ok;
}

struct HamiltonOptions {
  std::string mode = "cycle";
  std::optional<int> u;
  std::optional<int> v;
};

std::string sequence_text(const holeham::HamiltonSequence& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.vertices().size(); ++i) out << (i ? " " : "") << s.vertices()[i];
  return out.str();
}

int run_hamilton(const GraphInput& input, const HamiltonOptions& ham, const CommonOptions& opts) {
  const holeham::Graph g = input.load();
  json j = holeham::report_header("hamilton", opts.seed, common_config(opts));
  j["graph6"] = holeham::to_graph6(g);
  j["n"] = g.order();
  j["mode"] = ham.mode;
  std::string text;
  auto put_witness = [&](const holeham::HamiltonResult& r, const char* refusal) {
    if (r.witness) {
      j["found"] = true;
      j["witness"] = r.witness->vertices();
      text = sequence_text(*r.witness) + "\n";
    } else {
      j["found"] = false;
      j["witness"] = nullptr;
      j["reason"] = r.reason == holeham::Refusal::order ? "order" : refusal;
      text = "none\n";
    }
  };
  if (ham.mode == "cycle") {
    put_witness(holeham::find_hamilton_cycle(g), "no such cycle");
  } else if (ham.mode == "path") {
    if (ham.u || ham.v) {
      if (!ham.u || !ham.v) throw usage_error("path mode needs both --u and --v, or neither");
      const int n = g.order();
      if (*ham.u < 0 || *ham.u >= n || *ham.v < 0 || *ham.v >= n) throw usage_error("vertex id out of range");
      if (*ham.u == *ham.v) throw usage_error("--u and --v must differ");
      j["u"] = *ham.u;
      j["v"] = *ham.v;
      put_witness(holeham::find_hamilton_path(g, *ham.u, *ham.v), "no such path");
    } else {
      put_witness(holeham::find_hamilton_path(g), "no such path");
    }
  } else {
    if (g.order() < 2) throw usage_error("connected mode needs n >= 2");
    const auto r = holeham::is_hamiltonian_connected(g);
    j["hamiltonian_connected"] = r.connected;
    j["failing_pair"] = r.failing_pair ? json{r.failing_pair->first, r.failing_pair->second} : json(nullptr);
    text = std::string("hamiltonian-connected: ") + (r.connected ? "true" : "false") + "\n";
    if (r.failing_pair)
      text += "failing pair: " + std::to_string(r.failing_pair->first) + " " + std::to_string(r.failing_pair->second) + "\n";
  }
  emit(opts, opts.format == "text" ? text : dump(j));
  return exit_ok;
}

struct GenerateOptions {
  std::string family;
  holeham::FamilyParams params;
  bool seed_given = false;
};

int run_generate(GenerateOptions gen, const CommonOptions& opts) {
  const auto family = holeham::parse_family(gen.family);
  if (!family) throw usage_error("unknown family " + gen.family);
  if (*family == holeham::Family::gnp) {
    if (!gen.seed_given) throw usage_error("gnp requires an explicit --seed");
    gen.params.seed = opts.seed;
  }
  holeham::Graph g;
  try {
    g = holeham::generate(*family, gen.params);
  } catch (const holeham::precondition_error& e) {
    throw usage_error(e.what());
  }
  const std::string line = holeham::to_graph6(g);
  if (opts.format == "json") {
    json config = common_config(opts);
    config["family"] = gen.family;
    if (gen.params.n) config["n"] = *gen.params.n;
    if (gen.params.a) config["a"] = *gen.params.a;
    if (gen.params.b) config["b"] = *gen.params.b;
    if (gen.params.p) config["p"] = *gen.params.p;
    json j = holeham::report_header("generate", opts.seed, std::move(config));
    j["n"] = g.order();
    j["e"] = g.size();
    j["graph6"] = line;
    emit(opts, dump(j));
  } else {
    emit(opts, line + "\n");
  }
  return exit_ok;
}

struct VerifyCliOptions {
  std::string enumerate;
  std::string corpus;
  std::vector<std::string> theorems;
  bool survey = false;
  bool timing = false;
};

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw usage_error("bad order range '" + text + "', expected lo..hi");
  }
}

int run_verify(const VerifyCliOptions& ver, const CommonOptions& opts) {
  if (ver.enumerate.empty() == ver.corpus.empty()) throw usage_error("give exactly one of --enumerate or --corpus");

  std::vector<holeham::TheoremId> ids;
  for (const auto& key : ver.theorems) {
    const auto id = holeham::parse_theorem(key);
    if (!id) throw usage_error("unknown theorem " + key);
    ids.push_back(*id);
  }
  if (ids.empty()) ids.assign(holeham::all_theorems.begin(), holeham::all_theorems.end());

  std::unique_ptr<holeham::GraphSource> source;
  if (!ver.enumerate.empty()) {
    const auto [lo, hi] = parse_range(ver.enumerate);
    try {
      source = std::make_unique<holeham::EnumerationSource>(lo, hi);
    } catch (const holeham::precondition_error& e) {
      throw usage_error(e.what());
    }
  } else {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (ver.corpus != "-") {
      file.open(ver.corpus);
      if (!file) throw usage_error("cannot open " + ver.corpus);
      in = &file;
    }
    source = std::make_unique<holeham::CorpusSource>("graph6 corpus " + ver.corpus, holeham::read_graph6_corpus(*in));
  }

  const auto started = std::chrono::steady_clock::now();
  const auto report = holeham::verify_corpus(*source, ids, {ver.survey, opts.workers});
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started).count();

  json config = common_config(opts);
  config["enumerate"] = ver.enumerate;
  config["corpus"] = ver.corpus;
  config["theorems"] = ver.theorems;
  config["survey"] = ver.survey;
  // workers is deliberately kept out of the echo: reports must not depend on it.
  config.erase("workers");
  json j = holeham::report_header("verify", opts.seed, std::move(config));
  const json body = holeham::to_json(report);
  for (const auto& [key, value] : body.items()) j[key] = value;
  if (ver.timing) j["wall_clock_ms"] = elapsed;

  if (opts.format == "text") {
    std::ostringstream out;
    out << report.corpus << ": " << report.graphs_scanned << " graphs";
    if (!report.malformed.empty()) out << ", " << report.malformed.size() << " malformed lines";
    out << "\n";
    for (holeham::TheoremId id : report.theorems) {
      const auto& t = report.tallies.at(id);
      out << "  " << holeham::theorem_info(id).key << ": hypothesis " << t.hypothesis_true << "/" << t.in_range
          << ", counterexamples " << t.counterexamples << "\n";
    }
    for (const auto& m : report.malformed) out << "  line " << m.line << ": " << m.error << "\n";
    for (const auto& c : report.counterexamples) out << "  counterexample " << c.report.graph_id << " " << c.report.graph6 << "\n";
    if (ver.timing) out << "  wall clock " << elapsed << " ms\n";
    emit(opts, out.str());
  } else {
    emit(opts, dump(j));
  }
  for (const auto& m : report.malformed) std::cerr << "line " << m.line << ": " << m.error << "\n";
  if (!report.malformed.empty()) return exit_usage;
  return report.all_consistent() ? exit_ok : exit_counterexample;
}

struct AuditOptions {
  int family = 1;
  int a = 1;
  std::optional<int> b;
};

int run_audit(const AuditOptions& aud, const CommonOptions& opts) {
  holeham::SharpnessAudit audit;
  try {
    if (aud.family == 1) {
      audit = holeham::audit_sharpness1(aud.a, aud.b.value_or(3 * aud.a + 4));
    } else if (aud.family == 2) {
      audit = holeham::audit_sharpness2(aud.a);
    } else {
      throw usage_error("--family must be 1 or 2");
    }
  } catch (const holeham::precondition_error& e) {
    throw usage_error(e.what());
  }
  json config = common_config(opts);
  config["family"] = aud.family;
  config["a"] = aud.a;
  if (aud.b) config["b"] = *aud.b;
  json j = holeham::report_header("audit", opts.seed, std::move(config));
  const json body = holeham::to_json(audit);
  for (const auto& [key, value] : body.items()) j[key] = value;
  if (opts.format == "text") {
    std::ostringstream out;
    for (const auto& c : audit.claims)
      out << (c.confirmed ? "confirmed " : "MISMATCH  ") << c.name << ": expected " << c.expected << ", observed "
          << c.observed << "\n";
    if (!audit.claims_asserted) out << "(claims not asserted for these parameters)\n";
    emit(opts, out.str());
  } else {
    emit(opts, dump(j));
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite-hole-number invariants, exact Hamilton solvers and theorem verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(holeham::tool_version));

  CommonOptions common;
  GraphInput input;

  auto* inv = app.add_subcommand("invariants", "n, e, delta, sigma2, kappa and alpha~ of one graph");
  add_graph_input(inv, input);
  add_common(inv, common, "json");

  HoleOptions hole;
  auto* holes = app.add_subcommand("holes", "Coverage profile and certificate, or one (s,t) hole search");
  add_graph_input(holes, input);
  add_common(holes, common, "json");
  holes->add_option("--s", hole.s, "S-side size");
  holes->add_option("--t", hole.t, "T-side size");

  HamiltonOptions ham;
  auto* hamilton = app.add_subcommand("hamilton", "Exact Hamilton cycle / path / connectedness");
  add_graph_input(hamilton, input);
  add_common(hamilton, common, "json");
  hamilton->add_option("--mode", ham.mode, "cycle, path or connected")
      ->check(CLI::IsMember({"cycle", "path", "connected"}))
      ->capture_default_str();
  hamilton->add_option("--u", ham.u, "Path start (path mode)");
  hamilton->add_option("--v", ham.v, "Path end (path mode)");

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Emit a graph from a named family as graph6");
  generate->add_option("family", gen.family, "complete|cycle|path|empty|petersen|gnp|sharpness1|sharpness2")->required();
  add_common(generate, common, "text");
  generate->add_option("--n", gen.params.n, "Order");
  generate->add_option("--a", gen.params.a, "Parameter a (sharpness families)");
  generate->add_option("--b", gen.params.b, "Parameter b (sharpness1)");
  generate->add_option("--p", gen.params.p, "Edge probability (gnp)");

  VerifyCliOptions ver;
  auto* verify = app.add_subcommand("verify", "Check every theorem over a graph stream");
  add_common(verify, common, "json");
  verify->add_option("--enumerate", ver.enumerate, "All labeled graphs with order in lo..hi (hi <= 7)");
  verify->add_option("--corpus", ver.corpus, "graph6 corpus file, '-' for stdin");
  verify->add_option("--theorem", ver.theorems, "Comma-separated theorem ids (default: all)")->delimiter(',');
  verify->add_flag("--survey", ver.survey, "Solve conclusions even where the hypothesis fails");
  verify->add_flag("--timing", ver.timing, "Add wall-clock time to the report (makes it non-reproducible)");

  AuditOptions aud;
  auto* audit = app.add_subcommand("audit", "Check the sharpness constructions' stated values");
  add_common(audit, common, "json");
  audit->add_option("--family", aud.family, "1 or 2")->required();
  audit->add_option("--a", aud.a, "Parameter a")->required();
  audit->add_option("--b", aud.b, "Parameter b (family 1; default 3a+4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (common.format.empty()) common.format = *generate ? "text" : "json";
  // For gnp the seed has to be given explicitly, not defaulted.
  gen.seed_given = generate->count("--seed") > 0;

  try {
    if (*inv) return run_invariants(input, common);
    if (*holes) return run_holes(input, hole, common);
    if (*hamilton) return run_hamilton(input, ham, common);
    if (*generate) return run_generate(gen, common);
    if (*verify) return run_verify(ver, common);
    if (*audit) return run_audit(aud, common);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const holeham::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
