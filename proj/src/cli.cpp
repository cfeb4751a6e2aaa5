#include "netaug/cli.hpp"

#include <chrono>
#include <fstream>
#include <json.hpp>
#include <stdexcept>

#include "netaug/oracles.hpp"
#include "netaug/pipelines.hpp"
#include "netaug/spanner.hpp"
#include "netaug/stream.hpp"

namespace netaug {
namespace {

using nlohmann::json;

std::size_t require_k(const CliOptions& opts, const StreamFile& s) {
  if (opts.k) return *opts.k;
  if (s.k) return *s.k;
  throw std::invalid_argument("command needs k (use --k or k= in the header)");
}

std::vector<Vertex> terminals_or_all(const CliOptions& opts, std::size_t n) {
  if (!opts.terminals.empty()) return opts.terminals;
  std::vector<Vertex> all(n);
  for (Vertex v = 0; v < n; ++v) all[v] = v;
  return all;
}

Requirements load_requirements(const CliOptions& opts, std::size_t n) {
  if (opts.requirements.empty()) throw std::invalid_argument("command needs --requirements");
  return parse_requirements_file(opts.requirements, n);
}

PipelineReport from_solution(const std::optional<EdgeSolution>& sol) {
  PipelineReport report;
  if (sol) {
    report.output = sol->chosen;
    report.total_weight = sol->weight;
    report.oracle_weight = sol->weight;
    report.feasible = true;
  }
  return report;
}

PipelineReport run_oracle(const CliOptions& opts, const StreamFile& s) {
  const auto base = s.base_edges();
  const auto links = s.links();
  if (opts.oracle_kind == "kcap") {
    const std::size_t k = require_k(opts, s);
    AugmentationInstance inst(base, links, s.n, k);
    const auto demand = [k](std::uint32_t) { return static_cast<std::uint32_t>(k); };
    return from_solution(oracle_cover(s.n, inst.base(), inst.links(), demand));
  }
  if (opts.oracle_kind == "stap") {
    const auto terminals = terminals_or_all(opts, s.n);
    if (links.size() > kMaxOracleLinks) {
      throw SizeLimitExceeded("exact STAP supports at most " + std::to_string(kMaxOracleLinks) + " links");
    }
    return from_solution(exact_stap(s.n, base, links, terminals));
  }
  if (opts.oracle_kind == "sndp") {
    const auto r = load_requirements(opts, s.n);
    return from_solution(exact_sndp(s.n, s.all_edges(), r));
  }
  if (opts.oracle_kind == "kecss") {
    const std::size_t k = require_k(opts, s);
    const auto demand = [k](std::uint32_t) { return static_cast<std::uint32_t>(k); };
    return from_solution(oracle_cover(s.n, {}, s.all_edges(), demand));
  }
  throw std::invalid_argument("unknown oracle '" + opts.oracle_kind + "' (expected kcap, stap, sndp or kecss)");
}

PipelineReport run_spanner(const CliOptions& opts, const StreamFile& s) {
  SpannerState spanner(s.n, opts.t, opts.epsilon);
  for (const auto& e : s.all_edges()) spanner.insert(e);
  PipelineReport report;
  report.output = spanner.edges();
  report.total_weight = total_weight(report.output);
  report.peak_stored["spanner"] = spanner.peak_stored();
  report.details["input_edges"] = s.events.size();
  report.details["bucket_width"] = static_cast<std::size_t>(spanner.bucket_width());
  report.feasible = true;
  return report;
}

PipelineReport dispatch(const CliOptions& opts, const StreamFile& s, std::optional<std::size_t>& k_used) {
  PipelineOptions p;
  p.t = opts.t;
  p.epsilon = opts.epsilon;
  p.with_oracle = opts.with_oracle;
  const std::string& c = opts.command;
  if (c == "spanner") return run_spanner(opts, s);
  if (c == "kcap-link") {
    if (!opts.cactus.empty()) return kcap_link_arrival(read_cactus_file(opts.cactus), s.links(), p);
    k_used = require_k(opts, s);
    return kcap_link_arrival(s.base_edges(), s.n, s.links(), *k_used, p);
  }
  if (c == "kcap-full") {
    k_used = require_k(opts, s);
    return kcap_fully_streaming(s.events, s.n, *k_used, p);
  }
  if (c == "stap") return stap_fully_streaming(s.events, s.n, terminals_or_all(opts, s.n), p);
  if (c == "sndp") {
    const auto r = load_requirements(opts, s.n);
    k_used = opts.k ? *opts.k : (s.k ? *s.k : std::max<std::size_t>(1, r.max_requirement()));
    return sndp(s.all_edges(), s.n, r, *k_used, p);
  }
  if (c == "kecss") {
    k_used = require_k(opts, s);
    return kecss(s.all_edges(), s.n, *k_used, p);
  }
  if (c == "oracle") {
    if (opts.oracle_kind == "kcap" || opts.oracle_kind == "kecss") k_used = require_k(opts, s);
    return run_oracle(opts, s);
  }
  throw std::invalid_argument("unknown command '" + c + "'");
}

json edge_count_map(const std::map<std::string, std::size_t>& m) {
  json out = json::object();
  for (const auto& [key, value] : m) out[key] = value;
  return out;
}

json to_json(const CliOptions& opts, const PipelineReport& r, std::optional<std::size_t> k, double wall_ms) {
  json doc;
  doc["command"] = opts.command == "oracle" ? "oracle " + opts.oracle_kind : opts.command;
  doc["parameters"] = {{"t", opts.t}, {"epsilon", opts.epsilon}, {"k", k ? json(*k) : json(nullptr)}};
  doc["output_weight"] = r.total_weight;
  doc["output_size"] = r.output.size();
  doc["peak_stored"] = edge_count_map(r.peak_stored);
  doc["oracle_weight"] = r.oracle_weight ? json(*r.oracle_weight) : json(nullptr);
  json ratio = nullptr;
  if (r.feasible && r.oracle_weight) {
    if (*r.oracle_weight > 0) {
      ratio = static_cast<double>(r.total_weight) / static_cast<double>(*r.oracle_weight);
    } else if (r.total_weight == 0) {
      ratio = 1.0;
    }
  }
  doc["ratio"] = ratio;
  doc["feasible"] = r.feasible;
  doc["wall_time_ms"] = wall_ms;
  doc["details"] = edge_count_map(r.details);
  json stages = json::array();
  for (const auto& st : r.stages) {
    stages.push_back({{"name", st.name},
                      {"weight", st.weight},
                      {"output_size", st.output_size},
                      {"oracle_weight", st.oracle_weight ? json(*st.oracle_weight) : json(nullptr)}});
  }
  doc["stages"] = stages;
  return doc;
}

void write_output(const std::string& path, const StreamFile& s, const PipelineReport& r) {
  StreamFile out;
  out.n = s.n;
  out.k = s.k;
  for (const auto& e : r.output) {
    const EventKind kind = e.id < s.events.size() ? s.events[e.id].kind : EventKind::kBase;
    out.events.push_back({kind, e});
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  write_stream(file, out);
}

}  // namespace

CliOutcome run(const CliOptions& opts) {
  CliOutcome outcome;
  try {
    const auto start = std::chrono::steady_clock::now();
    const StreamFile s = parse_stream_file(opts.input);
    std::optional<std::size_t> k_used = opts.k;
    const PipelineReport report = dispatch(opts, s, k_used);
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    outcome.report_json = to_json(opts, report, k_used, wall_ms).dump(2) + "\n";
    if (!opts.output.empty()) write_output(opts.output, s, report);
    if (!opts.report.empty()) {
      std::ofstream file(opts.report);
      if (!file) throw std::runtime_error("cannot write " + opts.report);
      file << outcome.report_json;
    }
    outcome.exit_code = report.feasible ? kExitOk : kExitInfeasible;
  } catch (const ParseError& e) {
    outcome.exit_code = kExitParseError;
    outcome.error = std::string("parse error: ") + e.what();
  } catch (const SizeLimitExceeded& e) {
    outcome.exit_code = kExitSizeGuard;
    outcome.error = std::string("size guard: ") + e.what();
  } catch (const std::exception& e) {
    outcome.exit_code = kExitError;
    outcome.error = e.what();
  }
  return outcome;
}

}  // namespace netaug
