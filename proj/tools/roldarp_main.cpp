// Command-line entry point: generate instances, run the online algorithm and
// the exact oracle, duel policies against the adaptive adversaries, check
// competitive bounds, reduce to bipartite form, and aggregate reports.
//
// Exit codes: 0 success, 1 bound violated or infeasible input, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "roldarp/adversary.hpp"
#include "roldarp/analysis.hpp"
#include "roldarp/bipartite.hpp"
#include "roldarp/json_io.hpp"
#include "roldarp/oracle.hpp"
#include "roldarp/random_instances.hpp"
#include "roldarp/sbp.hpp"

namespace {

using namespace roldarp;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

Rational parse_rational(const std::string& text) {
  try {
    return Rational::from_string(text);
  } catch (const std::exception&) {
    throw Error(ErrorCode::kParseError, "not a rational: " + text);
  }
}

void emit(const Json& payload, const std::string& out_path, const std::string& summary) {
  if (out_path.empty()) {
    std::cout << dump_json(payload);
  } else {
    write_text_atomic(out_path, dump_json(payload));
    std::cout << summary << " -> " << out_path << "\n";
  }
}

Instance load_instance(const std::string& path) {
  return instance_from_json(parse_json_text(read_text_file(path)));
}

OracleOptions oracle_options_from_env() {
  OracleOptions opts;
  if (const char* cap = std::getenv("ROLDARP_SEARCH_CAP")) {
    opts.max_requests = static_cast<std::size_t>(std::strtoull(cap, nullptr, 10));
  }
  return opts;
}

/// '*' matches any run of characters, '?' matches one; no classes.
bool glob_match(const std::string& pattern, const std::string& name) {
  std::size_t p = 0, n = 0, star = std::string::npos, mark = 0;
  while (n < name.size()) {
    if (p < pattern.size() && (pattern[p] == '?' || pattern[p] == name[n])) {
      ++p;
      ++n;
    } else if (p < pattern.size() && pattern[p] == '*') {
      star = p++;
      mark = n;
    } else if (star != std::string::npos) {
      p = star + 1;
      n = ++mark;
    } else {
      return false;
    }
  }
  while (p < pattern.size() && pattern[p] == '*') ++p;
  return p == pattern.size();
}

std::vector<std::string> expand_glob(const std::string& pattern) {
  std::filesystem::path p(pattern);
  std::filesystem::path dir = p.parent_path();
  if (dir.empty()) dir = ".";
  std::string file_pattern = p.filename().string();
  std::vector<std::string> matches;
  if (!std::filesystem::is_directory(dir)) return matches;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    if (glob_match(file_pattern, entry.path().filename().string())) {
      matches.push_back(entry.path().string());
    }
  }
  std::sort(matches.begin(), matches.end());
  return matches;
}

int run(int argc, char** argv) {
  CLI::App app{"revenue online dial-a-ride toolkit"};
  app.require_subcommand(1);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate instances");
  gen->require_subcommand(1);

  auto* fig1 = gen->add_subcommand("fig1", "static lower-bound family");
  fig1->set_help_flag("--help", "print help");  // frees -h for the --h parameter
  int fig1_f = 6;
  std::string fig1_h = "3", fig1_B = "1", fig1_eps = "1/8";
  std::string fig1_out, fig1_witness;
  fig1->add_option("--f", fig1_f, "even segment count > 2");
  fig1->add_option("--h", fig1_h, "half segment length (> 1, rational)");
  fig1->add_option("--B", fig1_B, "base revenue (rational)");
  fig1->add_option("--eps", fig1_eps, "small revenue (rational in (0,1))");
  fig1->add_option("-o,--out", fig1_out, "instance output path (default stdout)");
  fig1->add_option("--witness", fig1_witness, "also write the offline witness schedule");

  auto* random = gen->add_subcommand("random", "seeded random instance");
  RandomSpec spec;
  std::string random_k = "1/2", random_out;
  random->add_option("--vertices", spec.vertices, "vertex count");
  random->add_option("--requests", spec.requests, "request count");
  random->add_option("--seed", spec.seed, "PRNG seed");
  random->add_option("--f", spec.f, "segment count");
  random->add_option("--T", spec.T, "time limit (multiple of f)");
  random->add_flag("--uniform", spec.uniform, "all revenues 1");
  random->add_flag("--bipartite", spec.bipartite, "complete bipartite instance");
  random->add_option("--k", random_k, "bipartite min-edge factor (rational in (0,1])");
  random->add_option("-o,--out", random_out, "output path (default stdout)");

  // ---- run sbp ----
  auto* run_cmd = app.add_subcommand("run", "run an algorithm on an instance");
  run_cmd->require_subcommand(1);
  auto* run_sbp_cmd = run_cmd->add_subcommand("sbp", "segmented best path");
  std::string run_in, run_out;
  run_sbp_cmd->add_option("-i,--instance", run_in, "instance JSON")->required();
  run_sbp_cmd->add_option("-o,--out", run_out, "schedule output path");

  // ---- opt ----
  auto* opt_cmd = app.add_subcommand("opt", "exact offline optimum");
  std::string opt_in, opt_out, opt_horizon;
  opt_cmd->add_option("-i,--instance", opt_in, "instance JSON")->required();
  opt_cmd->add_option("--horizon", opt_horizon, "completion horizon (rational, default T)");
  opt_cmd->add_option("-o,--out", opt_out, "schedule output path");

  // ---- duel ----
  auto* duel = app.add_subcommand("duel", "adaptive adversary vs. an online policy");
  std::string duel_adversary, duel_policy = "sbp", duel_out;
  bool duel_uniform = false;
  long long duel_k = -1;
  std::string duel_T = "8", duel_X = "6", duel_eps = "1/100", duel_delta;
  int duel_f = 4;
  duel->add_option("--adversary", duel_adversary, "last-window | first-horizon")->required();
  duel->add_option("--policy", duel_policy, "sbp | idle");
  duel->add_flag("--uniform", duel_uniform, "uniform-revenue variant");
  duel->add_option("--k", duel_k, "batch size / payoff revenue");
  duel->add_option("--T", duel_T, "time limit (last-window)");
  duel->add_option("--f", duel_f, "segment count (last-window)");
  duel->add_option("--X", duel_X, "segment length (first-horizon)");
  duel->add_option("--eps", duel_eps, "small revenue (first-horizon nonuniform)");
  duel->add_option("--delta", duel_delta, "release lag override (rational)");
  duel->add_option("-o,--out", duel_out, "transcript output path");

  // ---- check ----
  auto* check = app.add_subcommand("check", "evaluate a bound on an instance");
  std::string check_bound_name, check_in, check_out, check_csv;
  check->add_option("--bound", check_bound_name, "thm4|thm6|thm7|thm8|lem3|lem8|lem9")->required();
  check->add_option("-i,--instance", check_in, "instance JSON")->required();
  check->add_option("-o,--out", check_out, "report output path");
  check->add_option("--csv", check_csv, "also write a one-row CSV");

  // ---- reduce ----
  auto* reduce = app.add_subcommand("reduce", "general -> bipartite reduction");
  std::string reduce_in, reduce_out, reduce_eps, reduce_map;
  reduce->add_option("-i,--instance", reduce_in, "instance JSON")->required();
  reduce->add_option("--eps", reduce_eps, "connector edge weight (rational)");
  reduce->add_option("-o,--out", reduce_out, "bipartite instance output path");
  reduce->add_option("--map", reduce_map, "vertex/request map output path");

  // ---- report ----
  auto* report_cmd = app.add_subcommand("report", "aggregate bound reports to CSV");
  std::string report_glob, report_csv;
  report_cmd->add_option("--glob", report_glob, "file pattern, e.g. 'out/*.json'")->required();
  report_cmd->add_option("--csv", report_csv, "CSV output path")->required();

  CLI11_PARSE(app, argc, argv);

  if (fig1->parsed()) {
    Fig1Params params{fig1_f, parse_rational(fig1_h), parse_rational(fig1_B),
                      parse_rational(fig1_eps)};
    Fig1Output out = gen_fig1(params);
    emit(instance_to_json(out.instance), fig1_out,
         "instance with " + std::to_string(out.instance.requests.size()) + " requests");
    if (!fig1_witness.empty()) {
      write_text_atomic(fig1_witness, dump_json(schedule_to_json(out.witness)));
      std::cout << "witness revenue " << out.witness_revenue << " -> " << fig1_witness << "\n";
    }
    return kExitOk;
  }
  if (random->parsed()) {
    spec.k = parse_rational(random_k);
    Instance inst = gen_random(spec);
    emit(instance_to_json(inst), random_out,
         "instance with " + std::to_string(inst.requests.size()) + " requests");
    return kExitOk;
  }
  if (run_sbp_cmd->parsed()) {
    Instance inst = load_instance(run_in);
    SbpResult result = run_sbp(inst);
    emit(schedule_to_json(result.schedule), run_out,
         "sbp revenue " + result.profile.total.to_string());
    if (run_out.empty()) std::cerr << "revenue " << result.profile.total << "\n";
    return kExitOk;
  }
  if (opt_cmd->parsed()) {
    Instance inst = load_instance(opt_in);
    OracleOptions opts = oracle_options_from_env();
    if (!opt_horizon.empty()) opts.horizon = parse_rational(opt_horizon);
    OracleResult result = optimal_offline(inst, opts);
    emit(schedule_to_json(result.schedule), opt_out, "opt revenue " + result.revenue.to_string());
    if (opt_out.empty()) std::cerr << "revenue " << result.revenue << "\n";
    return kExitOk;
  }
  if (duel->parsed()) {
    std::unique_ptr<OnlinePolicy> policy;
    if (duel_policy == "sbp") {
      policy = std::make_unique<SbpPolicy>();
    } else if (duel_policy == "idle") {
      policy = std::make_unique<IdlePolicy>();
    } else {
      throw Error(ErrorCode::kBadArgument, "unknown policy " + duel_policy);
    }
    AdversaryTranscript transcript;
    if (duel_adversary == "last-window") {
      LastWindowParams params;
      params.T = parse_rational(duel_T);
      params.f = duel_f;
      params.uniform = duel_uniform;
      if (duel_k > 0) params.k = duel_k;
      if (!duel_delta.empty()) params.delta = parse_rational(duel_delta);
      transcript = adaptive_last_window(*policy, params);
    } else if (duel_adversary == "first-horizon") {
      FirstHorizonParams params;
      params.uniform = duel_uniform;
      params.X = parse_rational(duel_X);
      if (duel_k > 0) params.k = duel_k;
      params.eps = parse_rational(duel_eps);
      if (!duel_delta.empty()) params.delta = parse_rational(duel_delta);
      transcript = adaptive_first_horizon(*policy, params);
    } else {
      throw Error(ErrorCode::kBadArgument, "unknown adversary " + duel_adversary);
    }
    emit(transcript_to_json(transcript), duel_out,
         "case " + transcript.fired_case + ", policy " + transcript.policy_revenue.to_string() +
             ", opt " + transcript.opt_revenue.to_string());
    return kExitOk;
  }
  if (check->parsed()) {
    auto bound = bound_from_string(check_bound_name);
    if (!bound) throw Error(ErrorCode::kBadArgument, "unknown bound " + check_bound_name);
    Instance inst = load_instance(check_in);
    BoundReport result = check_bound(inst, *bound, oracle_options_from_env());
    result.instance_id = check_in;
    emit(bound_report_to_json(result), check_out,
         std::string(to_string(result.bound)) + (result.holds ? " holds" : " VIOLATED"));
    if (!check_csv.empty()) {
      write_text_atomic(check_csv,
                        bound_report_csv_header() + "\n" + bound_report_csv_row(result) + "\n");
    }
    return result.holds ? kExitOk : kExitViolation;
  }
  if (reduce->parsed()) {
    Instance inst = load_instance(reduce_in);
    std::optional<Rational> eps;
    if (!reduce_eps.empty()) eps = parse_rational(reduce_eps);
    BipartiteReduction red = to_bipartite(inst, eps);
    emit(instance_to_json(red.instance), reduce_out,
         "bipartite instance, T' = " + red.instance.T.to_string());
    if (!reduce_map.empty()) {
      Json map;
      map["eps"] = rational_to_json(red.eps);
      map["delta"] = rational_to_json(red.delta);
      Json vertices;
      for (const auto& [orig, copies] : red.vertex_map) {
        Json pair = Json::array();
        pair.push_back(copies.first);
        pair.push_back(copies.second);
        vertices[orig] = std::move(pair);
      }
      map["vertices"] = std::move(vertices);
      map["requests"] = red.request_map;
      write_text_atomic(reduce_map, dump_json(map));
    }
    return kExitOk;
  }
  if (report_cmd->parsed()) {
    std::vector<std::string> files = expand_glob(report_glob);
    std::string csv = bound_report_csv_header() + "\n";
    bool any_violated = false;
    for (const std::string& path : files) {
      try {
        BoundReport r = bound_report_from_json(parse_json_text(read_text_file(path)));
        if (r.instance_id.empty()) r.instance_id = path;
        csv += bound_report_csv_row(r) + "\n";
        if (!r.holds) any_violated = true;
      } catch (const Error& e) {
        std::cerr << "skipping " << path << ": " << e.what() << "\n";
      }
    }
    write_text_atomic(report_csv, csv);
    std::cout << files.size() << " files -> " << report_csv << "\n";
    return any_violated ? kExitViolation : kExitOk;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kInvalidInstance:
      case ErrorCode::kInfeasibleSchedule:
      case ErrorCode::kInfeasibleInput:
        return kExitViolation;
      default:
        return kExitUsage;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
