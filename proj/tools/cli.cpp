#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dynlist/errors.hpp"
#include "dynlist/metrics_io.hpp"
#include "dynlist/run.hpp"
#include "dynlist/trace.hpp"
#include "scenario_params.hpp"

namespace dynlist::cli {

namespace {

struct RunOptions {
  std::string algo = "robust2hop";
  ScenarioParams scenario;
  bool verify = false;
  std::string metrics_out;
  std::string csv_out;
  std::string trace_out;
  std::string jsonl_out;
  std::size_t bandwidth = 0;
  std::size_t payload_bits = 0;
  std::string fault = "none";
  std::size_t stabilize_cap = 100000;
  bool final_stabilize = false;
};

void add_scenario_options(CLI::App& app, ScenarioParams& s) {
  app.add_option("--scenario", s.name, "Scenario generator")
      ->check(CLI::IsMember(scenario_names()));
  app.add_option("--n", s.n, "Number of nodes")->check(CLI::Range(2, 1 << 12));
  app.add_option("--rounds", s.rounds, "Scheduled rounds");
  app.add_option("--seed", s.seed, "Seed for all randomness");
  app.add_option("--p-ins", s.p_insert, "Per-round insertion probability")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--p-del", s.p_delete, "Per-round deletion probability")
      ->check(CLI::Range(0.0, 1.0));
  app.add_option("--burst", s.burst, "Rounds between barriers (bursty)");
  app.add_option("--pattern", s.pattern, "membership-lb pattern: path or cycle");
  app.add_option("--pattern-size", s.pattern_size, "membership-lb pattern size");
  app.add_option("--t", s.t, "membership-lb iterations (0: as many as fit)");
  app.add_option("--k", s.k, "cycle-lb cycle length");
  app.add_option("--alpha", s.alpha, "heavy-tail session exponent");
  app.add_option("--cliques", s.cliques, "planted clique sizes");
  app.add_option("--trace-in", s.trace_in, "Event trace to replay (scenario 'trace')");
}

void add_run_options(CLI::App& app, RunOptions& o) {
  std::vector<std::string> algos;
  for (auto k : all_algorithms()) algos.emplace_back(algorithm_name(k));
  app.add_option("--algo", o.algo, "Algorithm")->check(CLI::IsMember(algos));
  add_scenario_options(app, o.scenario);
  app.add_option("--metrics-out", o.metrics_out, "Write metrics JSON here (default: stdout)");
  app.add_option("--csv-out", o.csv_out, "Write the per-round CSV here");
  app.add_option("--trace-out", o.trace_out, "Write the scenario as an event trace");
  app.add_option("--jsonl-out", o.jsonl_out, "Write one JSON object per round");
  app.add_option("--bandwidth", o.bandwidth, "Per-message bit budget override");
  app.add_option("--payload-bits", o.payload_bits, "naive2hop snapshot bits per message");
  app.add_option("--stabilize-cap", o.stabilize_cap, "Round cap per stabilize barrier");
  app.add_flag("--final-stabilize", o.final_stabilize, "Stabilize after the last slot");
  // Test-only fault injection.
  app.add_option("--fault", o.fault)->group("");
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  return f;
}

RunConfig make_config(const RunOptions& o) {
  RunConfig cfg;
  cfg.algorithm.kind = *parse_algorithm(o.algo);
  const auto fault = parse_fault(o.fault);
  if (!fault) throw ScenarioError("unknown fault '" + o.fault + "'");
  cfg.algorithm.fault = *fault;
  cfg.algorithm.naive_payload_bits = o.payload_bits;
  if (o.bandwidth > 0) cfg.engine.bandwidth_bits = o.bandwidth;
  cfg.engine.record_traces = !o.jsonl_out.empty();
  cfg.verify = o.verify;
  cfg.verify_options.seed = o.scenario.seed;
  cfg.stabilize_cap = o.stabilize_cap;
  cfg.stabilize_at_end = o.final_stabilize;
  return cfg;
}

void print_summary(std::ostream& os, const RunResult& r) {
  const auto& m = r.metrics;
  os << "algorithm=" << r.algorithm << " n=" << m.n << " rounds=" << m.rounds
     << " changes=" << m.topology_changes << " inconsistent_rounds=" << m.inconsistent_rounds
     << " max_ratio=" << m.max_ratio() << " messages=" << m.messages << " bits=" << m.bits
     << " barriers=" << m.barriers.size() << '\n';
}

int report_verify(std::ostream& out, std::ostream& err, const RunResult& r) {
  if (!r.verify) return kExitOk;
  const auto& v = *r.verify;
  out << "verify: rounds=" << v.rounds_checked << " consistent_node_checks="
      << v.consistent_node_checks << " query_checks=" << v.query_checks;
  if (v.cycle_checks + v.non_cycle_checks > 0)
    out << " cycle_checks=" << v.cycle_checks << " non_cycle_checks=" << v.non_cycle_checks;
  out << " mismatches=" << v.mismatches << '\n';
  for (const auto& s : v.samples)
    err << "mismatch: round " << s.round << " node " << s.node << ": " << s.what << '\n';
  return v.ok() ? kExitOk : kExitVerifyFailed;
}

int do_run(const RunOptions& o, std::ostream& out, std::ostream& err) {
  const Scenario scenario = make_scenario(o.scenario);
  if (!o.trace_out.empty()) {
    auto f = open_out(o.trace_out);
    write_scenario(f, scenario);
  }
  const RunResult result = run(scenario, make_config(o));

  if (o.metrics_out.empty()) {
    write_metrics_json(out, result);
  } else {
    auto f = open_out(o.metrics_out);
    write_metrics_json(f, result);
    print_summary(out, result);
  }
  if (!o.csv_out.empty()) {
    auto f = open_out(o.csv_out);
    write_rounds_csv(f, result.metrics);
  }
  if (!o.jsonl_out.empty()) {
    auto f = open_out(o.jsonl_out);
    write_trace_jsonl(f, result.traces);
  }
  int code = report_verify(out, err, result);
  if (const auto late = result.metrics.liveness_violations(); late > 0) {
    err << "liveness: " << late << " barrier(s) exceeded their round bound\n";
    if (code == kExitOk) code = kExitInvariant;
  }
  return code;
}

struct BenchOptions {
  std::vector<std::string> algos{"robust2hop", "naive2hop"};
  std::vector<std::string> scenarios{"membership-lb"};
  std::vector<std::size_t> sizes{16, 32};
  std::vector<std::uint64_t> seeds{1};
  ScenarioParams base;
  std::string out;
  bool no_wall_time = false;
};

BenchRow bench_cell(const std::string& algo, const ScenarioParams& params, bool timed) {
  BenchRow row;
  row.algorithm = algo;
  row.scenario = params.name;
  row.n = params.n;
  row.seed = params.seed;
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto kind = parse_algorithm(algo);
    if (!kind) throw ScenarioError("unknown algorithm '" + algo + "'");
    RunConfig cfg;
    cfg.algorithm.kind = *kind;
    const auto result = run(make_scenario(params), cfg);
    const auto& m = result.metrics;
    row.status = m.liveness_violations() > 0 ? "liveness" : "ok";
    row.rounds = m.rounds;
    row.topology_changes = m.topology_changes;
    row.inconsistent_rounds = m.inconsistent_rounds;
    row.max_ratio = m.max_ratio();
    row.messages = m.messages;
    row.bits = m.bits;
  } catch (const BandwidthViolation&) {
    row.status = "bandwidth";
  } catch (const StabilizeTimeout&) {
    row.status = "timeout";
  } catch (const Error& e) {
    row.status = "error";
  }
  if (timed)
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();
  return row;
}

int do_bench(const BenchOptions& o, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (!o.out.empty()) {
    file = open_out(o.out);
    os = &file;
  }
  write_bench_header(*os);
  bool all_ok = true;
  for (const auto& scenario : o.scenarios)
    for (auto n : o.sizes)
      for (auto seed : o.seeds)
        for (const auto& algo : o.algos) {
          ScenarioParams params = o.base;
          params.name = scenario;
          params.n = n;
          params.seed = seed;
          const auto row = bench_cell(algo, params, !o.no_wall_time);
          all_ok = all_ok && row.status == "ok";
          write_bench_row(*os, row);
        }
  return all_ok ? kExitOk : kExitInvariant;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distributed dynamic subgraph listing simulator", "dynlist"};
  app.require_subcommand(1);

  RunOptions sim_opts;
  auto* simulate = app.add_subcommand("simulate", "Run one simulation and emit metrics");
  add_run_options(*simulate, sim_opts);
  simulate->add_flag("--verify", sim_opts.verify, "Check every consistent node against oracles");

  RunOptions ver_opts;
  ver_opts.scenario.n = 8;
  auto* verify = app.add_subcommand("verify", "Full oracle sweep every round (n <= 16)");
  add_run_options(*verify, ver_opts);

  BenchOptions bench_opts;
  auto* bench = app.add_subcommand("bench", "Run an algorithm x scenario x n matrix to CSV");
  bench->add_option("--algos", bench_opts.algos, "Algorithms")->delimiter(',');
  bench->add_option("--scenarios", bench_opts.scenarios, "Scenarios")->delimiter(',');
  bench->add_option("--sizes", bench_opts.sizes, "Network sizes")->delimiter(',');
  bench->add_option("--seeds", bench_opts.seeds, "Seeds")->delimiter(',');
  bench->add_option("--rounds", bench_opts.base.rounds, "Scheduled rounds");
  bench->add_option("--p-ins", bench_opts.base.p_insert, "Insertion probability");
  bench->add_option("--p-del", bench_opts.base.p_delete, "Deletion probability");
  bench->add_option("--k", bench_opts.base.k, "cycle-lb cycle length");
  bench->add_option("--out", bench_opts.out, "CSV output (default: stdout)");
  bench->add_flag("--no-wall-time", bench_opts.no_wall_time, "Report wall_ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) return do_run(sim_opts, out, err);
    if (verify->parsed()) {
      if (ver_opts.scenario.n > 16) {
        err << "verify sweeps every query target each round and is limited to n <= 16; "
               "use 'simulate --verify' for sampled checks on larger networks\n";
        return kExitUsage;
      }
      ver_opts.verify = true;
      return do_run(ver_opts, out, err);
    }
    return do_bench(bench_opts, out);
  } catch (const OracleMismatch& e) {
    err << "oracle mismatch: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const BandwidthViolation& e) {
    err << "bandwidth violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const ProtocolViolation& e) {
    err << "protocol violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const StabilizeTimeout& e) {
    err << "liveness: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace dynlist::cli
