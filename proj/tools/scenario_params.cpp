#include "scenario_params.hpp"

#include <fstream>

#include "dynlist/errors.hpp"
#include "dynlist/trace.hpp"

namespace dynlist::cli {

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{
      "empty", "random", "bursty", "planted", "flicker",
      "membership-lb", "cycle-lb", "heavy-tail", "trace"};
  return names;
}

Scenario make_scenario(const ScenarioParams& params) {
  const auto& name = params.name;
  if (name == "empty") return gen_empty(params.n, params.rounds);
  if (name == "random")
    return gen_random_churn(params.n, params.rounds, params.p_insert, params.p_delete, params.seed);
  if (name == "bursty")
    return gen_bursty_churn(params.n, params.rounds, params.burst, params.p_insert, params.p_delete,
                            params.seed);
  if (name == "planted")
    return gen_planted_cliques(params.n, params.rounds, params.cliques, params.p_insert, params.p_delete,
                               params.seed)
        .scenario;
  if (name == "flicker") return gen_flicker_triangle(params.n);
  if (name == "membership-lb") {
    Pattern h;
    if (params.pattern == "path") {
      h = Pattern::path(params.pattern_size);
    } else if (params.pattern == "cycle") {
      h = Pattern::cycle(params.pattern_size);
    } else {
      throw ScenarioError("unknown pattern '" + params.pattern + "' (path or cycle)");
    }
    if (params.n + 2 < params.pattern_size) throw ScenarioError("pattern larger than the network");
    const std::size_t t = params.t == 0 ? params.n + 2 - params.pattern_size : params.t;
    return gen_membership_lb(h, params.n, t);
  }
  if (name == "cycle-lb") return gen_cycle_lb(params.k, params.n, params.seed);
  if (name == "heavy-tail") {
    HeavyTailParams ht;
    ht.tail_exponent = params.alpha;
    return gen_heavy_tail_churn(params.n, params.rounds, ht, params.seed);
  }
  if (name == "trace") {
    if (params.trace_in.empty()) throw ScenarioError("scenario 'trace' needs --trace-in");
    std::ifstream in(params.trace_in);
    if (!in) throw TraceFormatError("cannot open trace file '" + params.trace_in + "'");
    Scenario s = read_scenario(in, params.n);
    s.description = "trace " + params.trace_in;
    return s;
  }
  throw ScenarioError("unknown scenario '" + name + "'");
}

}  // namespace dynlist::cli
