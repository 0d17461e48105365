#include "dynlist/run.hpp"

namespace dynlist {

RunResult run(const Scenario& scenario, const RunConfig& config) {
  Simulation sim(config.algorithm, scenario.n, config.engine);
  std::optional<Verifier> verifier;
  if (config.verify) verifier.emplace(config.algorithm.kind, scenario.n, config.verify_options);
  if (verifier || config.observer) {
    sim.set_observer([&](const Simulation& s) {
      if (verifier) verifier->observe(s);
      if (config.observer) config.observer(s);
    });
  }

  for (const auto& slot : scenario.slots) {
    if (slot.stabilize_before) sim.stabilize(config.stabilize_cap);
    sim.step(slot.changes);
  }
  if (config.stabilize_at_end) sim.stabilize(config.stabilize_cap);

  RunResult result;
  result.metrics = sim.metrics();
  result.traces = sim.traces();
  if (verifier) result.verify = verifier->report();
  result.algorithm = std::string(algorithm_name(config.algorithm.kind));
  result.scenario = scenario.description;
  result.seed = scenario.seed;
  return result;
}

}  // namespace dynlist
