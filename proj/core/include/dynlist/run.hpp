#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dynlist/engine.hpp"
#include "dynlist/scenario.hpp"
#include "dynlist/verify.hpp"

namespace dynlist {

struct RunConfig {
  AlgorithmConfig algorithm;
  EngineConfig engine;
  bool verify = false;
  VerifyOptions verify_options;
  /// Round cap for each stabilize barrier.
  std::size_t stabilize_cap = 100000;
  /// Run a final barrier after the last slot.
  bool stabilize_at_end = false;
  /// Called after every round (after the verifier, if any).
  std::function<void(const Simulation&)> observer;
};

struct RunResult {
  Metrics metrics;
  std::vector<RoundTrace> traces;
  std::optional<VerifyReport> verify;
  std::string algorithm;
  std::string scenario;
  std::uint64_t seed = 0;
};

/// Plays the scenario slot by slot, resolving barriers with stabilize().
/// Throws what the engine throws, and OracleMismatch when verifying with
/// throw_on_mismatch.
[[nodiscard]] RunResult run(const Scenario& scenario, const RunConfig& config);

}  // namespace dynlist
