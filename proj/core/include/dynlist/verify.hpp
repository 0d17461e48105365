#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynlist/algorithms.hpp"
#include "dynlist/rng.hpp"

namespace dynlist {

class Simulation;

struct VerifyOptions {
  /// Up to this size every query target is checked each round; above it a
  /// seeded sample of `sample_targets` targets per node is used.
  std::size_t full_sweep_max_n = 16;
  std::size_t sample_targets = 64;
  /// Non-cycle candidates per round for the cycle check.
  std::size_t non_cycle_samples = 8;
  std::uint64_t seed = 0;
  /// Throw OracleMismatch at the first mismatch instead of recording it.
  bool throw_on_mismatch = false;
  std::size_t max_recorded = 20;
};

struct Mismatch {
  Round round = 0;
  NodeId node = 0;
  std::string what;
};

struct VerifyReport {
  std::size_t rounds_checked = 0;
  std::size_t consistent_node_checks = 0;  // (round, node) pairs compared
  std::size_t query_checks = 0;
  std::size_t cycle_checks = 0;      // cycles whose members were all consistent
  std::size_t non_cycle_checks = 0;  // non-cycle candidates queried
  std::size_t mismatches = 0;
  std::vector<Mismatch> samples;

  [[nodiscard]] bool ok() const noexcept { return mismatches == 0; }
};

/// Per-round oracle checks at every consistent node:
///   robust2hop        S equals the robust 2-hop set; edge queries agree
///   triangle, clique  S equals T^{v,2}; triangle (and 4-, 5-clique) queries agree
///   robust3hop        lower and upper sandwich bounds on the known edges
///   cycles45          every fully consistent 4/5-cycle of G_{i-1} is reported
///                     by a member; no non-cycle is reported
///   naive2hop         known edges equal the full 2-hop set; edge queries agree
/// Also checks that queries return Inconsistent exactly when the flag is off.
class Verifier {
 public:
  Verifier(AlgorithmKind kind, std::size_t n, VerifyOptions options);

  void observe(const Simulation& sim);
  [[nodiscard]] const VerifyReport& report() const noexcept { return report_; }

 private:
  void fail(Round round, NodeId node, std::string what);
  void check_listing(const Simulation& sim, NodeId v);
  void check_sandwich(const Simulation& sim, NodeId v);
  void check_cliques(const Simulation& sim, NodeId v);
  void check_cycles(const Simulation& sim);
  void check_flag(const Simulation& sim, NodeId v);
  [[nodiscard]] std::vector<Edge> query_targets(NodeId v);

  AlgorithmKind kind_;
  std::size_t n_;
  VerifyOptions options_;
  Rng rng_;
  VerifyReport report_;
};

}  // namespace dynlist
