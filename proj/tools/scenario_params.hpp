#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dynlist/scenario.hpp"

namespace dynlist::cli {

/// A named scenario and its parameters, as given on the command line.
struct ScenarioParams {
  std::string name = "random";
  std::size_t n = 16;
  std::size_t rounds = 500;
  std::uint64_t seed = 1;
  double p_insert = 0.05;
  double p_delete = 0.05;
  std::size_t burst = 20;
  std::string pattern = "path";  // membership-lb: path | cycle
  std::size_t pattern_size = 3;
  std::size_t t = 0;             // membership-lb iterations; 0 means n - k + 2
  std::size_t k = 6;             // cycle-lb
  double alpha = 2.5;            // heavy-tail
  std::vector<std::size_t> cliques{3, 4, 5};
  std::string trace_in;
};

/// Names accepted by make_scenario.
[[nodiscard]] const std::vector<std::string>& scenario_names();

/// Throws ScenarioError for unknown names or bad parameters and
/// TraceFormatError for unreadable traces.
[[nodiscard]] Scenario make_scenario(const ScenarioParams& params);

}  // namespace dynlist::cli
