#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "dynlist/scenario.hpp"
#include "dynlist/types.hpp"

namespace dynlist {

// Line-oriented event traces:
//
//   <round> I <u> <v>      insertion of {u,v}
//   <round> D <u> <v>      deletion of {u,v}
//   <round> STABILIZE      barrier before the slot of <round>
//
// Round numbers are 1-based and non-decreasing. Blank lines and lines
// starting with '#' are ignored.

void write_events(std::ostream& os, std::span<const TopologyEvent> events);

/// Reads plain events. Barrier records are rejected. Throws TraceFormatError.
[[nodiscard]] std::vector<TopologyEvent> read_events(std::istream& is);

void write_scenario(std::ostream& os, const Scenario& scenario);

/// Reads a schedule. Rounds map to slots; missing rounds become empty slots.
/// The node count is max(min_nodes, largest id + 1). A `# n=<count>` header
/// line, as written by write_scenario, also raises the node count.
/// Throws TraceFormatError.
[[nodiscard]] Scenario read_scenario(std::istream& is, std::size_t min_nodes = 0);

}  // namespace dynlist
