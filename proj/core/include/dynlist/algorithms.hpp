#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "dynlist/node.hpp"
#include "dynlist/timestamped.hpp"

namespace dynlist {

class GraphState;

enum class AlgorithmKind : std::uint8_t {
  Robust2Hop,
  Triangle,
  Clique,
  Robust3Hop,
  Cycles45,
  Naive2Hop,
};

[[nodiscard]] std::string_view algorithm_name(AlgorithmKind kind) noexcept;
[[nodiscard]] std::optional<AlgorithmKind> parse_algorithm(std::string_view name) noexcept;
[[nodiscard]] const std::vector<AlgorithmKind>& all_algorithms() noexcept;

/// Fault switches, test use only.
enum class Fault : std::uint8_t {
  None,
  IgnoreTimestampClause,   // neighbor-loss cleanup ignores the t' comparison
  SkipNeighborRemoval,     // neighbor-loss cleanup skipped entirely
  NoPatternBDeletions,     // triangle: excluded neighbors never hear deletions
};

[[nodiscard]] std::string_view fault_name(Fault f) noexcept;
[[nodiscard]] std::optional<Fault> parse_fault(std::string_view name) noexcept;

struct AlgorithmConfig {
  AlgorithmKind kind = AlgorithmKind::Robust2Hop;
  Fault fault = Fault::None;
  /// Naive algorithm snapshot width; 0 means id_bits(n).
  std::size_t naive_payload_bits = 0;
  /// Timestamp-based stores read true insertion times instead of keeping
  /// imaginary ones (the "ideal" twin used to check the two agree).
  bool ideal_timestamps = false;
};

/// `clock` is the global graph, consulted only with ideal_timestamps.
[[nodiscard]] std::unique_ptr<NodeProcess> make_node(const AlgorithmConfig& config, NodeId id,
                                                     std::size_t n,
                                                     const GraphState* clock = nullptr);

/// Per-message bit budget the engine enforces for this configuration.
[[nodiscard]] std::size_t bandwidth_budget(const AlgorithmConfig& config, std::size_t n);

}  // namespace dynlist
