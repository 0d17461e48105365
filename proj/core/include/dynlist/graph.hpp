#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dynlist/types.hpp"

namespace dynlist {

/// Per-node indications produced by one round of topology changes.
/// Each list holds deletions first, then insertions, each in canonical edge
/// order.
using RoundIndications = std::vector<std::vector<Indication>>;

/// The evolving graph G_i on a fixed node set, with the true insertion time
/// t_e of every edge. Insertion times are for oracles and tests; node
/// algorithms only ever see the times of their own incident edges through
/// indications.
class GraphState {
 public:
  GraphState() = default;
  explicit GraphState(std::size_t n);

  [[nodiscard]] std::size_t node_count() const noexcept { return n_; }

  [[nodiscard]] bool edge_exists(const Edge& e) const;
  [[nodiscard]] bool adjacent(NodeId x, NodeId y) const;

  /// Latest insertion round of `e`, or kNeverInserted.
  [[nodiscard]] Round insertion_time(const Edge& e) const;

  [[nodiscard]] std::vector<NodeId> neighbors(NodeId v) const;
  [[nodiscard]] std::size_t degree(NodeId v) const;

  /// Present edges in canonical order.
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] std::size_t edge_count() const noexcept { return edge_count_; }

  /// Applies one round of events. Validation happens before any mutation,
  /// so a rejected batch leaves the state untouched. Deletions are applied
  /// before insertions. Throws InvalidEvent.
  RoundIndications apply_events(Round round, std::span<const TopologyEvent> events);

  /// Convenience wrapper binding changes to `round`.
  RoundIndications apply_changes(Round round, std::span<const EdgeChange> changes);

  friend bool operator==(const GraphState&, const GraphState&) = default;

 private:
  [[nodiscard]] std::size_t index(NodeId x, NodeId y) const noexcept {
    return static_cast<std::size_t>(x) * n_ + y;
  }
  void check_node(NodeId v) const;

  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<char> present_;
  std::vector<Round> inserted_;
};

}  // namespace dynlist
