#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dynlist/algorithms.hpp"
#include "dynlist/graph.hpp"
#include "dynlist/node.hpp"
#include "dynlist/scenario.hpp"

namespace dynlist {

struct SentMessage {
  NodeId from = 0;
  NodeId to = 0;
  std::size_t bits = 0;
  Message msg;
};

struct RoundTrace {
  Round round = 0;
  bool barrier = false;  // an event-free round run by stabilize()
  std::vector<TopologyEvent> events;
  RoundIndications indications;
  std::vector<SentMessage> messages;
  std::vector<bool> consistent;
};

struct BarrierRecord {
  Round started_after = 0;  // last round before the barrier
  std::size_t pending_at_start = 0;
  std::size_t bound = 0;    // 10 * max(1, pending_at_start)
  std::size_t rounds = 0;
};

struct Metrics {
  std::size_t n = 0;
  std::size_t rounds = 0;
  std::size_t topology_changes = 0;
  std::size_t inconsistent_rounds = 0;
  std::size_t messages = 0;
  std::size_t bits = 0;
  std::size_t max_message_bits = 0;
  /// Largest message carrying a snapshot chunk, and largest other message.
  std::size_t max_snapshot_message_bits = 0;
  std::size_t max_plain_message_bits = 0;
  std::size_t bandwidth_bits = 0;
  /// Prefix ratio inconsistent_rounds / max(1, topology_changes) per round;
  /// 0 while no change has happened.
  std::vector<double> ratio_series;
  std::vector<std::size_t> changes_series;
  std::vector<std::size_t> inconsistent_series;
  std::vector<BarrierRecord> barriers;

  [[nodiscard]] double max_ratio() const noexcept;
  /// Barriers that took longer than their bound.
  [[nodiscard]] std::size_t liveness_violations() const noexcept;
};

/// Max over prefixes of inconsistent/max(1, changes); 0 with no changes.
[[nodiscard]] double amortized_ratio(const Metrics& m) noexcept;

struct EngineConfig {
  /// Overrides the per-algorithm budget when set.
  std::optional<std::size_t> bandwidth_bits;
  bool record_traces = false;
};

/// Synchronous rounds over one network. Each round: topology changes and
/// indications, first half-round (local update, message selection),
/// delivery over present edges, second half-round (receipt), flags.
class Simulation {
 public:
  Simulation(AlgorithmConfig algorithm, std::size_t n, EngineConfig config = {});
  Simulation(const Simulation&) = delete;
  Simulation& operator=(const Simulation&) = delete;

  /// Runs one round with the given changes. Throws InvalidEvent,
  /// BandwidthViolation or ProtocolViolation.
  const RoundTrace& step(std::span<const EdgeChange> changes);

  /// Event-free rounds until every node is consistent. Returns the rounds
  /// taken; throws StabilizeTimeout after `max_rounds`.
  std::size_t stabilize(std::size_t max_rounds);

  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] Round round() const noexcept { return round_; }
  [[nodiscard]] const GraphState& graph() const noexcept { return graph_; }
  /// G_{i-1} for the current round i.
  [[nodiscard]] const GraphState& previous_graph() const noexcept { return previous_; }
  [[nodiscard]] NodeProcess& node(NodeId v) { return *nodes_.at(v); }
  [[nodiscard]] const NodeProcess& node(NodeId v) const { return *nodes_.at(v); }
  [[nodiscard]] const Metrics& metrics() const noexcept { return metrics_; }
  [[nodiscard]] const AlgorithmConfig& algorithm() const noexcept { return algorithm_; }
  [[nodiscard]] bool all_consistent() const;
  [[nodiscard]] std::size_t pending_items() const;
  [[nodiscard]] const RoundTrace& last_trace() const noexcept { return last_; }
  [[nodiscard]] const std::vector<RoundTrace>& traces() const noexcept { return traces_; }

  /// Called after every round, including stabilization rounds.
  void set_observer(std::function<void(const Simulation&)> observer) {
    observer_ = std::move(observer);
  }

 private:
  const RoundTrace& run_round(std::span<const EdgeChange> changes, bool barrier);

  AlgorithmConfig algorithm_;
  std::size_t n_;
  EngineConfig config_;
  std::size_t budget_;
  GraphState graph_;
  GraphState previous_;
  // The ideal-timestamp twin reads insertion times from graph_, so the
  // graph must not move after the nodes are built.
  std::vector<std::unique_ptr<NodeProcess>> nodes_;
  Round round_ = 0;
  Metrics metrics_;
  RoundTrace last_;
  std::vector<RoundTrace> traces_;
  std::function<void(const Simulation&)> observer_;
};

}  // namespace dynlist
