#include "dynlist/engine.hpp"

#include <algorithm>
#include <sstream>

#include "dynlist/errors.hpp"

namespace dynlist {

double Metrics::max_ratio() const noexcept {
  double best = 0.0;
  for (double r : ratio_series) best = std::max(best, r);
  return best;
}

std::size_t Metrics::liveness_violations() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      barriers.begin(), barriers.end(), [](const BarrierRecord& b) { return b.rounds > b.bound; }));
}

double amortized_ratio(const Metrics& m) noexcept { return m.max_ratio(); }

Simulation::Simulation(AlgorithmConfig algorithm, std::size_t n, EngineConfig config)
    : algorithm_(algorithm),
      n_(n),
      config_(config),
      budget_(config.bandwidth_bits.value_or(bandwidth_budget(algorithm, n))),
      graph_(n),
      previous_(n) {
  nodes_.reserve(n);
  for (std::size_t v = 0; v < n; ++v)
    nodes_.push_back(make_node(algorithm_, static_cast<NodeId>(v), n, &graph_));
  metrics_.n = n;
  metrics_.bandwidth_bits = budget_;
}

bool Simulation::all_consistent() const {
  return std::all_of(nodes_.begin(), nodes_.end(),
                     [](const auto& node) { return node->is_consistent(); });
}

std::size_t Simulation::pending_items() const {
  std::size_t total = 0;
  for (const auto& node : nodes_) total += node->pending_items();
  return total;
}

const RoundTrace& Simulation::step(std::span<const EdgeChange> changes) {
  return run_round(changes, false);
}

std::size_t Simulation::stabilize(std::size_t max_rounds) {
  BarrierRecord rec;
  rec.started_after = round_;
  rec.pending_at_start = pending_items();
  rec.bound = 10 * std::max<std::size_t>(1, rec.pending_at_start);
  while (!all_consistent()) {
    if (rec.rounds >= max_rounds) {
      std::ostringstream msg;
      msg << "stabilization did not finish within " << max_rounds << " rounds (after round "
          << rec.started_after << ", " << pending_items() << " items pending)";
      throw StabilizeTimeout(msg.str());
    }
    run_round({}, true);
    ++rec.rounds;
  }
  metrics_.barriers.push_back(rec);
  return rec.rounds;
}

const RoundTrace& Simulation::run_round(std::span<const EdgeChange> changes, bool barrier) {
  const Round r = round_ + 1;
  GraphState before = graph_;
  RoundIndications indications = graph_.apply_changes(r, changes);
  previous_ = std::move(before);
  round_ = r;

  RoundTrace trace;
  trace.round = r;
  trace.barrier = barrier;

  for (std::size_t v = 0; v < n_; ++v) nodes_[v]->on_topology(indications[v]);

  std::vector<std::vector<Envelope>> inbox(n_);
  std::vector<NodeId> seen;
  for (std::size_t v = 0; v < n_; ++v) {
    const auto from = static_cast<NodeId>(v);
    auto out = nodes_[v]->select_outgoing();
    seen.clear();
    for (auto& env : out) {
      if (env.peer >= n_ || !graph_.adjacent(from, env.peer)) {
        std::ostringstream msg;
        msg << "round " << r << ": node " << from << " addressed non-neighbor " << env.peer;
        throw ProtocolViolation(msg.str());
      }
      if (std::find(seen.begin(), seen.end(), env.peer) != seen.end()) {
        std::ostringstream msg;
        msg << "round " << r << ": node " << from << " sent twice to " << env.peer;
        throw ProtocolViolation(msg.str());
      }
      seen.push_back(env.peer);
      if (env.msg.trivial()) continue;
      const std::size_t bits = message_bits(env.msg, n_);
      if (bits > budget_) {
        std::ostringstream msg;
        msg << "round " << r << ": message " << from << "->" << env.peer << " needs " << bits
            << " bits, budget " << budget_;
        throw BandwidthViolation(msg.str());
      }
      ++metrics_.messages;
      metrics_.bits += bits;
      metrics_.max_message_bits = std::max(metrics_.max_message_bits, bits);
      auto& widest = env.msg.item && std::holds_alternative<SnapshotChunk>(*env.msg.item)
                         ? metrics_.max_snapshot_message_bits
                         : metrics_.max_plain_message_bits;
      widest = std::max(widest, bits);
      if (config_.record_traces) trace.messages.push_back({from, env.peer, bits, env.msg});
      inbox[env.peer].push_back({from, std::move(env.msg)});
    }
  }

  // Senders were visited in id order, so every inbox is sorted by sender.
  for (std::size_t v = 0; v < n_; ++v) nodes_[v]->on_receive(inbox[v]);

  bool any_inconsistent = false;
  trace.consistent.resize(n_);
  for (std::size_t v = 0; v < n_; ++v) {
    trace.consistent[v] = nodes_[v]->is_consistent();
    any_inconsistent = any_inconsistent || !trace.consistent[v];
  }

  ++metrics_.rounds;
  metrics_.topology_changes += changes.size();
  if (any_inconsistent) ++metrics_.inconsistent_rounds;
  metrics_.changes_series.push_back(metrics_.topology_changes);
  metrics_.inconsistent_series.push_back(metrics_.inconsistent_rounds);
  metrics_.ratio_series.push_back(
      metrics_.topology_changes == 0
          ? 0.0
          : static_cast<double>(metrics_.inconsistent_rounds) /
                static_cast<double>(metrics_.topology_changes));

  if (config_.record_traces) {
    for (const auto& c : changes) trace.events.push_back({r, c.edge, c.kind});
    trace.indications = std::move(indications);
  }
  last_ = std::move(trace);
  if (config_.record_traces) traces_.push_back(last_);
  if (observer_) observer_(*this);
  return last_;
}

}  // namespace dynlist
