#pragma once

#include <deque>
#include <map>
#include <set>

#include "dynlist/node.hpp"

namespace dynlist {

/// Full 2-hop neighborhood listing: one FIFO per neighbor carrying this
/// node's neighborhood changes, preceded by a bitmap snapshot of the
/// neighborhood whenever the link to that neighbor appears. Answers
/// EdgeQuery.
class Naive2HopNode final : public NodeProcess {
 public:
  /// `payload_bits` is the snapshot width per message (0 means id_bits(n)).
  Naive2HopNode(NodeId id, std::size_t n, std::size_t payload_bits = 0);

  void on_topology(std::span<const Indication> indications) override;
  std::vector<Envelope> select_outgoing() override;
  void on_receive(std::span<const Envelope> inbox) override;
  [[nodiscard]] bool is_consistent() const override { return consistent_; }
  [[nodiscard]] QueryResult query(const Query& q) const override;
  [[nodiscard]] std::size_t pending_items() const override;
  [[nodiscard]] std::vector<Edge> known_edges() const override;

  [[nodiscard]] std::size_t payload_bits() const noexcept { return payload_bits_; }
  [[nodiscard]] std::size_t chunks_per_snapshot() const noexcept;
  [[nodiscard]] std::size_t queue_length(NodeId u) const;
  /// The believed neighborhood of `u`, if a snapshot has completed.
  [[nodiscard]] const std::set<NodeId>* believed(NodeId u) const;

 private:
  using QueueItem = std::variant<EdgeUpdate, SnapshotChunk>;

  struct Partial {
    std::vector<bool> bits;
    std::size_t received = 0;
  };

  void enqueue_snapshot(std::deque<QueueItem>& q) const;

  std::size_t payload_bits_;
  std::set<NodeId> neighbors_;
  std::map<NodeId, std::deque<QueueItem>> queues_;
  std::map<NodeId, std::set<NodeId>> known_;
  std::map<NodeId, Partial> partial_;
  bool consistent_ = true;
};

}  // namespace dynlist
