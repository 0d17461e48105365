#pragma once

#include <deque>
#include <map>
#include <set>

#include "dynlist/node.hpp"

namespace dynlist {

/// Robust 3-hop neighborhood listing with path sets, plus 4- and 5-cycle
/// queries on top of it. An edge is known while at least one stored path
/// ends in it. Answers EdgeQuery and CycleQuery.
///
/// Each node broadcasts a stream of path additions and prefix withdrawals:
/// its own edges, and its neighbors' edges extended by itself. A receiver
/// keeps, per neighbor, the set of paths that neighbor currently announces.
/// Streams are FIFO per sender, so once a sender's queue drains its
/// neighbors hold its announcements exactly, whatever the interleaving with
/// other senders.
class Robust3HopNode final : public NodeProcess {
 public:
  Robust3HopNode(NodeId id, std::size_t n);

  void on_topology(std::span<const Indication> indications) override;
  std::vector<Envelope> select_outgoing() override;
  void on_receive(std::span<const Envelope> inbox) override;
  [[nodiscard]] bool is_consistent() const override { return consistent_; }
  [[nodiscard]] QueryResult query(const Query& q) const override;
  [[nodiscard]] std::size_t pending_items() const override { return queue_.size(); }
  [[nodiscard]] std::vector<Edge> known_edges() const override;

  /// P_e for every known edge: paths from this node ending in e.
  [[nodiscard]] const std::map<Edge, std::set<Path>>& path_sets() const noexcept {
    return paths_;
  }
  /// Paths announced by neighbor u, as last heard.
  [[nodiscard]] const std::set<Path>& announced_by(NodeId u) const;

  struct Queued {
    bool is_delete = false;
    Path path;  // starts at this node, one or two edges
  };
  [[nodiscard]] const std::deque<Queued>& queue() const noexcept { return queue_; }

 private:
  // Own paths are counted once per source that implies them.
  void support(const Path& p, int delta);
  void drop_mirror(NodeId u);
  [[nodiscard]] bool knows(const Edge& e) const { return paths_.contains(e); }

  std::map<NodeId, std::set<Path>> mirrors_;
  std::map<Path, int> support_;
  std::map<Edge, std::set<Path>> paths_;  // only nonempty sets are kept
  std::deque<Queued> queue_;
  std::set<NodeId> neighbors_;
  bool consistent_ = true;
  bool disturbed_last_ = false;
  bool sent_busy_ = false;
  bool heard_busy_last_ = false;  // some neighbor reported IsEmpty=false last round
};

}  // namespace dynlist
