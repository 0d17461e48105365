#pragma once

#include <deque>

#include "dynlist/timestamped.hpp"

namespace dynlist {

struct TriangleOptions {
  TimestampedOptions base;
  /// When a node sends the deletion of one of its edges, neighbors filtered
  /// out by the timestamp rule receive it as a pattern-(b) deletion. Without
  /// this, a closing edge learned through pattern (b) is never unlearned
  /// when it is deleted while both of the node's edges stay up.
  bool pattern_b_deletions = true;
};

/// Triangle and k-clique membership listing. While consistent, S equals
/// T^{v,2}: robust edges plus triangle closures older than both of the
/// node's edges. Answers EdgeQuery and CliqueQuery (3 to 6 nodes).
class TriangleNode final : public TimestampedNode {
 public:
  TriangleNode(NodeId id, std::size_t n, TriangleOptions options = {});

  void on_topology(std::span<const Indication> indications) override;
  std::vector<Envelope> select_outgoing() override;
  void on_receive(std::span<const Envelope> inbox) override;
  [[nodiscard]] QueryResult query(const Query& q) const override;
  [[nodiscard]] std::size_t pending_items() const override { return queue_.size(); }

 private:
  struct Queued {
    Edge edge;  // always incident to this node
    ChangeKind kind = ChangeKind::Insert;
    Round stamp = 0;
    bool pattern_b = false;
    NodeId target = 0;  // pattern (b): the third vertex
  };
  std::deque<Queued> queue_;
  bool pattern_b_deletions_;
  bool sent_busy_ = false;
};

}  // namespace dynlist
