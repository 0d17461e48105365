#pragma once

#include <deque>

#include "dynlist/timestamped.hpp"

namespace dynlist {

/// Robust 2-hop neighborhood listing. While consistent, S equals the set of
/// (v,i)-robust edges. Answers EdgeQuery only.
class Robust2HopNode final : public TimestampedNode {
 public:
  Robust2HopNode(NodeId id, std::size_t n, TimestampedOptions options = {});

  void on_topology(std::span<const Indication> indications) override;
  std::vector<Envelope> select_outgoing() override;
  void on_receive(std::span<const Envelope> inbox) override;
  [[nodiscard]] QueryResult query(const Query& q) const override;
  [[nodiscard]] std::size_t pending_items() const override { return queue_.size(); }

 private:
  struct Queued {
    Edge edge;
    ChangeKind kind = ChangeKind::Insert;
    Round stamp = 0;  // insertion time of the incident edge this item reports
  };
  std::deque<Queued> queue_;
};

}  // namespace dynlist
