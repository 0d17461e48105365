#include "dynlist/robust2hop.hpp"

#include "dynlist/errors.hpp"

namespace dynlist {

Robust2HopNode::Robust2HopNode(NodeId id, std::size_t n, TimestampedOptions options)
    : TimestampedNode(id, n, options) {}

void Robust2HopNode::on_topology(std::span<const Indication> indications) {
  update_store(indications);
  for (const auto& ind : indications) {
    const Round stamp = ind.kind == ChangeKind::Insert ? ind.round : ind.inserted_at;
    queue_.push_back({ind.edge, ind.kind, stamp});
  }
}

std::vector<Envelope> Robust2HopNode::select_outgoing() {
  std::vector<Envelope> out;
  if (queue_.empty()) return out;
  const Queued item = queue_.front();
  queue_.pop_front();
  const bool now_empty = queue_.empty();
  for (const auto& [u, t_vu] : neighbors_) {
    Message m;
    m.is_empty = now_empty;
    if (item.stamp >= t_vu) m.item = EdgeUpdate{item.edge, item.kind};
    if (!m.trivial()) out.push_back({u, std::move(m)});
  }
  return out;
}

void Robust2HopNode::on_receive(std::span<const Envelope> inbox) {
  bool heard_busy = false;
  for (const auto& env : inbox) {
    if (!env.msg.is_empty) heard_busy = true;
    if (!env.msg.item) continue;
    const auto* upd = std::get_if<EdgeUpdate>(&*env.msg.item);
    if (!upd) throw ProtocolViolation("robust 2-hop node received a foreign item");
    if (upd->edge.contains(id())) continue;
    if (upd->kind == ChangeKind::Insert) {
      learn_insert(env.peer, upd->edge);
    } else {
      learn_delete(env.peer, upd->edge);
    }
  }
  consistent_ = queue_.empty() && !heard_busy;
}

QueryResult Robust2HopNode::query(const Query& q) const {
  const auto* eq = std::get_if<EdgeQuery>(&q);
  if (!eq) throw QueryError("robust 2-hop listing answers edge queries only");
  return answer_edge(eq->edge);
}

}  // namespace dynlist
