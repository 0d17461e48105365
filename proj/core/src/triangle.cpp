#include "dynlist/triangle.hpp"

#include "dynlist/errors.hpp"

namespace dynlist {

TriangleNode::TriangleNode(NodeId id, std::size_t n, TriangleOptions options)
    : TimestampedNode(id, n, options.base), pattern_b_deletions_(options.pattern_b_deletions) {}

void TriangleNode::on_topology(std::span<const Indication> indications) {
  update_store(indications);
  for (const auto& ind : indications) {
    const Round stamp = ind.kind == ChangeKind::Insert ? ind.round : ind.inserted_at;
    queue_.push_back({ind.edge, ind.kind, stamp});
  }
}

std::vector<Envelope> TriangleNode::select_outgoing() {
  // The flag reports the queue as it stood before this round's dequeue.
  const bool was_empty = queue_.empty();
  sent_busy_ = !was_empty;
  Queued head;
  bool have = !queue_.empty();
  if (have) {
    head = queue_.front();
    queue_.pop_front();
  }

  // A pattern-(b) item is stale once its edge or its target is gone, or
  // the edge was re-inserted since the item was created.
  if (have && head.pattern_b) {
    const auto t_vu = incident_time(head.edge.other(id()));
    if (!t_vu || *t_vu != head.stamp || !neighbors_.contains(head.target)) have = false;
  }

  std::vector<Envelope> out;
  for (const auto& [w, t_vw] : neighbors_) {
    Message m;
    m.is_empty = was_empty;
    if (have && head.pattern_b) {
      if (w == head.target) m.item = PairUpdate{head.edge, ChangeKind::Insert};
    } else if (have) {
      if (head.stamp >= t_vw) {
        m.item = EdgeUpdate{head.edge, head.kind};
      } else if (pattern_b_deletions_ && head.kind == ChangeKind::Delete) {
        m.item = PairUpdate{head.edge, ChangeKind::Delete};
      }
    }
    if (!m.trivial()) out.push_back({w, std::move(m)});
  }
  return out;
}

void TriangleNode::on_receive(std::span<const Envelope> inbox) {
  const NodeId v = id();
  bool heard_busy = false;
  for (const auto& env : inbox) {
    if (!env.msg.is_empty) heard_busy = true;
    if (!env.msg.item) continue;
    const NodeId u = env.peer;

    if (const auto* a = std::get_if<EdgeUpdate>(&*env.msg.item)) {
      if (a->edge.contains(v)) continue;
      if (a->kind == ChangeKind::Delete) {
        learn_delete(u, a->edge);
        continue;
      }
      const Round t_prime = learn_insert(u, a->edge);
      const NodeId w = a->edge.other(u);
      const auto t_vw = incident_time(w);
      if (!t_vw) continue;
      const Round t_vu = neighbors_.at(u);
      if (t_vu < *t_vw && *t_vw <= t_prime) {
        queue_.push_back({Edge(v, u), ChangeKind::Insert, t_vu, true, w});
      } else if (*t_vw < t_vu && t_vu <= t_prime) {
        queue_.push_back({Edge(v, w), ChangeKind::Insert, *t_vw, true, u});
      }
    } else if (const auto* b = std::get_if<PairUpdate>(&*env.msg.item)) {
      if (b->edge.contains(v)) continue;
      if (b->kind == ChangeKind::Delete) {
        forget_closure(u, b->edge);
        continue;
      }
      const auto t_x = incident_time(b->edge.a());
      const auto t_y = incident_time(b->edge.b());
      if (!t_x || !t_y) continue;
      learn_closure(u, b->edge,
                    options_.ideal_clock ? options_.ideal_clock->insertion_time(b->edge)
                                         : std::min(*t_x, *t_y) - 1);
    } else {
      throw ProtocolViolation("triangle node received a foreign item");
    }
  }
  // Sending IsEmpty=false this round disturbs the sender as well: the
  // item it just sent may trigger pattern-(b) replies addressed to it.
  consistent_ = !sent_busy_ && queue_.empty() && !heard_busy;
}

QueryResult TriangleNode::query(const Query& q) const {
  if (const auto* eq = std::get_if<EdgeQuery>(&q)) return answer_edge(eq->edge);
  if (const auto* cq = std::get_if<CliqueQuery>(&q)) return answer_clique(cq->nodes, 6);
  throw QueryError("triangle listing answers edge and clique queries only");
}

}  // namespace dynlist
