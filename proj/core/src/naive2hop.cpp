#include "dynlist/naive2hop.hpp"

#include "dynlist/errors.hpp"

namespace dynlist {

Naive2HopNode::Naive2HopNode(NodeId id, std::size_t n, std::size_t payload_bits)
    : NodeProcess(id, n), payload_bits_(payload_bits == 0 ? id_bits(n) : payload_bits) {}

std::size_t Naive2HopNode::chunks_per_snapshot() const noexcept {
  return (network_size() + payload_bits_ - 1) / payload_bits_;
}

void Naive2HopNode::enqueue_snapshot(std::deque<QueueItem>& q) const {
  const std::size_t n = network_size();
  for (std::size_t c = 0; c < chunks_per_snapshot(); ++c) {
    SnapshotChunk chunk;
    chunk.owner = id();
    chunk.index = static_cast<std::uint32_t>(c);
    for (std::size_t x = c * payload_bits_; x < std::min(n, (c + 1) * payload_bits_); ++x)
      chunk.bits.push_back(neighbors_.contains(static_cast<NodeId>(x)));
    q.emplace_back(std::move(chunk));
  }
}

void Naive2HopNode::on_topology(std::span<const Indication> indications) {
  const NodeId v = id();
  for (const auto& ind : indications) {
    const NodeId u = ind.edge.other(v);
    if (ind.kind == ChangeKind::Delete) {
      neighbors_.erase(u);
      queues_.erase(u);
      known_.erase(u);
      partial_.erase(u);
      for (auto& [w, q] : queues_) q.emplace_back(EdgeUpdate{ind.edge, ChangeKind::Delete});
    } else {
      for (auto& [w, q] : queues_) q.emplace_back(EdgeUpdate{ind.edge, ChangeKind::Insert});
      neighbors_.insert(u);
      enqueue_snapshot(queues_[u]);
    }
  }
}

std::vector<Envelope> Naive2HopNode::select_outgoing() {
  std::vector<Envelope> out;
  for (auto& [u, q] : queues_) {
    if (q.empty()) continue;
    Message m;
    std::visit([&](auto&& it) { m.item = Item(std::move(it)); }, std::move(q.front()));
    q.pop_front();
    m.is_empty = q.empty();
    out.push_back({u, std::move(m)});
  }
  return out;
}

void Naive2HopNode::on_receive(std::span<const Envelope> inbox) {
  bool heard_busy = false;
  for (const auto& env : inbox) {
    if (!env.msg.is_empty) heard_busy = true;
    if (!env.msg.item) continue;
    const NodeId u = env.peer;
    if (const auto* upd = std::get_if<EdgeUpdate>(&*env.msg.item)) {
      if (!upd->edge.contains(u)) throw ProtocolViolation("neighbor update not about the sender");
      auto& nu = known_[u];
      const NodeId w = upd->edge.other(u);
      if (upd->kind == ChangeKind::Insert) {
        nu.insert(w);
      } else {
        nu.erase(w);
      }
    } else if (const auto* chunk = std::get_if<SnapshotChunk>(&*env.msg.item)) {
      auto& part = partial_[u];
      if (part.bits.empty()) part.bits.assign(network_size(), false);
      const std::size_t base = chunk->index * payload_bits_;
      for (std::size_t k = 0; k < chunk->bits.size() && base + k < part.bits.size(); ++k)
        part.bits[base + k] = chunk->bits[k];
      if (++part.received == chunks_per_snapshot()) {
        std::set<NodeId> nu;
        for (std::size_t x = 0; x < part.bits.size(); ++x)
          if (part.bits[x]) nu.insert(static_cast<NodeId>(x));
        known_[u] = std::move(nu);
        partial_.erase(u);
      }
    } else {
      throw ProtocolViolation("naive 2-hop node received a foreign item");
    }
  }
  consistent_ = pending_items() == 0 && !heard_busy;
}

std::size_t Naive2HopNode::pending_items() const {
  std::size_t total = 0;
  for (const auto& [u, q] : queues_) total += q.size();
  return total;
}

std::size_t Naive2HopNode::queue_length(NodeId u) const {
  const auto it = queues_.find(u);
  return it == queues_.end() ? 0 : it->second.size();
}

const std::set<NodeId>* Naive2HopNode::believed(NodeId u) const {
  const auto it = known_.find(u);
  return it == known_.end() ? nullptr : &it->second;
}

std::vector<Edge> Naive2HopNode::known_edges() const {
  std::set<Edge> out;
  for (NodeId u : neighbors_) out.insert(Edge(id(), u));
  for (const auto& [u, nu] : known_)
    for (NodeId w : nu)
      if (w != u) out.insert(Edge(u, w));
  return {out.begin(), out.end()};
}

QueryResult Naive2HopNode::query(const Query& q) const {
  const auto* eq = std::get_if<EdgeQuery>(&q);
  if (!eq) throw QueryError("2-hop listing answers edge queries only");
  const Edge& e = eq->edge;
  if (e.b() >= network_size()) throw QueryError("edge query names a node outside the network");
  if (!consistent_) return QueryResult::Inconsistent;
  if (e.contains(id())) return neighbors_.contains(e.other(id())) ? QueryResult::True : QueryResult::False;
  auto via = [&](NodeId x, NodeId y) {
    const auto it = known_.find(x);
    return neighbors_.contains(x) && it != known_.end() && it->second.contains(y);
  };
  return via(e.a(), e.b()) || via(e.b(), e.a()) ? QueryResult::True : QueryResult::False;
}

}  // namespace dynlist
