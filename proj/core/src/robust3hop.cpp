#include "dynlist/robust3hop.hpp"

#include <algorithm>

#include "dynlist/errors.hpp"

namespace dynlist {

Robust3HopNode::Robust3HopNode(NodeId id, std::size_t n) : NodeProcess(id, n) {}

const std::set<Path>& Robust3HopNode::announced_by(NodeId u) const {
  static const std::set<Path> none;
  const auto it = mirrors_.find(u);
  return it == mirrors_.end() ? none : it->second;
}

void Robust3HopNode::support(const Path& p, int delta) {
  for (std::size_t k = 1; k <= p.edge_count(); ++k) {
    const Path prefix = p.prefix(k);
    int& count = support_[prefix];
    count += delta;
    if (count > 0 && count == delta) {
      paths_[prefix.last_edge()].insert(prefix);
    } else if (count <= 0) {
      support_.erase(prefix);
      const auto it = paths_.find(prefix.last_edge());
      it->second.erase(prefix);
      if (it->second.empty()) paths_.erase(it);
    }
  }
}

void Robust3HopNode::drop_mirror(NodeId u) {
  const auto it = mirrors_.find(u);
  if (it == mirrors_.end()) return;
  for (const Path& p : it->second) support(*p.prepend(id()), -1);
  mirrors_.erase(it);
}

void Robust3HopNode::on_topology(std::span<const Indication> indications) {
  const NodeId v = id();
  for (const auto& ind : indications) {
    const NodeId u = ind.edge.other(v);
    const Path own{v, u};
    if (ind.kind == ChangeKind::Delete) {
      // Everything heard from u rode on the link that just went away.
      neighbors_.erase(u);
      drop_mirror(u);
      support(own, -1);
      queue_.push_back({true, own});
    } else {
      neighbors_.insert(u);
      support(own, +1);
      queue_.push_back({false, own});
    }
  }
}

std::vector<Envelope> Robust3HopNode::select_outgoing() {
  const bool was_empty = queue_.empty();
  sent_busy_ = !was_empty;
  Queued head;
  const bool have = !queue_.empty();
  if (have) {
    head = queue_.front();
    queue_.pop_front();
  }

  std::vector<Envelope> out;
  for (NodeId u : neighbors_) {
    Message m;
    m.is_empty = was_empty;
    m.are_neighbors_empty = !heard_busy_last_;
    if (have) {
      if (head.is_delete) {
        m.item = PathDelete{head.path};
      } else {
        m.item = PathInsert{head.path};
      }
    }
    if (!m.trivial()) out.push_back({u, std::move(m)});
  }
  return out;
}

void Robust3HopNode::on_receive(std::span<const Envelope> inbox) {
  const NodeId v = id();
  bool heard_busy = false;
  bool heard_neighbor_busy = false;
  for (const auto& env : inbox) {
    if (!env.msg.is_empty) heard_busy = true;
    if (!env.msg.are_neighbors_empty) heard_neighbor_busy = true;
    if (!env.msg.item) continue;
    const NodeId u = env.peer;
    const Path* p = nullptr;
    const bool is_delete = std::holds_alternative<PathDelete>(*env.msg.item);
    if (const auto* ins = std::get_if<PathInsert>(&*env.msg.item)) {
      p = &ins->path;
    } else if (const auto* del = std::get_if<PathDelete>(&*env.msg.item)) {
      p = &del->path;
    } else {
      throw ProtocolViolation("3-hop node received a foreign item");
    }
    if (p->edge_count() < 1 || p->edge_count() > 2 || p->front() != u)
      throw ProtocolViolation("path item does not start at its sender");

    auto& mirror = mirrors_[u];
    if (!is_delete) {
      const auto p_prime = p->prepend(v);
      if (!p_prime) continue;  // runs back through this node
      if (!mirror.insert(*p).second) continue;
      support(*p_prime, +1);
      if (p_prime->edge_count() == 2) queue_.push_back({false, *p_prime});
      continue;
    }

    // Withdraw every announced path that starts with p.
    const bool relayed = p->edge_count() == 1 && mirror.contains(*p);
    for (auto it = mirror.lower_bound(*p); it != mirror.end() && it->starts_with(*p);) {
      support(*it->prepend(v), -1);
      it = mirror.erase(it);
    }
    if (relayed) queue_.push_back({true, *p->prepend(v)});
  }
  for (auto it = mirrors_.begin(); it != mirrors_.end();)
    it = it->second.empty() ? mirrors_.erase(it) : std::next(it);

  // A node that announced IsEmpty=false this round counts as disturbed too.
  const bool disturbed = sent_busy_ || !queue_.empty() || heard_busy || heard_neighbor_busy;
  consistent_ = !disturbed && !disturbed_last_;
  disturbed_last_ = disturbed;
  heard_busy_last_ = heard_busy;
}

std::vector<Edge> Robust3HopNode::known_edges() const {
  std::vector<Edge> out;
  out.reserve(paths_.size());
  for (const auto& [e, ps] : paths_) out.push_back(e);
  return out;
}

QueryResult Robust3HopNode::query(const Query& q) const {
  if (const auto* eq = std::get_if<EdgeQuery>(&q)) {
    if (eq->edge.b() >= network_size())
      throw QueryError("edge query names a node outside the network");
    if (!consistent_) return QueryResult::Inconsistent;
    return knows(eq->edge) ? QueryResult::True : QueryResult::False;
  }
  if (const auto* cq = std::get_if<CycleQuery>(&q)) {
    const auto& c = cq->nodes;
    if (c.size() != 4 && c.size() != 5) throw QueryError("malformed cycle: length must be 4 or 5");
    std::vector<NodeId> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw QueryError("malformed cycle: repeated node");
    if (sorted.back() >= network_size()) throw QueryError("malformed cycle: node out of range");
    require_member(c);
    if (!consistent_) return QueryResult::Inconsistent;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!knows(Edge(c[i], c[(i + 1) % c.size()]))) return QueryResult::False;
    return QueryResult::True;
  }
  throw QueryError("3-hop listing answers edge and cycle queries only");
}

}  // namespace dynlist
