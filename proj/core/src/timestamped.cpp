#include "dynlist/timestamped.hpp"

#include <algorithm>
#include <limits>
#include <set>

#include "dynlist/errors.hpp"

namespace dynlist {

TimestampedNode::TimestampedNode(NodeId id, std::size_t n, TimestampedOptions options)
    : NodeProcess(id, n), options_(options) {}

std::vector<Edge> TimestampedNode::known_edges() const {
  std::vector<Edge> out;
  out.reserve(s_.size());
  for (const auto& [e, t] : s_) out.push_back(e);
  return out;
}

std::optional<Round> TimestampedNode::imaginary_time(const Edge& e) const {
  const auto it = s_.find(e);
  if (it == s_.end()) return std::nullopt;
  return it->second;
}

std::optional<Round> TimestampedNode::incident_time(NodeId u) const {
  const auto it = neighbors_.find(u);
  if (it == neighbors_.end()) return std::nullopt;
  return it->second;
}

void TimestampedNode::update_store(std::span<const Indication> indications) {
  const NodeId v = id();
  std::vector<NodeId> lost;
  for (const auto& ind : indications) {
    if (ind.kind != ChangeKind::Delete) continue;
    const NodeId u = ind.edge.other(v);
    neighbors_.erase(u);
    s_.erase(ind.edge);
    lost.push_back(u);
  }
  if (!options_.faults.skip_neighbor_removal) {
    for (NodeId u : lost) {
      for (auto it = support_.begin(); it != support_.end();) {
        const Edge e = it->first;
        if (!e.contains(u)) {
          ++it;
          continue;
        }
        Support& sup = it->second;
        const auto t_vz = incident_time(e.other(u));
        const bool clause = !options_.faults.ignore_timestamp_clause;
        bool drop = !t_vz || (clause && sup.t_prime() < *t_vz);
        if (!drop && clause) {
          // What u vouched for leaves with u; the closure needed {v,u} too.
          sup.via[Support::slot(e, u)].reset();
          sup.closure = {};
          drop = sup.empty();
        }
        if (drop) {
          s_.erase(e);
          it = support_.erase(it);
        } else {
          s_[e] = sup.t_prime();
          ++it;
        }
      }
    }
  }
  for (const auto& ind : indications) {
    if (ind.kind != ChangeKind::Insert) continue;
    neighbors_[ind.edge.other(v)] = ind.round;
    s_[ind.edge] = ind.round;
  }
}

bool TimestampedNode::Support::empty() const {
  return !via[0] && !via[1] && !closure[0] && !closure[1];
}

Round TimestampedNode::Support::t_prime() const {
  Round t = std::numeric_limits<Round>::min();
  for (const auto& c : {via[0], via[1], closure[0], closure[1]})
    if (c) t = std::max(t, *c);
  return t;
}

void TimestampedNode::refresh(const Edge& e) {
  const auto it = support_.find(e);
  if (it == support_.end()) return;
  if (it->second.empty()) {
    support_.erase(it);
    s_.erase(e);
  } else {
    s_[e] = it->second.t_prime();
  }
}

Round TimestampedNode::learn_insert(NodeId from, const Edge& e) {
  const Round t_link = neighbors_.at(from);
  Support& sup = support_[e];
  sup.via[Support::slot(e, from)] = options_.ideal_clock ? options_.ideal_clock->insertion_time(e) : t_link;
  refresh(e);
  return s_.at(e);
}

void TimestampedNode::learn_delete(NodeId from, const Edge& e) {
  const auto it = support_.find(e);
  if (it == support_.end()) return;
  it->second.via[Support::slot(e, from)].reset();
  refresh(e);
}

void TimestampedNode::learn_closure(NodeId from, const Edge& e, Round t_prime) {
  support_[e].closure[Support::slot(e, from)] = t_prime;
  refresh(e);
}

void TimestampedNode::forget_closure(NodeId from, const Edge& e) {
  const auto it = support_.find(e);
  if (it == support_.end()) return;
  it->second.closure[Support::slot(e, from)].reset();
  refresh(e);
}

QueryResult TimestampedNode::answer_edge(const Edge& e) const {
  if (e.b() >= network_size()) throw QueryError("edge query names a node outside the network");
  if (!consistent_) return QueryResult::Inconsistent;
  return s_.contains(e) ? QueryResult::True : QueryResult::False;
}

QueryResult TimestampedNode::answer_clique(const std::vector<NodeId>& nodes,
                                           std::size_t max_size) const {
  if (nodes.size() < 3 || nodes.size() > max_size)
    throw QueryError("clique query size out of range");
  std::set<NodeId> distinct(nodes.begin(), nodes.end());
  if (distinct.size() != nodes.size()) throw QueryError("clique query repeats a node");
  if (*distinct.rbegin() >= network_size())
    throw QueryError("clique query names a node outside the network");
  require_member(nodes);
  if (!consistent_) return QueryResult::Inconsistent;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (!s_.contains(Edge(nodes[i], nodes[j]))) return QueryResult::False;
  return QueryResult::True;
}

void NodeProcess::require_member(std::span<const NodeId> nodes) const {
  if (std::find(nodes.begin(), nodes.end(), id_) == nodes.end())
    throw QueryError("query does not involve the queried node");
}

}  // namespace dynlist
