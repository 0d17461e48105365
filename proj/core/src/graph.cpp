#include "dynlist/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "dynlist/errors.hpp"

namespace dynlist {

Edge::Edge(NodeId x, NodeId y) {
  if (x == y) {
    std::ostringstream msg;
    msg << "self-loop on node " << x;
    throw InvalidEvent(msg.str());
  }
  a_ = std::min(x, y);
  b_ = std::max(x, y);
}

std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << '{' << e.a() << ',' << e.b() << '}';
}

GraphState::GraphState(std::size_t n)
    : n_(n), present_(n * n, 0), inserted_(n * n, kNeverInserted) {}

void GraphState::check_node(NodeId v) const {
  if (v >= n_) {
    std::ostringstream msg;
    msg << "node " << v << " out of range for n=" << n_;
    throw InvalidEvent(msg.str());
  }
}

bool GraphState::edge_exists(const Edge& e) const {
  if (e.b() >= n_) return false;
  return present_[index(e.a(), e.b())] != 0;
}

bool GraphState::adjacent(NodeId x, NodeId y) const {
  if (x == y || x >= n_ || y >= n_) return false;
  return present_[index(x, y)] != 0;
}

Round GraphState::insertion_time(const Edge& e) const {
  if (e.b() >= n_) return kNeverInserted;
  return inserted_[index(e.a(), e.b())];
}

std::vector<NodeId> GraphState::neighbors(NodeId v) const {
  std::vector<NodeId> out;
  if (v >= n_) return out;
  for (NodeId u = 0; u < n_; ++u) {
    if (present_[index(v, u)] != 0) out.push_back(u);
  }
  return out;
}

std::size_t GraphState::degree(NodeId v) const {
  if (v >= n_) return 0;
  std::size_t d = 0;
  for (NodeId u = 0; u < n_; ++u) d += present_[index(v, u)] != 0 ? 1 : 0;
  return d;
}

std::vector<Edge> GraphState::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId a = 0; a < n_; ++a) {
    for (NodeId b = a + 1; b < n_; ++b) {
      if (present_[index(a, b)] != 0) out.emplace_back(a, b);
    }
  }
  return out;
}

RoundIndications GraphState::apply_events(Round round,
                                          std::span<const TopologyEvent> events) {
  std::set<Edge> touched;
  for (const auto& ev : events) {
    std::ostringstream msg;
    if (ev.round != round) {
      msg << "event on " << ev.edge << " carries round " << ev.round
          << " in a batch for round " << round;
      throw InvalidEvent(msg.str());
    }
    check_node(ev.edge.a());
    check_node(ev.edge.b());
    if (!touched.insert(ev.edge).second) {
      msg << "edge " << ev.edge << " changes twice in round " << round;
      throw InvalidEvent(msg.str());
    }
    const bool present = edge_exists(ev.edge);
    if (ev.kind == ChangeKind::Insert && present) {
      msg << "insert of present edge " << ev.edge << " in round " << round;
      throw InvalidEvent(msg.str());
    }
    if (ev.kind == ChangeKind::Delete && !present) {
      msg << "delete of absent edge " << ev.edge << " in round " << round;
      throw InvalidEvent(msg.str());
    }
  }

  std::vector<TopologyEvent> ordered(events.begin(), events.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.kind != y.kind) return x.kind == ChangeKind::Delete;
    return x.edge < y.edge;
  });

  RoundIndications out(n_);
  for (const auto& ev : ordered) {
    const auto i = index(ev.edge.a(), ev.edge.b());
    const auto j = index(ev.edge.b(), ev.edge.a());
    Round stamp = inserted_[i];
    if (ev.kind == ChangeKind::Delete) {
      present_[i] = present_[j] = 0;
      --edge_count_;
    } else {
      present_[i] = present_[j] = 1;
      inserted_[i] = inserted_[j] = round;
      stamp = round;
      ++edge_count_;
    }
    for (NodeId endpoint : {ev.edge.a(), ev.edge.b()}) {
      out[endpoint].push_back(
          Indication{ev.edge, ev.kind, round, stamp, ev.edge.other(endpoint)});
    }
  }
  return out;
}

RoundIndications GraphState::apply_changes(Round round,
                                           std::span<const EdgeChange> changes) {
  std::vector<TopologyEvent> events;
  events.reserve(changes.size());
  for (const auto& c : changes) events.push_back({round, c.edge, c.kind});
  return apply_events(round, events);
}

}  // namespace dynlist
