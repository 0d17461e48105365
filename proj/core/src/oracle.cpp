#include "dynlist/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "dynlist/errors.hpp"

namespace dynlist {

History::History(std::size_t n) { snapshots_.emplace_back(n); }

void History::push(const GraphState& g) { snapshots_.push_back(g); }

const GraphState& History::at(Round i) const {
  if (i < 0 || i > last_round()) throw std::out_of_range("history round out of range");
  return snapshots_[static_cast<std::size_t>(i)];
}

EdgeSet hop_edges(const GraphState& g, NodeId v, int r) {
  if (r < 1 || r > 3) throw std::invalid_argument("hop radius must be 1, 2 or 3");
  const std::size_t n = g.node_count();
  constexpr int kFar = std::numeric_limits<int>::max();
  std::vector<int> dist(n, kFar);
  std::deque<NodeId> frontier{v};
  dist[v] = 0;
  while (!frontier.empty()) {
    const NodeId x = frontier.front();
    frontier.pop_front();
    if (dist[x] >= r - 1) continue;
    for (NodeId y : g.neighbors(x)) {
      if (dist[y] == kFar) {
        dist[y] = dist[x] + 1;
        frontier.push_back(y);
      }
    }
  }
  EdgeSet out;
  for (const auto& e : g.edges())
    if (std::min(dist[e.a()], dist[e.b()]) <= r - 1) out.insert(e);
  return out;
}

namespace {

void add_incident(const GraphState& g, NodeId v, EdgeSet& out) {
  for (NodeId u : g.neighbors(v)) out.insert(Edge(v, u));
}

// Two-paths v-u-w with t_uw >= t_vu.
void add_pattern_a(const GraphState& g, NodeId v, EdgeSet& out) {
  for (NodeId u : g.neighbors(v)) {
    const Round t_vu = g.insertion_time(Edge(v, u));
    for (NodeId w : g.neighbors(u)) {
      if (w == v) continue;
      if (g.insertion_time(Edge(u, w)) >= t_vu) out.insert(Edge(u, w));
    }
  }
}

}  // namespace

EdgeSet robust_2hop(const GraphState& g, NodeId v) {
  EdgeSet out;
  add_incident(g, v, out);
  add_pattern_a(g, v, out);
  return out;
}

EdgeSet temporal_t2(const GraphState& g, NodeId v) {
  EdgeSet out = robust_2hop(g, v);
  const auto nv = g.neighbors(v);
  for (std::size_t i = 0; i < nv.size(); ++i) {
    for (std::size_t j = i + 1; j < nv.size(); ++j) {
      const Edge uw(nv[i], nv[j]);
      if (!g.edge_exists(uw)) continue;
      const Round t = g.insertion_time(uw);
      if (t < g.insertion_time(Edge(v, nv[i])) && t < g.insertion_time(Edge(v, nv[j])))
        out.insert(uw);
    }
  }
  return out;
}

EdgeSet robust_3hop(const GraphState& g, NodeId v) {
  EdgeSet out = robust_2hop(g, v);
  for (NodeId u : g.neighbors(v)) {
    const Round t_vu = g.insertion_time(Edge(v, u));
    for (NodeId w : g.neighbors(u)) {
      if (w == v) continue;
      const Round t_uw = g.insertion_time(Edge(u, w));
      for (NodeId x : g.neighbors(w)) {
        if (x == v || x == u) continue;
        const Round t_wx = g.insertion_time(Edge(w, x));
        if (t_wx >= t_uw && t_wx >= t_vu) {
          out.insert(Edge(v, u));
          out.insert(Edge(u, w));
          out.insert(Edge(w, x));
        }
      }
    }
  }
  return out;
}

EdgeSet hop_edges(const History& h, NodeId v, Round i, int r) { return hop_edges(h.at(i), v, r); }
EdgeSet robust_2hop(const History& h, NodeId v, Round i) { return robust_2hop(h.at(i), v); }
EdgeSet temporal_t2(const History& h, NodeId v, Round i) { return temporal_t2(h.at(i), v); }
EdgeSet robust_3hop(const History& h, NodeId v, Round i) { return robust_3hop(h.at(i), v); }

std::vector<Triangle> enumerate_triangles(const GraphState& g) {
  std::vector<Triangle> out;
  const auto n = static_cast<NodeId>(g.node_count());
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (NodeId c = b + 1; c < n; ++c)
        if (g.adjacent(a, c) && g.adjacent(b, c)) out.push_back({a, b, c});
    }
  return out;
}

namespace {

void extend_clique(const GraphState& g, std::size_t k, std::vector<NodeId>& current,
                   std::vector<std::vector<NodeId>>& out) {
  if (current.size() == k) {
    out.push_back(current);
    return;
  }
  const auto n = static_cast<NodeId>(g.node_count());
  const NodeId start = current.empty() ? 0 : current.back() + 1;
  for (NodeId x = start; x < n; ++x) {
    if (!std::all_of(current.begin(), current.end(), [&](NodeId y) { return g.adjacent(x, y); }))
      continue;
    current.push_back(x);
    extend_clique(g, k, current, out);
    current.pop_back();
  }
}

void extend_path(const GraphState& g, std::size_t k, std::vector<NodeId>& path,
                 std::vector<std::vector<NodeId>>& out) {
  if (path.size() == k) {
    if (g.adjacent(path.back(), path.front())) out.push_back(canonical_cycle(path));
    return;
  }
  for (NodeId y : g.neighbors(path.back())) {
    // The first node is the cycle's minimum, which removes most duplicates.
    if (y <= path.front() || std::find(path.begin(), path.end(), y) != path.end()) continue;
    path.push_back(y);
    extend_path(g, k, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<NodeId>> enumerate_cliques(const GraphState& g, std::size_t k) {
  if (k < 3 || k > 6) throw std::invalid_argument("clique size must be in [3, 6]");
  std::vector<std::vector<NodeId>> out;
  std::vector<NodeId> current;
  extend_clique(g, k, current, out);
  return out;
}

std::vector<NodeId> canonical_cycle(std::vector<NodeId> cycle) {
  std::vector<NodeId> best = cycle;
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t r = 0; r < cycle.size(); ++r) {
      std::rotate(cycle.begin(), cycle.begin() + 1, cycle.end());
      best = std::min(best, cycle);
    }
    std::reverse(cycle.begin(), cycle.end());
  }
  return best;
}

std::vector<std::vector<NodeId>> enumerate_cycles(const GraphState& g, std::size_t k) {
  if (k != 4 && k != 5) throw std::invalid_argument("cycle length must be 4 or 5");
  std::vector<std::vector<NodeId>> out;
  const auto n = static_cast<NodeId>(g.node_count());
  for (NodeId s = 0; s < n; ++s) {
    std::vector<NodeId> path{s};
    extend_path(g, k, path, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_cycle(const GraphState& g, const std::vector<NodeId>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 3) return false;
  std::vector<NodeId> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (sorted.back() >= g.node_count()) return false;
  for (std::size_t i = 0; i < k; ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % k])) return false;
  return true;
}

}  // namespace dynlist
