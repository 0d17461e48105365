#pragma once

#include <array>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "dynlist/graph.hpp"
#include "dynlist/node.hpp"

namespace dynlist {

/// Test-only faults for the timestamp-based stores.
struct TimestampFaults {
  /// Neighbor-loss cleanup keeps {u,z} whenever {v,z} is still present, ignoring
  /// how t'_{u,z} compares to t_{v,z}.
  bool ignore_timestamp_clause = false;
  /// Cleanup of the deleted neighbor's edges is skipped entirely.
  bool skip_neighbor_removal = false;
};

struct TimestampedOptions {
  TimestampFaults faults;
  /// When set, received edges take their true insertion time from this
  /// graph instead of an imaginary timestamp (the "ideal" twin).
  const GraphState* ideal_clock = nullptr;
};

/// Store shared by the robust 2-hop and triangle algorithms: the set S of
/// edges with imaginary timestamps t' and the node's incident timestamps.
class TimestampedNode : public NodeProcess {
 public:
  TimestampedNode(NodeId id, std::size_t n, TimestampedOptions options);

  [[nodiscard]] bool is_consistent() const override { return consistent_; }
  [[nodiscard]] std::vector<Edge> known_edges() const override;

  [[nodiscard]] const std::map<Edge, Round>& store() const noexcept { return s_; }
  [[nodiscard]] std::optional<Round> imaginary_time(const Edge& e) const;
  /// t_{v,u} if u is a neighbor.
  [[nodiscard]] std::optional<Round> incident_time(NodeId u) const;

 protected:
  /// Topology update on S only: removals for deletions, then insertions.
  void update_store(std::span<const Indication> indications);

  /// Pattern-(a) insertion received from neighbor `from`. Returns the new t'.
  Round learn_insert(NodeId from, const Edge& e);
  /// Pattern-(a) deletion received from `from`; withdraws only what `from`
  /// reported, so a stale deletion from one endpoint cannot erase a fresher
  /// insertion already reported by the other.
  void learn_delete(NodeId from, const Edge& e);
  /// Pattern-(b) closure {x,y} with timestamp t', sent by endpoint `from`.
  void learn_closure(NodeId from, const Edge& e, Round t_prime);
  void forget_closure(NodeId from, const Edge& e);

  /// True iff every pair of `nodes` is in S. Validates ownership and size.
  [[nodiscard]] QueryResult answer_clique(const std::vector<NodeId>& nodes,
                                          std::size_t max_size) const;
  [[nodiscard]] QueryResult answer_edge(const Edge& e) const;

  // Who vouches for a non-incident edge of S, per reporting endpoint and
  // per pattern. Each endpoint's reports arrive in FIFO order, so its own
  // latest word is current; t' is the largest live report.
  struct Support {
    std::array<std::optional<Round>, 2> via;      // pattern (a), by e.a() / e.b()
    std::array<std::optional<Round>, 2> closure;  // pattern (b), by e.a() / e.b()
    [[nodiscard]] bool empty() const;
    [[nodiscard]] Round t_prime() const;
    static std::size_t slot(const Edge& e, NodeId endpoint) { return endpoint == e.a() ? 0 : 1; }
  };
  void refresh(const Edge& e);

  std::map<NodeId, Round> neighbors_;
  std::map<Edge, Round> s_;  // S with t'; incident edges carry true times
  std::map<Edge, Support> support_;
  bool consistent_ = true;
  TimestampedOptions options_;
};

}  // namespace dynlist
