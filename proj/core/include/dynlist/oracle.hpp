#pragma once

#include <array>
#include <cstddef>
#include <set>
#include <vector>

#include "dynlist/graph.hpp"
#include "dynlist/types.hpp"

namespace dynlist {

// Brute-force reference sets. Everything here recomputes from a snapshot and
// is meant for tests and the verifier, not for node algorithms.

using EdgeSet = std::set<Edge>;

/// Snapshots G_0, G_1, ... of one run. G_0 is the empty graph.
class History {
 public:
  explicit History(std::size_t n);

  /// Appends the snapshot of the next round.
  void push(const GraphState& g);

  [[nodiscard]] Round last_round() const noexcept {
    return static_cast<Round>(snapshots_.size()) - 1;
  }
  /// G_i. Throws std::out_of_range outside [0, last_round()].
  [[nodiscard]] const GraphState& at(Round i) const;

 private:
  std::vector<GraphState> snapshots_;
};

/// Edges with at least one endpoint within distance r-1 of v, i.e. the
/// edges of walks of length <= r starting at v. r in {1,2,3}.
[[nodiscard]] EdgeSet hop_edges(const GraphState& g, NodeId v, int r);

/// R^{v,2}: incident edges plus every {u,w} with a present witness {v,u}
/// (or {v,w}) inserted no later than {u,w}.
[[nodiscard]] EdgeSet robust_2hop(const GraphState& g, NodeId v);

/// T^{v,2}: incident edges plus 2-paths v-u-w with t_uw >= t_vu, plus
/// triangle closures {u,w} inserted strictly before both {v,u} and {v,w}.
[[nodiscard]] EdgeSet temporal_t2(const GraphState& g, NodeId v);

/// R^{v,3}: R^{v,2} plus every edge of a simple path v-u-w-x with
/// t_wx >= t_uw and t_wx >= t_vu.
[[nodiscard]] EdgeSet robust_3hop(const GraphState& g, NodeId v);

[[nodiscard]] EdgeSet hop_edges(const History& h, NodeId v, Round i, int r);
[[nodiscard]] EdgeSet robust_2hop(const History& h, NodeId v, Round i);
[[nodiscard]] EdgeSet temporal_t2(const History& h, NodeId v, Round i);
[[nodiscard]] EdgeSet robust_3hop(const History& h, NodeId v, Round i);

using Triangle = std::array<NodeId, 3>;

/// All triangles as sorted triples, in lexicographic order.
[[nodiscard]] std::vector<Triangle> enumerate_triangles(const GraphState& g);

/// All k-cliques (3 <= k <= 6) as sorted node lists, lexicographic order.
[[nodiscard]] std::vector<std::vector<NodeId>> enumerate_cliques(const GraphState& g, std::size_t k);

/// All simple k-cycles (k in {4,5}) in canonical form, lexicographic order.
[[nodiscard]] std::vector<std::vector<NodeId>> enumerate_cycles(const GraphState& g, std::size_t k);

/// Lexicographically smallest sequence over all rotations and both
/// directions.
[[nodiscard]] std::vector<NodeId> canonical_cycle(std::vector<NodeId> cycle);

/// True if consecutive nodes (cyclically) are adjacent and nodes are distinct.
[[nodiscard]] bool is_cycle(const GraphState& g, const std::vector<NodeId>& cycle);

}  // namespace dynlist
