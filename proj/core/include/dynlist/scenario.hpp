#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dynlist/types.hpp"

namespace dynlist {

/// One scheduled round. A barrier asks the engine to run event-free rounds
/// until every node is consistent before this slot's changes are applied.
struct Slot {
  bool stabilize_before = false;
  std::vector<EdgeChange> changes;
};

/// A topology schedule. Slot k (0-based) is applied in the k-th scheduled
/// round; barrier rounds are inserted by the engine and do not consume
/// slots.
struct Scenario {
  std::size_t n = 0;
  std::vector<Slot> slots;
  std::uint64_t seed = 0;
  std::string description;

  [[nodiscard]] std::size_t change_count() const noexcept;
  [[nodiscard]] std::size_t barrier_count() const noexcept;
};

/// Replays the schedule on an empty graph and throws InvalidEvent at the
/// first invalid change.
void validate(const Scenario& scenario);

/// Simple undirected pattern graph on k vertices, used by the membership
/// lower-bound construction.
struct Pattern {
  std::size_t k = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  [[nodiscard]] bool adjacent(std::size_t x, std::size_t y) const;
  [[nodiscard]] static Pattern path(std::size_t k);
  [[nodiscard]] static Pattern cycle(std::size_t k);
  [[nodiscard]] static Pattern clique(std::size_t k);
};

[[nodiscard]] Scenario gen_empty(std::size_t n, std::size_t rounds);

/// Per round, every absent edge is inserted with probability `p_insert` and
/// every present edge deleted with probability `p_delete`.
[[nodiscard]] Scenario gen_random_churn(std::size_t n, std::size_t rounds, double p_insert,
                                        double p_delete, std::uint64_t seed);

/// Random churn on a background graph plus planted cliques whose edges
/// flicker as a block: every `period` rounds each planted clique is either
/// fully assembled (one edge per round) or has one of its edges removed.
struct PlantedCliqueScenario {
  Scenario scenario;
  std::vector<std::vector<NodeId>> cliques;
};
[[nodiscard]] PlantedCliqueScenario gen_planted_cliques(std::size_t n, std::size_t rounds,
                                                        std::vector<std::size_t> sizes,
                                                        double p_insert, double p_delete,
                                                        std::uint64_t seed);

/// Churn in bursts separated by stabilize barriers, so the run alternates
/// between heavy change and fully consistent rounds.
[[nodiscard]] Scenario gen_bursty_churn(std::size_t n, std::size_t rounds,
                                        std::size_t burst_length, double p_insert,
                                        double p_delete, std::uint64_t seed);

/// The timestamp counterexample: triangle {v,u,w} on nodes 0,1,2, the edge
/// {u,w} removed, and {v,u} / {v,w} flickered exactly in the rounds in which
/// u and w broadcast that removal. Padding leaves on w (nodes 3..5 when
/// available) delay w's broadcast so the two rounds differ.
struct FlickerLayout {
  NodeId v = 0;
  NodeId u = 1;
  NodeId w = 2;
};
[[nodiscard]] Scenario gen_flicker_triangle(std::size_t n);

/// Membership-listing lower-bound adversary for a non-clique pattern `h`:
/// attach a fresh node according to N_a, stabilize, then detach it and
/// reattach according to N_b. Throws ScenarioError for a clique pattern or
/// `t > n - k + 2`.
[[nodiscard]] Scenario gen_membership_lb(const Pattern& h, std::size_t n, std::size_t t);

/// Parameters derived for the k-cycle lower-bound adversary.
struct CycleLbLayout {
  std::size_t k = 0;
  std::size_t gamma = 0;  // ceil(k/2) - 1
  std::size_t t = 0;      // sqrt(n)
  std::size_t d = 0;      // t - gamma
  /// Node id of u_i^j (1-based i in [t], j in [gamma]).
  [[nodiscard]] NodeId u(std::size_t i, std::size_t j) const;
  /// Node id of v_i^j (1-based i in [t], j in [d]).
  [[nodiscard]] NodeId v(std::size_t i, std::size_t j) const;
};
[[nodiscard]] CycleLbLayout cycle_lb_layout(std::size_t k, std::size_t n);

/// Two-phase k-cycle lower-bound adversary (k >= 6). Throws ScenarioError
/// (bad dimensions) unless n is a perfect square with d = sqrt(n) - gamma a
/// positive multiple of 3.
[[nodiscard]] Scenario gen_cycle_lb(std::size_t k, std::size_t n, std::uint64_t seed);

/// Heavy-tailed sessions: an absent edge starts a session with probability
/// `p_arrival` per round; the session lasts ceil(Pareto(x_min, tail_exponent))
/// rounds.
struct HeavyTailParams {
  double tail_exponent = 2.5;
  double x_min = 2.0;
  double p_arrival = 0.02;
};
[[nodiscard]] Scenario gen_heavy_tail_churn(std::size_t n, std::size_t rounds,
                                            const HeavyTailParams& params, std::uint64_t seed);

/// One Pareto session length draw (in rounds, >= 1).
[[nodiscard]] std::size_t pareto_session_length(double u01, double x_min, double tail_exponent);

}  // namespace dynlist
