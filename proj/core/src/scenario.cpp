#include "dynlist/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "dynlist/errors.hpp"
#include "dynlist/graph.hpp"
#include "dynlist/rng.hpp"

namespace dynlist {

std::size_t Scenario::change_count() const noexcept {
  std::size_t total = 0;
  for (const auto& s : slots) total += s.changes.size();
  return total;
}

std::size_t Scenario::barrier_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(slots.begin(), slots.end(), [](const Slot& s) { return s.stabilize_before; }));
}

void validate(const Scenario& scenario) {
  GraphState g(scenario.n);
  Round r = 1;
  for (const auto& slot : scenario.slots) g.apply_changes(r++, slot.changes);
}

bool Pattern::adjacent(std::size_t x, std::size_t y) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == x && e.second == y) || (e.first == y && e.second == x);
  });
}

Pattern Pattern::path(std::size_t k) {
  Pattern p{k, {}};
  for (std::size_t i = 0; i + 1 < k; ++i) p.edges.emplace_back(i, i + 1);
  return p;
}

Pattern Pattern::cycle(std::size_t k) {
  Pattern p = path(k);
  if (k >= 3) p.edges.emplace_back(k - 1, 0);
  return p;
}

Pattern Pattern::clique(std::size_t k) {
  Pattern p{k, {}};
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) p.edges.emplace_back(i, j);
  return p;
}

namespace {

// Tracks presence while a generator builds its schedule, so every emitted
// change is valid.
class Builder {
 public:
  explicit Builder(std::size_t n) : graph_(n) {}

  Slot& open(bool barrier = false) {
    flush();
    pending_.stabilize_before = barrier;
    open_ = true;
    return pending_;
  }

  void insert(NodeId x, NodeId y) { add({Edge(x, y), ChangeKind::Insert}); }
  void remove(NodeId x, NodeId y) { add({Edge(x, y), ChangeKind::Delete}); }

  // Only emits the change when it is valid in the current state.
  void insert_if_absent(NodeId x, NodeId y) {
    if (!graph_.edge_exists(Edge(x, y))) insert(x, y);
  }
  void remove_if_present(NodeId x, NodeId y) {
    if (graph_.edge_exists(Edge(x, y))) remove(x, y);
  }

  [[nodiscard]] bool present(NodeId x, NodeId y) const { return graph_.adjacent(x, y); }

  std::vector<Slot> finish() {
    flush();
    return std::move(slots_);
  }

 private:
  void add(EdgeChange c) {
    if (!open_) open();
    pending_.changes.push_back(c);
  }

  void flush() {
    if (!open_) return;
    graph_.apply_changes(static_cast<Round>(slots_.size() + 1), pending_.changes);
    slots_.push_back(std::move(pending_));
    pending_ = Slot{};
    open_ = false;
  }

  GraphState graph_;
  std::vector<Slot> slots_;
  Slot pending_;
  bool open_ = false;
};

std::vector<std::pair<NodeId, NodeId>> all_pairs(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  return pairs;
}

}  // namespace

Scenario gen_empty(std::size_t n, std::size_t rounds) {
  Scenario s;
  s.n = n;
  s.slots.resize(rounds);
  s.description = "empty";
  return s;
}

Scenario gen_random_churn(std::size_t n, std::size_t rounds, double p_insert, double p_delete,
                          std::uint64_t seed) {
  if (p_insert < 0.0 || p_insert > 1.0 || p_delete < 0.0 || p_delete > 1.0)
    throw ScenarioError("churn probabilities must lie in [0,1]");
  Scenario s;
  s.n = n;
  s.seed = seed;
  std::ostringstream d;
  d << "random churn n=" << n << " rounds=" << rounds << " p_ins=" << p_insert
    << " p_del=" << p_delete;
  s.description = d.str();

  auto rng = make_rng(seed, "scenario");
  const auto pairs = all_pairs(n);
  Builder b(n);
  for (std::size_t r = 0; r < rounds; ++r) {
    b.open();
    for (const auto& [x, y] : pairs) {
      const double draw = uniform01(rng);
      if (b.present(x, y)) {
        if (draw < p_delete) b.remove(x, y);
      } else if (draw < p_insert) {
        b.insert(x, y);
      }
    }
  }
  s.slots = b.finish();
  return s;
}

PlantedCliqueScenario gen_planted_cliques(std::size_t n, std::size_t rounds,
                                          std::vector<std::size_t> sizes, double p_insert,
                                          double p_delete, std::uint64_t seed) {
  const std::size_t needed = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  if (needed > n) throw ScenarioError("planted cliques need more nodes than n");

  PlantedCliqueScenario out;
  std::set<Edge> planted_edges;
  NodeId next = 0;
  for (auto size : sizes) {
    std::vector<NodeId> members;
    for (std::size_t i = 0; i < size; ++i) members.push_back(next++);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        planted_edges.insert(Edge(members[i], members[j]));
    out.cliques.push_back(std::move(members));
  }

  auto rng = make_rng(seed, "scenario");
  const auto pairs = all_pairs(n);
  constexpr std::size_t kPeriod = 12;
  // Missing edge per planted clique while it is broken.
  std::vector<std::optional<Edge>> missing(out.cliques.size());

  Builder b(n);
  for (std::size_t r = 0; r < rounds; ++r) {
    b.open();
    if (r == 0) {
      for (const auto& e : planted_edges) b.insert(e.a(), e.b());
    } else if (r % kPeriod == 0) {
      for (std::size_t c = 0; c < out.cliques.size(); ++c) {
        const auto& members = out.cliques[c];
        if (missing[c]) {
          b.insert(missing[c]->a(), missing[c]->b());
          missing[c].reset();
        } else {
          const auto i = uniform_below(rng, members.size());
          auto j = uniform_below(rng, members.size() - 1);
          if (j >= i) ++j;
          missing[c] = Edge(members[i], members[j]);
          b.remove(missing[c]->a(), missing[c]->b());
        }
      }
    }
    for (const auto& [x, y] : pairs) {
      const double draw = uniform01(rng);
      if (r == 0 || planted_edges.contains(Edge(x, y))) continue;
      if (b.present(x, y)) {
        if (draw < p_delete) b.remove(x, y);
      } else if (draw < p_insert) {
        b.insert(x, y);
      }
    }
  }
  out.scenario.n = n;
  out.scenario.seed = seed;
  out.scenario.slots = b.finish();
  out.scenario.description = "planted cliques under churn";
  return out;
}

Scenario gen_bursty_churn(std::size_t n, std::size_t rounds, std::size_t burst_length,
                          double p_insert, double p_delete, std::uint64_t seed) {
  if (burst_length == 0) throw ScenarioError("burst length must be positive");
  Scenario s = gen_random_churn(n, rounds, p_insert, p_delete, seed);
  for (std::size_t r = burst_length; r < s.slots.size(); r += burst_length)
    s.slots[r].stabilize_before = true;
  std::ostringstream d;
  d << "bursty churn n=" << n << " rounds=" << rounds << " burst=" << burst_length;
  s.description = d.str();
  return s;
}

Scenario gen_flicker_triangle(std::size_t n) {
  if (n < 3) throw ScenarioError("flicker construction needs n >= 3");
  const FlickerLayout L;
  Builder b(n);
  b.open();
  b.insert(L.v, L.u);
  b.insert(L.v, L.w);
  b.insert(L.u, L.w);

  // u's queue stays empty; w gets up to three padding insertions one round
  // earlier, so w broadcasts the removal of {u,w} two rounds after u does.
  std::vector<NodeId> pads;
  for (NodeId p = 3; p < std::min<std::size_t>(n, 6); ++p) pads.push_back(p);

  b.open(/*barrier=*/true);
  b.remove(L.v, L.u);
  for (NodeId p : pads) b.insert(L.w, p);

  b.open();  // u broadcasts the removal while {v,u} is down
  b.remove(L.u, L.w);

  b.open();
  b.insert(L.v, L.u);

  // Without padding w broadcasts in the same round as u; the schedule is
  // still valid but no longer hides the removal.
  b.open();
  b.remove(L.v, L.w);

  b.open();
  b.insert(L.v, L.w);

  Scenario s;
  s.n = n;
  s.slots = b.finish();
  s.description = "flicker triangle";
  return s;
}

Scenario gen_membership_lb(const Pattern& h, std::size_t n, std::size_t t) {
  const std::size_t k = h.k;
  std::optional<std::pair<std::size_t, std::size_t>> ab;
  for (std::size_t x = 0; x < k && !ab; ++x)
    for (std::size_t y = x + 1; y < k && !ab; ++y)
      if (!h.adjacent(x, y)) ab.emplace(x, y);
  if (!ab) throw ScenarioError("pattern is a clique: no non-adjacent pair");
  if (k < 3 || t + k > n + 2) throw ScenarioError("membership construction needs t <= n - k + 2");

  const auto [a, b_vertex] = *ab;
  // Remaining pattern vertices map to nodes 0..k-3 in order.
  std::vector<std::size_t> rest;
  std::vector<NodeId> node_of(k, 0);
  for (std::size_t x = 0; x < k; ++x) {
    if (x == a || x == b_vertex) continue;
    node_of[x] = static_cast<NodeId>(rest.size());
    rest.push_back(x);
  }
  auto attach_set = [&](std::size_t anchor) {
    std::vector<NodeId> out;
    for (auto x : rest)
      if (h.adjacent(anchor, x)) out.push_back(node_of[x]);
    return out;
  };
  const auto n_a = attach_set(a);
  const auto n_b = attach_set(b_vertex);

  Builder b(n);
  bool any_base = false;
  for (const auto& [x, y] : h.edges) {
    if (x == a || x == b_vertex || y == a || y == b_vertex) continue;
    if (!any_base) b.open();
    any_base = true;
    b.insert(node_of[x], node_of[y]);
  }
  for (std::size_t l = 0; l < t; ++l) {
    const auto u = static_cast<NodeId>(k - 2 + l);
    b.open();
    for (auto x : n_a) b.insert(u, x);
    b.open(/*barrier=*/true);
    for (auto x : n_a) b.remove(u, x);
    b.open();
    for (auto x : n_b) b.insert(u, x);
  }

  Scenario s;
  s.n = n;
  s.slots = b.finish();
  std::ostringstream d;
  d << "membership lower bound k=" << k << " n=" << n << " t=" << t;
  s.description = d.str();
  return s;
}

NodeId CycleLbLayout::u(std::size_t i, std::size_t j) const {
  return static_cast<NodeId>((i - 1) * gamma + (j - 1));
}

NodeId CycleLbLayout::v(std::size_t i, std::size_t j) const {
  return static_cast<NodeId>(t * gamma + (i - 1) * d + (j - 1));
}

CycleLbLayout cycle_lb_layout(std::size_t k, std::size_t n) {
  if (k < 6) throw ScenarioError("cycle construction needs k >= 6");
  CycleLbLayout L;
  L.k = k;
  L.gamma = (k + 1) / 2 - 1;
  L.t = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  if (L.t * L.t != n) throw ScenarioError("cycle construction needs n to be a perfect square");
  if (L.t <= L.gamma || (L.t - L.gamma) % 3 != 0)
    throw ScenarioError("cycle construction needs sqrt(n) - gamma to be a positive multiple of 3");
  L.d = L.t - L.gamma;
  return L;
}

Scenario gen_cycle_lb(std::size_t k, std::size_t n, std::uint64_t seed) {
  const auto L = cycle_lb_layout(k, n);
  auto rng = make_rng(seed, "scenario");
  Builder b(n);

  // Phase I: one round per component.
  for (std::size_t l = 1; l <= L.t; ++l) {
    b.open();
    std::vector<std::size_t> cols(L.d);
    std::iota(cols.begin(), cols.end(), std::size_t{1});
    for (std::size_t i = cols.size(); i > 1; --i)
      std::swap(cols[i - 1], cols[uniform_below(rng, i)]);
    for (std::size_t c = 0; c < 2 * L.d / 3; ++c) b.insert(L.u(l, 1), L.v(l, cols[c]));
    for (std::size_t j = 1; j <= L.d; ++j) b.insert(L.v(l, j), L.u(l, 2));
    for (std::size_t j = 2; j < L.gamma; ++j) b.insert(L.u(l, j), L.u(l, j + 1));
  }

  // Phase II.
  const std::size_t lo = k / 2;
  const std::size_t hi = (k + 1) / 2;
  for (std::size_t l = 1; l <= L.t; ++l) {
    for (std::size_t m = 1; m < l; ++m) {
      b.open();
      b.insert(L.u(l, 1), L.u(m, 1));
      b.insert(L.u(l, L.gamma), L.u(m, L.gamma));
      b.open(/*barrier=*/true);
      b.remove(L.u(l, 1), L.u(m, 1));
      b.remove(L.u(l, L.gamma), L.u(m, L.gamma));
    }
    if (lo < hi) {
      // Odd k: shortcut the component's path by one vertex. Superscripts
      // below 1 or links that were never wired are skipped.
      const std::size_t x = lo - 2;
      const std::size_t y = hi - 2;
      if (x >= 1 && y >= 1 && x != y) {
        b.open();
        b.remove_if_present(L.u(l, x), L.u(l, y));
        if (y != L.gamma) b.remove_if_present(L.u(l, y), L.u(l, L.gamma));
        b.open();
        if (x != L.gamma) b.insert_if_absent(L.u(l, x), L.u(l, L.gamma));
      }
    }
  }

  Scenario s;
  s.n = n;
  s.seed = seed;
  s.slots = b.finish();
  std::ostringstream d;
  d << "cycle lower bound k=" << k << " n=" << n << " t=" << L.t << " D=" << L.d;
  s.description = d.str();
  return s;
}

std::size_t pareto_session_length(double u01, double x_min, double tail_exponent) {
  const double tail = std::max(1.0 - u01, 1e-300);
  const double x = x_min * std::pow(tail, -1.0 / tail_exponent);
  const double capped = std::min(std::ceil(x), 1e9);
  return std::max<std::size_t>(1, static_cast<std::size_t>(capped));
}

Scenario gen_heavy_tail_churn(std::size_t n, std::size_t rounds, const HeavyTailParams& params,
                              std::uint64_t seed) {
  if (!(params.tail_exponent > 1.0)) throw ScenarioError("tail exponent must exceed 1");
  auto rng = make_rng(seed, "scenario");
  const auto pairs = all_pairs(n);
  std::vector<std::size_t> remaining(pairs.size(), 0);

  Builder b(n);
  for (std::size_t r = 0; r < rounds; ++r) {
    b.open();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto [x, y] = pairs[p];
      const double draw = uniform01(rng);
      if (remaining[p] > 0) {
        if (--remaining[p] == 0) b.remove(x, y);
      } else if (draw < params.p_arrival) {
        b.insert(x, y);
        remaining[p] = pareto_session_length(uniform01(rng), params.x_min, params.tail_exponent);
      }
    }
  }

  Scenario s;
  s.n = n;
  s.seed = seed;
  s.slots = b.finish();
  std::ostringstream d;
  d << "heavy-tailed churn n=" << n << " rounds=" << rounds << " alpha=" << params.tail_exponent;
  s.description = d.str();
  return s;
}

}  // namespace dynlist
