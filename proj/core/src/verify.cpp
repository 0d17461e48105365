#include "dynlist/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dynlist/engine.hpp"
#include "dynlist/errors.hpp"
#include "dynlist/oracle.hpp"

namespace dynlist {

namespace {

std::string describe(const EdgeSet& expected, const std::vector<Edge>& actual) {
  std::ostringstream os;
  const EdgeSet got(actual.begin(), actual.end());
  std::vector<Edge> missing;
  std::vector<Edge> extra;
  std::set_difference(expected.begin(), expected.end(), got.begin(), got.end(),
                      std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), expected.begin(), expected.end(),
                      std::back_inserter(extra));
  os << "missing {";
  for (const auto& e : missing) os << ' ' << e;
  os << " } extra {";
  for (const auto& e : extra) os << ' ' << e;
  os << " }";
  return os.str();
}

EdgeSet set_minus(const EdgeSet& x, const EdgeSet& y) {
  EdgeSet out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::inserter(out, out.end()));
  return out;
}

EdgeSet set_union(EdgeSet x, const EdgeSet& y) {
  x.insert(y.begin(), y.end());
  return x;
}

bool all_pairs_adjacent(const GraphState& g, const std::vector<NodeId>& nodes) {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (!g.adjacent(nodes[i], nodes[j])) return false;
  return true;
}

}  // namespace

Verifier::Verifier(AlgorithmKind kind, std::size_t n, VerifyOptions options)
    : kind_(kind), n_(n), options_(options), rng_(make_rng(options.seed, "sampling")) {}

void Verifier::fail(Round round, NodeId node, std::string what) {
  ++report_.mismatches;
  if (options_.throw_on_mismatch) {
    std::ostringstream msg;
    msg << "round " << round << ", node " << node << ": " << what;
    throw OracleMismatch(msg.str());
  }
  if (report_.samples.size() < options_.max_recorded)
    report_.samples.push_back({round, node, std::move(what)});
}

std::vector<Edge> Verifier::query_targets(NodeId) {
  std::vector<Edge> out;
  if (n_ <= options_.full_sweep_max_n) {
    for (NodeId a = 0; a < n_; ++a)
      for (NodeId b = a + 1; b < n_; ++b) out.emplace_back(a, b);
    return out;
  }
  for (std::size_t k = 0; k < options_.sample_targets; ++k) {
    const auto a = static_cast<NodeId>(uniform_below(rng_, n_));
    auto b = static_cast<NodeId>(uniform_below(rng_, n_ - 1));
    if (b >= a) ++b;
    out.emplace_back(a, b);
  }
  return out;
}

void Verifier::check_flag(const Simulation& sim, NodeId v) {
  const auto& node = sim.node(v);
  const auto answer = node.query(EdgeQuery{Edge(v, v == 0 ? 1 : 0)});
  if ((answer == QueryResult::Inconsistent) != !node.is_consistent())
    fail(sim.round(), v, "query answer disagrees with the consistency flag");
}

void Verifier::check_listing(const Simulation& sim, NodeId v) {
  const GraphState& g = sim.graph();
  EdgeSet expected;
  switch (kind_) {
    case AlgorithmKind::Robust2Hop: expected = robust_2hop(g, v); break;
    case AlgorithmKind::Triangle:
    case AlgorithmKind::Clique: expected = temporal_t2(g, v); break;
    case AlgorithmKind::Naive2Hop: expected = hop_edges(g, v, 2); break;
    default: return;
  }
  const auto& node = sim.node(v);
  const auto known = node.known_edges();
  if (!std::equal(expected.begin(), expected.end(), known.begin(), known.end()))
    fail(sim.round(), v, "stored edge set differs from oracle: " + describe(expected, known));

  for (const auto& e : query_targets(v)) {
    ++report_.query_checks;
    const auto want = expected.contains(e) ? QueryResult::True : QueryResult::False;
    const auto got = node.query(EdgeQuery{e});
    if (got != want) {
      std::ostringstream msg;
      msg << "edge query " << e << " answered " << to_string(got) << ", expected "
          << to_string(want);
      fail(sim.round(), v, msg.str());
    }
  }
}

void Verifier::check_cliques(const Simulation& sim, NodeId v) {
  const GraphState& g = sim.graph();
  const auto& node = sim.node(v);
  auto check = [&](std::vector<NodeId> members) {
    ++report_.query_checks;
    const auto want = all_pairs_adjacent(g, members) ? QueryResult::True : QueryResult::False;
    const auto got = node.query(CliqueQuery{members});
    if (got != want) {
      std::ostringstream msg;
      msg << "clique query {";
      for (NodeId x : members) msg << ' ' << x;
      msg << " } answered " << to_string(got) << ", expected " << to_string(want);
      fail(sim.round(), v, msg.str());
    }
  };

  // Every triple containing v (sampled above the sweep limit).
  if (n_ <= options_.full_sweep_max_n) {
    for (NodeId x = 0; x < n_; ++x)
      for (NodeId y = x + 1; y < n_; ++y)
        if (x != v && y != v) check({v, x, y});
  } else {
    for (std::size_t k = 0; k < options_.sample_targets; ++k) {
      const auto x = static_cast<NodeId>(uniform_below(rng_, n_));
      const auto y = static_cast<NodeId>(uniform_below(rng_, n_));
      if (x != v && y != v && x != y) check({v, x, y});
    }
  }
  if (kind_ != AlgorithmKind::Clique) return;

  for (std::size_t k = 4; k <= 5; ++k) {
    for (const auto& clique : enumerate_cliques(g, k))
      if (std::find(clique.begin(), clique.end(), v) != clique.end()) check(clique);
    // Random k-sets through v, mostly non-cliques.
    std::vector<NodeId> others(n_);
    std::iota(others.begin(), others.end(), NodeId{0});
    others.erase(others.begin() + v);
    for (int s = 0; s < 4 && others.size() >= k - 1; ++s) {
      for (std::size_t i = 0; i + 1 < k; ++i)
        std::swap(others[i], others[i + uniform_below(rng_, others.size() - i)]);
      std::vector<NodeId> members(others.begin(), others.begin() + static_cast<long>(k - 1));
      members.push_back(v);
      check(members);
    }
  }
}

void Verifier::check_sandwich(const Simulation& sim, NodeId v) {
  const GraphState& now = sim.graph();
  const GraphState& before = sim.previous_graph();
  const EdgeSet lower = set_union(robust_2hop(now, v),
                                  set_minus(robust_3hop(before, v), robust_2hop(before, v)));
  const EdgeSet upper = set_union(hop_edges(now, v, 2),
                                  set_minus(hop_edges(before, v, 3), hop_edges(before, v, 2)));
  const auto known = sim.node(v).known_edges();
  const EdgeSet got(known.begin(), known.end());
  for (const auto& e : lower) {
    if (!got.contains(e)) {
      std::ostringstream msg;
      msg << "robust edge " << e << " is not known";
      fail(sim.round(), v, msg.str());
      break;
    }
  }
  for (const auto& e : got) {
    if (!upper.contains(e)) {
      std::ostringstream msg;
      msg << "known edge " << e << " lies outside the 3-hop bound";
      fail(sim.round(), v, msg.str());
      break;
    }
  }
  for (const auto& e : query_targets(v)) {
    ++report_.query_checks;
    const bool known_e = got.contains(e);
    const auto got_q = sim.node(v).query(EdgeQuery{e});
    if (got_q != (known_e ? QueryResult::True : QueryResult::False))
      fail(sim.round(), v, "edge query disagrees with the known edge set");
  }
}

void Verifier::check_cycles(const Simulation& sim) {
  const GraphState& before = sim.previous_graph();
  auto consistent = [&](NodeId x) { return sim.node(x).is_consistent(); };

  for (std::size_t k = 4; k <= 5; ++k) {
    for (const auto& cycle : enumerate_cycles(before, k)) {
      if (!std::all_of(cycle.begin(), cycle.end(), consistent)) continue;
      ++report_.cycle_checks;
      const bool listed = std::any_of(cycle.begin(), cycle.end(), [&](NodeId x) {
        return sim.node(x).query(CycleQuery{cycle}) == QueryResult::True;
      });
      if (!listed) {
        std::ostringstream msg;
        msg << "cycle";
        for (NodeId x : cycle) msg << ' ' << x;
        msg << " is listed by none of its members";
        fail(sim.round(), cycle.front(), msg.str());
      }
    }
  }

  // Non-cycle candidates: half are paths closed by a missing edge, half are
  // random node sequences.
  for (std::size_t s = 0; s < options_.non_cycle_samples; ++s) {
    const std::size_t k = 4 + (s % 2);
    if (n_ < k) break;
    std::vector<NodeId> cand;
    if (s % 4 < 2) {
      cand.push_back(static_cast<NodeId>(uniform_below(rng_, n_)));
      while (cand.size() < k) {
        std::vector<NodeId> next;
        for (NodeId y : before.neighbors(cand.back()))
          if (std::find(cand.begin(), cand.end(), y) == cand.end()) next.push_back(y);
        if (next.empty()) break;
        cand.push_back(next[uniform_below(rng_, next.size())]);
      }
    }
    while (cand.size() < k) {
      const auto x = static_cast<NodeId>(uniform_below(rng_, n_));
      if (std::find(cand.begin(), cand.end(), x) == cand.end()) cand.push_back(x);
    }
    if (is_cycle(before, cand)) continue;
    ++report_.non_cycle_checks;
    for (NodeId x : cand) {
      if (!consistent(x)) continue;
      if (sim.node(x).query(CycleQuery{cand}) == QueryResult::True) {
        std::ostringstream msg;
        msg << "non-cycle";
        for (NodeId y : cand) msg << ' ' << y;
        msg << " reported as a cycle";
        fail(sim.round(), x, msg.str());
      }
    }
  }
}

void Verifier::observe(const Simulation& sim) {
  ++report_.rounds_checked;
  for (NodeId v = 0; v < n_; ++v) {
    check_flag(sim, v);
    if (!sim.node(v).is_consistent()) continue;
    ++report_.consistent_node_checks;
    switch (kind_) {
      case AlgorithmKind::Robust2Hop:
      case AlgorithmKind::Naive2Hop: check_listing(sim, v); break;
      case AlgorithmKind::Triangle:
      case AlgorithmKind::Clique:
        check_listing(sim, v);
        check_cliques(sim, v);
        break;
      case AlgorithmKind::Robust3Hop:
      case AlgorithmKind::Cycles45: check_sandwich(sim, v); break;
    }
  }
  if (kind_ == AlgorithmKind::Cycles45) check_cycles(sim);
}

}  // namespace dynlist
