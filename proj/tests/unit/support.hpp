#pragma once

#include <initializer_list>
#include <vector>

#include "dynlist/engine.hpp"

namespace dynlist::test {

inline EdgeChange ins(NodeId x, NodeId y) { return {Edge(x, y), ChangeKind::Insert}; }
inline EdgeChange del(NodeId x, NodeId y) { return {Edge(x, y), ChangeKind::Delete}; }

/// Steps the simulation until its round counter reaches `round - 1`, then
/// applies `changes` in round `round`.
inline void at(Simulation& sim, Round round, std::initializer_list<EdgeChange> changes) {
  while (sim.round() + 1 < round) sim.step({});
  std::vector<EdgeChange> batch(changes);
  sim.step(batch);
}

inline Simulation make_sim(AlgorithmKind kind, std::size_t n, Fault fault = Fault::None) {
  AlgorithmConfig cfg;
  cfg.kind = kind;
  cfg.fault = fault;
  return Simulation(cfg, n);
}

}  // namespace dynlist::test
