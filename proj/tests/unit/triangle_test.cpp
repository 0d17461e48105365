#include <gtest/gtest.h>

#include "dynlist/errors.hpp"
#include "dynlist/oracle.hpp"
#include "dynlist/run.hpp"
#include "dynlist/triangle.hpp"
#include "support.hpp"

using namespace dynlist;
using test::del;
using test::ins;

namespace {

const TimestampedNode& store_of(const Simulation& sim, NodeId v) {
  return dynamic_cast<const TimestampedNode&>(sim.node(v));
}

}  // namespace

TEST(Triangle, ClosureLearnedThroughPatternB) {
  auto sim = test::make_sim(AlgorithmKind::Triangle, 3);
  test::at(sim, 1, {ins(1, 2)});
  test::at(sim, 2, {ins(0, 1)});
  test::at(sim, 3, {ins(0, 2)});
  sim.stabilize(100);
  EXPECT_EQ(sim.node(0).known_edges(), (std::vector<Edge>{Edge(0, 1), Edge(0, 2), Edge(1, 2)}));
  for (NodeId v = 0; v < 3; ++v)
    EXPECT_EQ(sim.node(v).query(CliqueQuery{{0, 1, 2}}), QueryResult::True) << v;
}

TEST(Triangle, PatternBTimestamp) {
  auto sim = test::make_sim(AlgorithmKind::Triangle, 3);
  test::at(sim, 1, {ins(1, 2)});
  test::at(sim, 5, {ins(0, 1)});
  test::at(sim, 7, {ins(0, 2)});
  sim.stabilize(100);
  EXPECT_EQ(store_of(sim, 0).imaginary_time(Edge(1, 2)), 4);
}

TEST(Triangle, ClosureNeedsBothEdges) {
  auto sim = test::make_sim(AlgorithmKind::Triangle, 3);
  test::at(sim, 1, {ins(1, 2)});
  test::at(sim, 2, {ins(0, 1)});
  sim.stabilize(100);
  EXPECT_FALSE(store_of(sim, 0).store().contains(Edge(1, 2)));
  EXPECT_EQ(sim.node(0).query(CliqueQuery{{0, 1, 2}}), QueryResult::False);
}

TEST(Triangle, ClosureDeletionReachesFilteredNeighbor) {
  auto sim = test::make_sim(AlgorithmKind::Triangle, 3);
  test::at(sim, 1, {ins(1, 2)});
  test::at(sim, 2, {ins(0, 1)});
  test::at(sim, 3, {ins(0, 2)});
  sim.stabilize(100);
  test::at(sim, 10, {del(1, 2)});
  sim.stabilize(100);
  EXPECT_EQ(sim.node(0).query(EdgeQuery{Edge(1, 2)}), QueryResult::False);
}

TEST(Triangle, FourCliqueAndMissingEdge) {
  auto sim = test::make_sim(AlgorithmKind::Clique, 5);
  Round r = 0;
  for (NodeId a = 0; a < 4; ++a)
    for (NodeId b = a + 1; b < 4; ++b) test::at(sim, ++r, {ins(a, b)});
  sim.stabilize(100);
  for (NodeId v = 0; v < 4; ++v)
    EXPECT_EQ(sim.node(v).query(CliqueQuery{{0, 1, 2, 3}}), QueryResult::True) << v;
  test::at(sim, r + 5, {del(1, 3)});
  sim.stabilize(100);
  for (NodeId v = 0; v < 4; ++v)
    EXPECT_EQ(sim.node(v).query(CliqueQuery{{0, 1, 2, 3}}), QueryResult::False) << v;
  EXPECT_THROW((void)sim.node(4).query(CliqueQuery{{0, 1, 2}}), QueryError);
  EXPECT_THROW((void)sim.node(0).query(CycleQuery{{0, 1, 2, 3}}), QueryError);
}

TEST(Triangle, Inconsistent) {
  auto sim = test::make_sim(AlgorithmKind::Triangle, 3);
  test::at(sim, 1, {ins(0, 1), ins(0, 2)});
  EXPECT_EQ(sim.node(0).query(CliqueQuery{{0, 1, 2}}), QueryResult::Inconsistent);
}

TEST(Triangle, RandomChurnMatchesOracle) {
  RunConfig cfg;
  cfg.algorithm.kind = AlgorithmKind::Triangle;
  cfg.verify = true;
  for (std::uint64_t seed : {1, 2}) {
    const auto r = run(gen_random_churn(10, 500, 0.03, 0.03, seed), cfg);
    EXPECT_TRUE(r.verify->ok()) << (r.verify->samples.empty() ? "" : r.verify->samples[0].what);
    EXPECT_LE(r.metrics.max_ratio(), 3.0);
  }
}

TEST(Triangle, PatternDisjointness) {
  // t' from pattern (b) lies strictly below both incident times; t' from
  // pattern (a) reaches at least one of them.
  const Scenario s = gen_random_churn(8, 300, 0.05, 0.05, 5);
  auto sim = test::make_sim(AlgorithmKind::Triangle, s.n);
  for (const auto& slot : s.slots) {
    sim.step(slot.changes);
    for (NodeId v = 0; v < s.n; ++v) {
      if (!sim.node(v).is_consistent()) continue;
      const auto& node = store_of(sim, v);
      for (const auto& [e, t] : node.store()) {
        if (e.contains(v)) continue;
        const auto ta = node.incident_time(e.a());
        const auto tb = node.incident_time(e.b());
        const bool a_side = (ta && t >= *ta) || (tb && t >= *tb);
        const bool b_side = ta && tb && t < *ta && t < *tb;
        EXPECT_NE(a_side, b_side) << "round " << sim.round() << " node " << v << ' ' << e;
      }
    }
  }
}

TEST(Triangle, DroppingPatternBDeletionsBreaksListing) {
  RunConfig cfg;
  cfg.algorithm.kind = AlgorithmKind::Triangle;
  cfg.algorithm.fault = Fault::NoPatternBDeletions;
  cfg.verify = true;
  const auto r = run(gen_random_churn(10, 400, 0.03, 0.03, 1), cfg);
  EXPECT_FALSE(r.verify->ok());
}
