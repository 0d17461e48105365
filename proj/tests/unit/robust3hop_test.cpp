#include <gtest/gtest.h>

#include "dynlist/errors.hpp"
#include "dynlist/oracle.hpp"
#include "dynlist/robust3hop.hpp"
#include "dynlist/run.hpp"
#include "support.hpp"

using namespace dynlist;
using test::del;
using test::ins;

namespace {

Indication indication(NodeId v, NodeId u, ChangeKind kind, Round r) {
  return {Edge(v, u), kind, r, r, u};
}

Envelope from(NodeId u, Item item, bool is_empty = true, bool neighbors_empty = true) {
  Envelope env;
  env.peer = u;
  env.msg.item = std::move(item);
  env.msg.is_empty = is_empty;
  env.msg.are_neighbors_empty = neighbors_empty;
  return env;
}

}  // namespace

TEST(Robust3HopNode, TopologyEnqueuesOwnEdge) {
  Robust3HopNode node(0, 8);
  const Indication i = indication(0, 1, ChangeKind::Insert, 1);
  node.on_topology({&i, 1});
  ASSERT_EQ(node.queue().size(), 1u);
  EXPECT_FALSE(node.queue()[0].is_delete);
  EXPECT_EQ(node.queue()[0].path, (Path{0, 1}));
  EXPECT_EQ(node.known_edges(), (std::vector<Edge>{Edge(0, 1)}));

  const Indication d = indication(0, 1, ChangeKind::Delete, 2);
  node.on_topology({&d, 1});
  ASSERT_EQ(node.queue().size(), 2u);
  EXPECT_TRUE(node.queue()[1].is_delete);
  EXPECT_TRUE(node.known_edges().empty());
}

TEST(Robust3HopNode, ReceivedPathsExtendAndRelay) {
  Robust3HopNode node(0, 8);
  const Indication i = indication(0, 1, ChangeKind::Insert, 1);
  node.on_topology({&i, 1});
  (void)node.select_outgoing();

  const std::vector<Envelope> two{from(1, PathInsert{Path{1, 2}})};
  node.on_receive(two);
  EXPECT_TRUE(node.path_sets().at(Edge(1, 2)).contains(Path{0, 1, 2}));
  EXPECT_TRUE(node.path_sets().at(Edge(0, 1)).contains(Path{0, 1}));
  ASSERT_EQ(node.queue().size(), 1u);
  EXPECT_EQ(node.queue().back().path, (Path{0, 1, 2}));

  const std::vector<Envelope> three{from(1, PathInsert{Path{1, 2, 3}})};
  node.on_receive(three);
  EXPECT_TRUE(node.path_sets().at(Edge(2, 3)).contains(Path{0, 1, 2, 3}));
  EXPECT_EQ(node.queue().size(), 1u);  // 3-edge paths are not relayed

  const std::vector<Envelope> loop{from(1, PathInsert{Path{1, 0}})};
  node.on_receive(loop);
  EXPECT_FALSE(node.announced_by(1).contains(Path{1, 0}));
}

TEST(Robust3HopNode, PrefixWithdrawal) {
  Robust3HopNode node(0, 8);
  const Indication i = indication(0, 1, ChangeKind::Insert, 1);
  node.on_topology({&i, 1});
  (void)node.select_outgoing();
  const std::vector<Envelope> learn{from(1, PathInsert{Path{1, 2}}),
                                    };
  node.on_receive(learn);
  const std::vector<Envelope> far{from(1, PathInsert{Path{1, 2, 3}})};
  node.on_receive(far);
  ASSERT_EQ(node.known_edges().size(), 3u);

  const std::vector<Envelope> withdraw{from(1, PathDelete{Path{1, 2}})};
  node.on_receive(withdraw);
  EXPECT_EQ(node.known_edges(), (std::vector<Edge>{Edge(0, 1)}));
  EXPECT_TRUE(node.announced_by(1).empty());
  EXPECT_TRUE(node.queue().back().is_delete);
  EXPECT_EQ(node.queue().back().path, (Path{0, 1, 2}));
}

TEST(Robust3HopNode, MalformedItems) {
  Robust3HopNode node(0, 8);
  const Indication i = indication(0, 1, ChangeKind::Insert, 1);
  node.on_topology({&i, 1});
  const std::vector<Envelope> wrong_start{from(1, PathInsert{Path{2, 3}})};
  EXPECT_THROW(node.on_receive(wrong_start), ProtocolViolation);
  const std::vector<Envelope> foreign{from(1, EdgeUpdate{Edge(1, 2), ChangeKind::Insert})};
  EXPECT_THROW(node.on_receive(foreign), ProtocolViolation);
}

TEST(Robust3HopNode, TwoRoundRule) {
  Robust3HopNode node(0, 8);
  const Indication i = indication(0, 1, ChangeKind::Insert, 1);
  node.on_topology({&i, 1});
  (void)node.select_outgoing();
  node.on_receive({});
  EXPECT_FALSE(node.is_consistent());
  (void)node.select_outgoing();
  node.on_receive({});
  EXPECT_FALSE(node.is_consistent());  // quiet, but the previous round was not
  (void)node.select_outgoing();
  node.on_receive({});
  EXPECT_TRUE(node.is_consistent());

  const std::vector<Envelope> busy{from(1, PathInsert{Path{1, 5}}, true, false)};
  (void)node.select_outgoing();
  node.on_receive(busy);
  EXPECT_FALSE(node.is_consistent());
}

TEST(Robust3Hop, FarEdgeInsertedLastIsKnown) {
  auto sim = test::make_sim(AlgorithmKind::Robust3Hop, 4);
  test::at(sim, 1, {ins(0, 1)});
  test::at(sim, 2, {ins(1, 2)});
  test::at(sim, 3, {ins(2, 3)});
  sim.stabilize(100);
  for (const Edge e : {Edge(0, 1), Edge(1, 2), Edge(2, 3)})
    EXPECT_EQ(sim.node(0).query(EdgeQuery{e}), QueryResult::True) << e;
  EXPECT_EQ(sim.node(0).query(EdgeQuery{Edge(0, 3)}), QueryResult::False);
}

TEST(Robust3Hop, FourCycleListedWhenLastEdgeFar) {
  auto sim = test::make_sim(AlgorithmKind::Cycles45, 4);
  test::at(sim, 1, {ins(0, 1), ins(0, 3)});
  test::at(sim, 2, {ins(1, 2)});
  test::at(sim, 3, {ins(2, 3)});
  sim.stabilize(100);
  sim.step({});
  EXPECT_EQ(sim.node(0).query(CycleQuery{{0, 1, 2, 3}}), QueryResult::True);
  EXPECT_EQ(sim.node(0).query(CycleQuery{{0, 2, 1, 3}}), QueryResult::False);
}

TEST(Robust3Hop, QueryErrors) {
  auto sim = test::make_sim(AlgorithmKind::Cycles45, 6);
  EXPECT_THROW((void)sim.node(0).query(CycleQuery{{0, 1, 2}}), QueryError);
  EXPECT_THROW((void)sim.node(0).query(CycleQuery{{0, 1, 1, 2}}), QueryError);
  EXPECT_THROW((void)sim.node(0).query(CycleQuery{{1, 2, 3, 4}}), QueryError);
  EXPECT_THROW((void)sim.node(0).query(CliqueQuery{{0, 1, 2}}), QueryError);
}

TEST(Robust3Hop, SandwichUnderChurn) {
  RunConfig cfg;
  cfg.algorithm.kind = AlgorithmKind::Cycles45;
  cfg.verify = true;
  const auto r = run(gen_bursty_churn(9, 400, 10, 0.05, 0.05, 4), cfg);
  EXPECT_TRUE(r.verify->ok()) << (r.verify->samples.empty() ? "" : r.verify->samples[0].what);
  EXPECT_GT(r.verify->cycle_checks, 0u);
  EXPECT_LE(r.metrics.max_ratio(), 6.0);
}

TEST(Robust3Hop, StoredPathsAreWellFormed) {
  const Scenario s = gen_random_churn(8, 300, 0.05, 0.05, 9);
  auto sim = test::make_sim(AlgorithmKind::Robust3Hop, s.n);
  for (const auto& slot : s.slots) {
    sim.step(slot.changes);
    for (NodeId v = 0; v < s.n; ++v) {
      const auto& node = dynamic_cast<const Robust3HopNode&>(sim.node(v));
      for (const auto& [e, paths] : node.path_sets()) {
        ASSERT_FALSE(paths.empty());
        for (const auto& p : paths) {
          EXPECT_EQ(p.front(), v);
          EXPECT_EQ(p.last_edge(), e);
          EXPECT_LE(p.edge_count(), 3u);
        }
      }
    }
  }
}
