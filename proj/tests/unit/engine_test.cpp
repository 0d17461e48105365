#include <gtest/gtest.h>

#include <sstream>

#include "dynlist/errors.hpp"
#include "dynlist/metrics_io.hpp"
#include "dynlist/run.hpp"
#include "support.hpp"

using namespace dynlist;
using test::ins;

TEST(Engine, QuietNetworkStaysConsistent) {
  for (auto kind : all_algorithms()) {
    auto sim = test::make_sim(kind, 6);
    for (int r = 0; r < 5; ++r) {
      sim.step({});
      EXPECT_TRUE(sim.all_consistent()) << algorithm_name(kind);
    }
    EXPECT_EQ(sim.metrics().inconsistent_rounds, 0u);
    EXPECT_EQ(sim.metrics().max_ratio(), 0.0);
    EXPECT_EQ(sim.stabilize(10), 0u);
  }
}

TEST(Engine, SingleInsertRobust2Hop) {
  auto sim = test::make_sim(AlgorithmKind::Robust2Hop, 4);
  test::at(sim, 1, {ins(0, 1)});
  EXPECT_LE(sim.stabilize(10), 2u);
  for (int r = 0; r < 5; ++r) sim.step({});
  EXPECT_LE(sim.metrics().inconsistent_rounds, 1u);
  EXPECT_LE(sim.metrics().max_ratio(), 1.0);
}

TEST(Engine, MessagesOnlyCrossPresentEdges) {
  EngineConfig ec;
  ec.record_traces = true;
  AlgorithmConfig ac;
  ac.kind = AlgorithmKind::Robust2Hop;
  Simulation sim(ac, 4, ec);
  const std::vector<EdgeChange> b{ins(0, 1), ins(1, 2)};
  sim.step(b);
  for (const auto& m : sim.last_trace().messages)
    EXPECT_TRUE(sim.graph().adjacent(m.from, m.to));
  EXPECT_FALSE(sim.last_trace().messages.empty());
  EXPECT_EQ(sim.traces().size(), 1u);
  EXPECT_EQ(sim.last_trace().events.size(), 2u);
}

TEST(Engine, BandwidthViolation) {
  EngineConfig ec;
  ec.bandwidth_bits = 6;
  AlgorithmConfig ac;
  Simulation sim(ac, 4, ec);
  const std::vector<EdgeChange> b{ins(0, 1)};
  EXPECT_THROW(sim.step(b), BandwidthViolation);
}

TEST(Engine, DefaultBudgets) {
  AlgorithmConfig ac;
  EXPECT_EQ(bandwidth_budget(ac, 16), 3 * 4 + 8u);
  ac.kind = AlgorithmKind::Naive2Hop;
  EXPECT_EQ(bandwidth_budget(ac, 16), 4 + 4 + 8u);
  ac.naive_payload_bits = 16;
  EXPECT_EQ(bandwidth_budget(ac, 16), 16 + 4 + 8u);
}

TEST(Engine, StabilizeTimeout) {
  auto sim = test::make_sim(AlgorithmKind::Naive2Hop, 16);
  std::vector<EdgeChange> star;
  for (NodeId x = 1; x < 16; ++x) star.push_back(ins(0, x));
  sim.step(star);
  EXPECT_THROW(sim.stabilize(1), StabilizeTimeout);
}

TEST(Engine, BarrierRecords) {
  auto sim = test::make_sim(AlgorithmKind::Triangle, 5);
  test::at(sim, 1, {ins(0, 1), ins(1, 2), ins(0, 2)});
  const auto pending = sim.pending_items();
  const auto rounds = sim.stabilize(1000);
  ASSERT_EQ(sim.metrics().barriers.size(), 1u);
  const auto& b = sim.metrics().barriers[0];
  EXPECT_EQ(b.pending_at_start, pending);
  EXPECT_EQ(b.bound, 10 * std::max<std::size_t>(1, pending));
  EXPECT_EQ(b.rounds, rounds);
  EXPECT_EQ(sim.metrics().liveness_violations(), 0u);
}

TEST(Metrics, AmortizedRatio) {
  Metrics m;
  EXPECT_EQ(amortized_ratio(m), 0.0);
  m.ratio_series = {0.0, 1.0, 0.7};
  EXPECT_EQ(amortized_ratio(m), 1.0);
  EXPECT_EQ(m.max_ratio(), 1.0);
}

TEST(Engine, PreviousGraphIsOneRoundBehind) {
  auto sim = test::make_sim(AlgorithmKind::Robust3Hop, 3);
  test::at(sim, 1, {ins(0, 1)});
  EXPECT_TRUE(sim.graph().edge_exists(Edge(0, 1)));
  EXPECT_FALSE(sim.previous_graph().edge_exists(Edge(0, 1)));
  sim.step({});
  EXPECT_TRUE(sim.previous_graph().edge_exists(Edge(0, 1)));
}

TEST(Run, DeterministicMetricsJson) {
  const Scenario s = gen_random_churn(10, 300, 0.05, 0.05, 11);
  for (auto kind : all_algorithms()) {
    RunConfig cfg;
    cfg.algorithm.kind = kind;
    cfg.verify = true;
    std::ostringstream a, b;
    write_metrics_json(a, run(s, cfg));
    write_metrics_json(b, run(s, cfg));
    EXPECT_EQ(a.str(), b.str()) << algorithm_name(kind);
  }
}

TEST(Run, EmptyScenarioHasZeroRatio) {
  RunConfig cfg;
  const auto r = run(gen_empty(8, 50), cfg);
  EXPECT_EQ(r.metrics.rounds, 50u);
  EXPECT_EQ(r.metrics.max_ratio(), 0.0);
}

TEST(Run, ObserverSeesEveryRound) {
  RunConfig cfg;
  std::size_t calls = 0;
  cfg.observer = [&](const Simulation&) { ++calls; };
  cfg.stabilize_at_end = true;
  const auto r = run(gen_random_churn(6, 40, 0.1, 0.1, 2), cfg);
  EXPECT_EQ(calls, r.metrics.rounds);
}

TEST(MetricsIo, CsvAndJsonShape) {
  RunConfig cfg;
  cfg.verify = true;
  const auto r = run(gen_random_churn(6, 20, 0.1, 0.1, 1), cfg);
  std::ostringstream csv;
  write_rounds_csv(csv, r.metrics);
  std::size_t lines = 0;
  for (char c : csv.str()) lines += c == '\n';
  EXPECT_EQ(lines, 21u);
  std::ostringstream json;
  write_metrics_json(json, r);
  EXPECT_NE(json.str().find("\"ratio_series\""), std::string::npos);
  EXPECT_NE(json.str().find("\"verify\""), std::string::npos);
}
