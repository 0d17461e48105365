#include <gtest/gtest.h>

#include <cmath>

#include "dynlist/errors.hpp"
#include "dynlist/scenario.hpp"

using namespace dynlist;

TEST(Scenario, RandomChurnBasics) {
  EXPECT_EQ(gen_random_churn(6, 20, 0.0, 0.0, 1).change_count(), 0u);
  const auto full = gen_random_churn(3, 1, 1.0, 0.0, 1);
  ASSERT_EQ(full.slots.size(), 1u);
  EXPECT_EQ(full.slots[0].changes.size(), 3u);
  const auto a = gen_random_churn(10, 100, 0.05, 0.05, 4);
  const auto b = gen_random_churn(10, 100, 0.05, 0.05, 4);
  for (std::size_t k = 0; k < a.slots.size(); ++k)
    EXPECT_EQ(a.slots[k].changes, b.slots[k].changes);
  validate(a);
  EXPECT_THROW((void)gen_random_churn(4, 10, 1.5, 0.0, 1), ScenarioError);
}

TEST(Scenario, BurstyHasBarriers) {
  const auto s = gen_bursty_churn(8, 100, 10, 0.05, 0.05, 1);
  EXPECT_GE(s.barrier_count(), 9u);
  validate(s);
  EXPECT_THROW((void)gen_bursty_churn(8, 100, 0, 0.05, 0.05, 1), ScenarioError);
}

TEST(Scenario, PlantedCliques) {
  const auto p = gen_planted_cliques(16, 200, {3, 4, 5}, 0.02, 0.02, 3);
  ASSERT_EQ(p.cliques.size(), 3u);
  EXPECT_EQ(p.cliques[2].size(), 5u);
  validate(p.scenario);
  EXPECT_THROW((void)gen_planted_cliques(6, 10, {4, 4}, 0.0, 0.0, 1), ScenarioError);
}

TEST(Scenario, Flicker) {
  const auto s = gen_flicker_triangle(3);
  EXPECT_GE(s.change_count(), 6u);
  validate(s);
  validate(gen_flicker_triangle(6));
  EXPECT_THROW((void)gen_flicker_triangle(2), ScenarioError);
}

TEST(Scenario, MembershipLowerBound) {
  const std::size_t n = 16, k = 3, t = n + 2 - k;
  const auto s = gen_membership_lb(Pattern::path(3), n, t);
  validate(s);
  EXPECT_EQ(s.barrier_count(), t);
  // 3-path: a and b are the two leaves, so both attachments go to the center
  EXPECT_EQ(s.change_count(), 3 * t);
  EXPECT_THROW((void)gen_membership_lb(Pattern::clique(3), n, 1), ScenarioError);
  EXPECT_THROW((void)gen_membership_lb(Pattern::path(3), n, t + 1), ScenarioError);
  validate(gen_membership_lb(Pattern::cycle(4), 12, 10));
}

TEST(Scenario, CycleLowerBoundLayout) {
  const auto L = cycle_lb_layout(6, 25);
  EXPECT_EQ(L.t, 5u);
  EXPECT_EQ(L.gamma, 2u);
  EXPECT_EQ(L.d, 3u);
  validate(gen_cycle_lb(6, 25, 1));
  validate(gen_cycle_lb(7, 36, 1));
  EXPECT_THROW((void)gen_cycle_lb(6, 24, 1), ScenarioError);
  EXPECT_THROW((void)gen_cycle_lb(6, 36, 1), ScenarioError);
  EXPECT_THROW((void)gen_cycle_lb(5, 25, 1), ScenarioError);
}

TEST(Scenario, HeavyTail) {
  EXPECT_EQ(pareto_session_length(0.0, 2.0, 2.5), 2u);
  EXPECT_GE(pareto_session_length(0.999, 2.0, 2.5), 2u);
  // Large exponents collapse sessions toward x_min.
  EXPECT_EQ(pareto_session_length(0.9, 2.0, 1000.0), 3u);
  double sum = 0;
  for (int i = 0; i < 10000; ++i) sum += pareto_session_length((i + 0.5) / 10000.0, 2.0, 2.5);
  EXPECT_LT(sum / 10000.0, 10.0);
  const auto s = gen_heavy_tail_churn(10, 300, {}, 5);
  validate(s);
  EXPECT_GT(s.change_count(), 0u);
  HeavyTailParams bad;
  bad.tail_exponent = 1.0;
  EXPECT_THROW((void)gen_heavy_tail_churn(10, 10, bad, 1), ScenarioError);
}
