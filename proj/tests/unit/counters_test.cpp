#include <gtest/gtest.h>

#include <random>

#include "ibet/counters.hpp"
#include "ibet/ibet.hpp"
#include "support/random_graphs.hpp"

using namespace ibet;

namespace {

Graph path(std::size_t n) {
  Graph g(n, false, false);
  for (NodeId i = 0; i + 1 < n; ++i) g.add_edge_min(i, i + 1, 1.0);
  return g;
}

}  // namespace

TEST(ExtendedSize, Examples) {
  const auto p = path(3);
  EXPECT_EQ(extended_size(p, {}), 0u);
  const std::vector<NodeId> middle = {1};
  EXPECT_EQ(extended_size(p, middle), 3u);
  auto c4 = path(4);
  c4.add_edge_min(3, 0, 1.0);
  const std::vector<NodeId> all = {0, 1, 2, 3};
  EXPECT_EQ(extended_size(c4, all), 12u);
}

TEST(ExtendedSize, DirectedCountsBothDirections) {
  Graph g(3, true, false);
  g.add_edge_min(0, 1, 1.0);
  g.add_edge_min(2, 1, 1.0);
  const std::vector<NodeId> hub = {1};
  EXPECT_EQ(extended_size(g, hub), 3u);
}

TEST(CheckBounds, PathShortcut) {
  auto g = path(4);
  const auto before = g;
  auto st = init_static_state(g, false);
  AffectedDelta delta;
  const auto report = ibet_update(g, st.apsp, st.scores, {0, 3, 1.0}, IbetObservers{&delta, nullptr},
                                  IbetOptions{DependencyMode::TwoPass, false});
  const auto verdict = check_bounds(report, before, delta);
  EXPECT_TRUE(verdict.ok());
  EXPECT_GT(verdict.apsp_bound, 0.0);
  EXPECT_GT(verdict.dependency_bound, 0.0);
  EXPECT_GT(verdict.apsp_ops, 0u);
}

TEST(CheckBounds, NoOpCountsNothing) {
  auto g = path(4);
  const auto before = g;
  auto st = init_static_state(g, false);
  AffectedDelta delta;
  const auto report = ibet_update(g, st.apsp, st.scores, {0, 1, 1.0}, IbetObservers{&delta, nullptr});
  EXPECT_EQ(report.apsp.total(), 0u);
  EXPECT_EQ(report.dependency.total(), 0u);
  EXPECT_TRUE(check_bounds(report, before, delta).ok());
}

TEST(CheckBounds, StarInsertionTouchingAllNodes) {
  Graph g(40, false, false);
  for (NodeId leaf = 1; leaf < 39; ++leaf) g.add_edge_min(0, leaf, 1.0);
  g.add_edge_min(38, 39, 1.0);
  const auto before = g;
  auto st = init_static_state(g, false);
  AffectedDelta delta;
  const auto report = ibet_update(g, st.apsp, st.scores, {0, 39, 1.0}, IbetObservers{&delta, nullptr});
  EXPECT_GE(report.affected_sources + report.affected_targets, 39u);
  const auto verdict = check_bounds(report, before, delta);
  EXPECT_TRUE(verdict.apsp_ok) << verdict.apsp_ops << " vs " << verdict.apsp_bound;
  EXPECT_TRUE(verdict.dependency_ok) << verdict.dependency_ops << " vs " << verdict.dependency_bound;
}

TEST(CheckBounds, HoldsOnRandomEvents) {
  for (const auto& c : gen::corpus(60, 3)) {
    std::mt19937_64 rng(c.seed);
    auto g = gen::random_graph(c.spec, rng);
    auto st = init_static_state(g, false);
    for (int e = 0; e < 6; ++e) {
      const auto before = g;
      AffectedDelta delta;
      const auto report = ibet_update(g, st.apsp, st.scores, gen::random_event(g, rng), IbetObservers{&delta, nullptr});
      const auto verdict = check_bounds(report, before, delta);
      EXPECT_TRUE(verdict.ok()) << verdict.apsp_ops << "/" << verdict.apsp_bound << " " << verdict.dependency_ops
                                << "/" << verdict.dependency_bound;
    }
  }
}

TEST(OpCounters, TotalsAndSum) {
  OpCounters a{1, 2, 3, 4, 5};
  OpCounters b{10, 20, 30, 40, 50};
  a += b;
  EXPECT_EQ(a, (OpCounters{11, 22, 33, 44, 55}));
  EXPECT_EQ(a.total(), 165u);
}
