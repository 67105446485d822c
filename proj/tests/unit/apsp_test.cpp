#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "ibet/apsp.hpp"
#include "ibet/brandes.hpp"
#include "ibet/ibet.hpp"
#include "support/random_graphs.hpp"

using namespace ibet;

namespace {

Graph path(std::size_t n) {
  Graph g(n, false, false);
  for (NodeId i = 0; i + 1 < n; ++i) g.add_edge_min(i, i + 1, 1.0);
  return g;
}

struct ScopedCap {
  explicit ScopedCap(const char* value) { setenv("IBET_MEMORY_CAP_BYTES", value, 1); }
  ~ScopedCap() { unsetenv("IBET_MEMORY_CAP_BYTES"); }
};

}  // namespace

TEST(InitApsp, PathRow) {
  const auto a = init_apsp(path(3));
  EXPECT_EQ(a.dist(0, 0), 0.0);
  EXPECT_EQ(a.dist(0, 2), 2.0);
  EXPECT_EQ(a.sigma(0, 2), 1.0);
  EXPECT_EQ(a.sigma(2, 2), 1.0);
}

TEST(InitApsp, DisconnectedPair) {
  const auto a = init_apsp(Graph(2, false, false));
  EXPECT_EQ(a.dist(0, 1), kInfinity);
  EXPECT_EQ(a.sigma(0, 1), 0.0);
  EXPECT_EQ(a.dist(1, 1), 0.0);
}

TEST(InitApsp, CycleSigma) {
  auto g = path(4);
  g.add_edge_min(3, 0, 1.0);
  EXPECT_EQ(init_apsp(g).sigma(0, 2), 2.0);
}

TEST(InitApsp, StaticStateKeepsDependencies) {
  const auto g = path(4);
  const auto st = init_static_state(g, true);
  EXPECT_EQ(st.apsp, init_apsp(g));
  EXPECT_EQ(st.scores, brandes_betweenness(g));
  ASSERT_EQ(st.dependencies.size(), 16u);
  EXPECT_EQ(st.dependencies[0 * 4 + 1], 2.0);
  EXPECT_EQ(st.dependencies[0 * 4 + 2], 1.0);
  EXPECT_TRUE(init_static_state(g, false).dependencies.empty());
}

TEST(Commit, EmptyDeltaLeavesState) {
  auto a = init_apsp(path(3));
  const auto before = a;
  commit(a, AffectedDelta{}, true);
  EXPECT_EQ(a, before);
}

TEST(Commit, WritesMirrorForUndirected) {
  auto a = init_apsp(path(3));
  AffectedDelta delta;
  delta.staged.push_back({0, 2, 1.0, 1.0, 2.0, 1.0});
  commit(a, delta, true);
  EXPECT_EQ(a.dist(0, 2), 1.0);
  EXPECT_EQ(a.dist(2, 0), 1.0);

  auto directed = init_apsp(path(3));
  commit(directed, delta, false);
  EXPECT_EQ(directed.dist(2, 0), 2.0);
}

TEST(Commit, RejectsDistanceIncrease) {
  auto a = init_apsp(path(3));
  AffectedDelta delta;
  delta.staged.push_back({0, 1, 5.0, 1.0, 1.0, 1.0});
  EXPECT_THROW(commit(a, delta, true), std::logic_error);
}

TEST(Commit, MatchesRecomputationAfterUpdate) {
  std::mt19937_64 rng(77);
  for (int round = 0; round < 80; ++round) {
    gen::GraphSpec spec{5 + rng() % 30, round % 2 == 1, round % 4 >= 2, 0.15};
    auto g = gen::random_graph(spec, rng);
    auto a = init_apsp(g);
    const auto event = gen::random_event(g, rng);
    IbetWorkspace ws(g.node_count());
    const auto delta = apsp_update(g, event, a, ws);
    g.apply_update(event);
    commit(a, delta, !g.directed());
    const auto fresh = init_apsp(g);
    for (NodeId s = 0; s < g.node_count(); ++s)
      for (NodeId t = 0; t < g.node_count(); ++t) {
        ASSERT_TRUE(dist_equal(a.dist(s, t), fresh.dist(s, t))) << round;
        ASSERT_NEAR(a.sigma(s, t), fresh.sigma(s, t), 1e-9 * std::max(1.0, fresh.sigma(s, t))) << round;
      }
  }
}

TEST(ApspProperties, InvariantsOnRandomGraphs) {
  std::mt19937_64 rng(78);
  for (int round = 0; round < 40; ++round) {
    gen::GraphSpec spec{25, round % 2 == 1, round % 4 >= 2, 0.12};
    const auto g = gen::random_graph(spec, rng);
    const auto a = init_apsp(g);
    for (NodeId s = 0; s < g.node_count(); ++s) {
      EXPECT_EQ(a.dist(s, s), 0.0);
      EXPECT_EQ(a.sigma(s, s), 1.0);
      for (NodeId t = 0; t < g.node_count(); ++t) {
        EXPECT_EQ(a.sigma(s, t) > 0.0, a.dist(s, t) < kInfinity);
        for (const auto& arc : g.in(t)) EXPECT_TRUE(dist_less_equal(a.dist(s, t), a.dist(s, arc.node) + arc.weight));
      }
    }
  }
}

TEST(Capacity, CapFromEnvironment) {
  EXPECT_EQ(quadratic_bytes(100, 2), 100u * 100u * 8u * 2u);
  {
    ScopedCap cap("1000");
    EXPECT_EQ(memory_cap_bytes(), 1000u);
    EXPECT_THROW(ensure_capacity(100, 2), CapacityError);
    EXPECT_THROW(init_apsp(path(100)), CapacityError);
    EXPECT_NO_THROW(ensure_capacity(5, 2));
  }
  {
    ScopedCap cap("lots");
    EXPECT_THROW(memory_cap_bytes(), std::invalid_argument);
  }
  EXPECT_EQ(memory_cap_bytes(), std::size_t{4} << 30);
}
