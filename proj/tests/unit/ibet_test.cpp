#include <gtest/gtest.h>

#include <map>
#include <random>

#include "ibet/brandes.hpp"
#include "ibet/ibet.hpp"
#include "ibet/oracle.hpp"
#include "support/random_graphs.hpp"

using namespace ibet;

namespace {

Graph path(std::size_t n) {
  Graph g(n, false, false);
  for (NodeId i = 0; i + 1 < n; ++i) g.add_edge_min(i, i + 1, 1.0);
  return g;
}

Graph weighted_cycle4() {
  Graph g(4, false, true);
  for (NodeId i = 0; i < 4; ++i) g.add_edge_min(i, (i + 1) % 4, 1.0);
  return g;
}

Graph weighted_triangle(double ac) {
  Graph g(3, false, true);
  g.add_edge_min(0, 1, 1.0);
  g.add_edge_min(1, 2, 1.0);
  g.add_edge_min(0, 2, ac);
  return g;
}

std::map<std::pair<NodeId, NodeId>, std::pair<double, double>> staged_map(const AffectedDelta& delta) {
  std::map<std::pair<NodeId, NodeId>, std::pair<double, double>> out;
  for (const auto& p : delta.staged) out[{p.source, p.target}] = {p.dist, p.sigma};
  return out;
}

std::map<NodeId, double> extracted(const DependencyTrace& trace, NodeId source, bool increase) {
  std::map<NodeId, double> out;
  for (const auto& pass : trace.passes)
    if (pass.source == source && pass.increase == increase)
      for (auto [node, value] : pass.extracted) out[node] = value;
  return out;
}

void expect_matches_recomputation(const Graph& g, const ApspState& apsp, const Scores& scores, const char* what) {
  const auto fresh = init_static_state(g, false);
  for (NodeId s = 0; s < g.node_count(); ++s) {
    ASSERT_NEAR(scores[s], fresh.scores[s], 1e-8) << what << " node " << s;
    for (NodeId t = 0; t < g.node_count(); ++t) {
      ASSERT_TRUE(dist_equal(apsp.dist(s, t), fresh.apsp.dist(s, t))) << what;
      ASSERT_NEAR(apsp.sigma(s, t), fresh.apsp.sigma(s, t), 1e-8) << what;
    }
  }
}

}  // namespace

TEST(FindAffectedSources, PathShortcut) {
  const auto g = path(4);
  const auto a = init_apsp(g);
  IbetWorkspace ws(4);
  EXPECT_EQ(find_affected_sources(g, {0, 3, 1.0}, a, ws), (std::vector<NodeId>{0, 1}));
}

TEST(FindAffectedSources, PathTriangle) {
  const auto g = path(3);
  IbetWorkspace ws(3);
  EXPECT_EQ(find_affected_sources(g, {0, 2, 1.0}, init_apsp(g), ws), (std::vector<NodeId>{0}));
}

TEST(FindAffectedSources, GuardRejectsLongEdge) {
  Graph g(3, false, true);
  g.add_edge_min(0, 1, 1.0);
  g.add_edge_min(1, 2, 1.0);
  IbetWorkspace ws(3);
  const auto a = init_apsp(g);
  EXPECT_TRUE(find_affected_sources(g, {0, 2, 2.5}, a, ws).empty());
  EXPECT_FALSE(apsp_update(g, {0, 2, 2.5}, a, ws).active);
}

TEST(SelectAffectedSources, PrefersSmallerSide) {
  const auto g = path(6);
  const auto a = init_apsp(g);
  IbetWorkspace ws(6);
  EXPECT_EQ(find_affected_sources(g, {1, 5, 1.0}, a, ws), (std::vector<NodeId>{1, 0, 2}));
  const auto picked = select_affected_sources(g, {1, 5, 1.0}, a, ws);
  EXPECT_EQ(picked.event.u, 5u);
  EXPECT_EQ(picked.event.v, 1u);
  EXPECT_EQ(picked.sources, (std::vector<NodeId>{5, 4}));
}

TEST(SelectAffectedSources, DirectedKeepsOrientation) {
  Graph g(4, true, false);
  for (NodeId i = 0; i < 3; ++i) g.add_edge_min(i, i + 1, 1.0);
  IbetWorkspace ws(4);
  const auto picked = select_affected_sources(g, {3, 0, 1.0}, init_apsp(g), ws);
  EXPECT_EQ(picked.event.u, 3u);
  EXPECT_EQ(picked.sources, (std::vector<NodeId>{3, 2, 1}));
}

TEST(ApspUpdate, PathShortcutStagesThreePairs) {
  const auto g = path(4);
  const auto a = init_apsp(g);
  IbetWorkspace ws(4);
  const auto delta = apsp_update(g, {0, 3, 1.0}, a, ws, nullptr, false);
  ASSERT_TRUE(delta.active);
  EXPECT_EQ(delta.targets, (std::vector<NodeId>{3, 2}));
  EXPECT_EQ(delta.predecessor, (std::vector<NodeId>{3, 3}));
  const auto staged = staged_map(delta);
  ASSERT_EQ(staged.size(), 3u);
  EXPECT_EQ(staged.at({0, 3}), std::make_pair(1.0, 1.0));
  EXPECT_EQ(staged.at({0, 2}), std::make_pair(2.0, 2.0));
  EXPECT_EQ(staged.at({1, 3}), std::make_pair(2.0, 2.0));
  const auto s2 = delta.staged_for_target(1);
  ASSERT_EQ(s2.size(), 1u);
  EXPECT_EQ(s2[0].source, 0u);
}

TEST(ApspUpdate, ChordOfEqualLengthAddsPaths) {
  const auto g = weighted_cycle4();
  const auto a = init_apsp(g);
  IbetWorkspace ws(4);
  const auto delta = apsp_update(g, {0, 2, 2.0}, a, ws, nullptr, false);
  const auto staged = staged_map(delta);
  EXPECT_EQ(staged.at({0, 2}), std::make_pair(2.0, 3.0));
  for (const auto& p : delta.staged) EXPECT_EQ(p.dist, a.dist(p.source, p.target));
}

TEST(DependencyPasses, PathShortcutSourceZero) {
  auto g = path(4);
  auto a = init_apsp(g);
  IbetWorkspace ws(4);
  const UpdateEvent event{0, 3, 1.0};
  const auto delta = apsp_update(g, event, a, ws, nullptr, false);
  const auto grouped = group_by_source(delta, 4);
  ASSERT_EQ(delta.sources_of_v[0], 0u);

  Scores scores(4, 0.0);
  DependencyTrace trace;
  dependency_decrease(g, 0, grouped.of(0), a, scores, ws, nullptr, &trace);
  const auto old_delta = extracted(trace, 0, false);
  EXPECT_DOUBLE_EQ(old_delta.at(1), 2.0);
  EXPECT_DOUBLE_EQ(old_delta.at(2), 1.0);
  EXPECT_DOUBLE_EQ(scores[1], -4.0);
  EXPECT_DOUBLE_EQ(scores[2], -2.0);

  g.apply_update(event);
  commit(a, delta, true);
  dependency_increase(g, 0, grouped.of(0), a, scores, ws, nullptr, &trace);
  const auto new_delta = extracted(trace, 0, true);
  EXPECT_DOUBLE_EQ(new_delta.at(1), 0.5);
  EXPECT_DOUBLE_EQ(new_delta.at(3), 0.5);
}

TEST(DependencyPasses, WeightedTriangleDecrease) {
  const auto g = weighted_triangle(3.0);
  const auto a = init_apsp(g);
  IbetWorkspace ws(3);
  const auto delta = apsp_update(g, {0, 2, 1.0}, a, ws, nullptr, false);
  ASSERT_EQ(delta.sources_of_v, (std::vector<NodeId>{0}));
  const auto grouped = group_by_source(delta, 3);
  Scores scores(3, 0.0);
  DependencyTrace trace;
  dependency_decrease(g, 0, grouped.of(0), a, scores, ws, nullptr, &trace);
  EXPECT_DOUBLE_EQ(extracted(trace, 0, false).at(1), 1.0);
  EXPECT_DOUBLE_EQ(scores[1], -2.0);
}

TEST(IbetUpdate, PathShortcutBecomesCycle) {
  for (auto mode : {DependencyMode::Fused, DependencyMode::TwoPass})
    for (bool side : {true, false}) {
      auto g = path(4);
      auto st = init_static_state(g, false);
      ASSERT_EQ(st.scores, (Scores{0, 4, 4, 0}));
      IbetWorkspace ws(4);
      const auto report = ibet_update(g, st.apsp, st.scores, {0, 3, 1.0}, ws, {}, {mode, side});
      EXPECT_EQ(report.outcome, UpdateOutcome::Inserted);
      EXPECT_EQ(st.scores, (Scores{1, 1, 1, 1}));
      EXPECT_EQ(report.affected_sources, 2u);
    }
}

TEST(IbetUpdate, NoOpLeavesEverything) {
  auto g = path(4);
  auto st = init_static_state(g, false);
  const auto before = st;
  AffectedDelta delta;
  const auto report = ibet_update(g, st.apsp, st.scores, {1, 2, 1.0}, IbetObservers{&delta, nullptr});
  EXPECT_EQ(report.outcome, UpdateOutcome::NoOp);
  EXPECT_EQ(report.affected_sources, 0u);
  EXPECT_EQ(report.apsp.total() + report.dependency.total(), 0u);
  EXPECT_EQ(st.scores, before.scores);
  EXPECT_EQ(st.apsp, before.apsp);
  EXPECT_FALSE(delta.active);
}

TEST(IbetUpdate, UnaffectingInsertionOnlyMutatesGraph) {
  Graph g(3, false, true);
  g.add_edge_min(0, 1, 1.0);
  g.add_edge_min(1, 2, 1.0);
  auto st = init_static_state(g, false);
  const auto before = st;
  IbetWorkspace ws(3);
  ibet_update(g, st.apsp, st.scores, {0, 2, 5.0}, ws);
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_EQ(st.apsp, before.apsp);
  EXPECT_EQ(st.scores, before.scores);
}

TEST(IbetUpdate, ConnectsComponents) {
  Graph g(6, false, false);
  g.add_edge_min(0, 1, 1.0);
  g.add_edge_min(1, 2, 1.0);
  g.add_edge_min(3, 4, 1.0);
  g.add_edge_min(4, 5, 1.0);
  auto st = init_static_state(g, false);
  IbetWorkspace ws(6);
  ibet_update(g, st.apsp, st.scores, {2, 3, 1.0}, ws);
  expect_matches_recomputation(g, st.apsp, st.scores, "bridge");
}

TEST(IbetProperties, AllVariantsMatchRecomputation) {
  const IbetOptions variants[] = {{DependencyMode::Fused, true},
                                  {DependencyMode::Fused, false},
                                  {DependencyMode::TwoPass, true},
                                  {DependencyMode::TwoPass, false}};
  for (const auto& c : gen::corpus(48, 99)) {
    for (const auto& options : variants) {
      std::mt19937_64 rng(c.seed);
      auto g = gen::random_graph(c.spec, rng);
      auto st = init_static_state(g, false);
      IbetWorkspace ws(g.node_count());
      for (int e = 0; e < 8; ++e) {
        ibet_update(g, st.apsp, st.scores, gen::random_event(g, rng), ws, {}, options);
        expect_matches_recomputation(g, st.apsp, st.scores, "variant");
      }
    }
  }
}

TEST(IbetProperties, FusedAndTwoPassAccumulateSameDeltas) {
  for (const auto& c : gen::corpus(40, 7)) {
    std::mt19937_64 rng(c.seed);
    auto g = gen::random_graph(c.spec, rng);
    auto st = init_static_state(g, false);
    for (int e = 0; e < 6; ++e) {
      const auto event = gen::random_event(g, rng);
      auto g2 = g;
      auto st2 = st;
      DependencyTrace fused, two_pass;
      ibet_update(g, st.apsp, st.scores, event, {nullptr, &fused}, {DependencyMode::Fused, true});
      ibet_update(g2, st2.apsp, st2.scores, event, {nullptr, &two_pass}, {DependencyMode::TwoPass, true});
      ASSERT_EQ(fused.passes.size(), two_pass.passes.size());
      for (const auto& pass : two_pass.passes) {
        const auto want = extracted(two_pass, pass.source, pass.increase);
        const auto got = extracted(fused, pass.source, pass.increase);
        ASSERT_EQ(got.size(), want.size());
        for (const auto& [node, value] : want) EXPECT_NEAR(got.at(node), value, 1e-9);
      }
    }
  }
}

TEST(IbetProperties, StagedSourcesNestAlongPredecessors) {
  for (const auto& c : gen::corpus(60, 31)) {
    std::mt19937_64 rng(c.seed);
    auto g = gen::random_graph(c.spec, rng);
    auto st = init_static_state(g, false);
    for (int e = 0; e < 6; ++e) {
      const auto before = g;
      AffectedDelta delta;
      ibet_update(g, st.apsp, st.scores, gen::random_event(g, rng), IbetObservers{&delta, nullptr});
      oracle::PairSet staged;
      for (const auto& p : delta.staged) {
        EXPECT_TRUE(dist_less_equal(p.dist, p.old_dist));
        EXPECT_TRUE(dist_less(p.dist, p.old_dist) || p.sigma != p.old_sigma);
        staged.insert({p.source, p.target});
        if (!g.directed()) staged.insert({p.target, p.source});
      }
      EXPECT_EQ(staged, oracle::affected_pairs(before, g));
      for (std::size_t i = 1; i < delta.targets.size(); ++i) {
        const auto parent = std::find(delta.targets.begin(), delta.targets.end(), delta.predecessor[i]);
        ASSERT_NE(parent, delta.targets.end());
        const auto parent_sources = delta.staged_for_target(std::size_t(parent - delta.targets.begin()));
        for (const auto& p : delta.staged_for_target(i))
          EXPECT_TRUE(std::any_of(parent_sources.begin(), parent_sources.end(),
                                  [&](const StagedPair& q) { return q.source == p.source; }));
      }
    }
  }
}
