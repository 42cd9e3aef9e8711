#include <gtest/gtest.h>

#include <random>

#include "qdham/enumerate.hpp"
#include "qdham/hamilton.hpp"
#include "qdham/theorems.hpp"
#include "support/oracles.hpp"

namespace qdham {
namespace {

TEST(Theorem3Test, BalancedCompleteBipartite) {
  const Verdict v = check_theorem(3, complete_bipartite(4, 4));
  EXPECT_EQ(v.outcome, Outcome::ConditionMet);
  EXPECT_EQ(v.conclusion, "Hamiltonian");
  EXPECT_NEAR(*v.evidence.rho, 20.0, 1e-9);
  EXPECT_EQ(v.evidence.t, 2u);
  EXPECT_DOUBLE_EQ(*v.evidence.threshold, 24.0);
  EXPECT_NEAR(*v.margin(), 4.0, 1e-9);
  EXPECT_DOUBLE_EQ(theorem3_threshold(16, 4, 1), 23.0);
}

TEST(Theorem3Test, SmallestExceptionGraph) {
  // H_{1,1} is P_4: rho = 5 + sqrt(13) ~ 8.6056 against threshold 8.
  const Graph h = build_h(1, 2);
  const double rho = testing::dense_rho(h);
  const double thr = theorem3_threshold(3, 2, 1);
  EXPECT_DOUBLE_EQ(thr, 8.0);
  const Verdict v = check_theorem(3, h);
  EXPECT_NEAR(*v.evidence.rho, rho, 1e-9);
  if (rho <= thr + kThresholdTolerance) {
    EXPECT_EQ(v.outcome, Outcome::ExceptionGraph);
  } else {
    EXPECT_EQ(v.outcome, Outcome::ConditionNotMet);
  }
}

TEST(Theorem3Test, ExceptionGraphsNeverConcludeHamiltonian) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (std::size_t t = 1; 2 * t <= n; ++t) {
      const Verdict v = check_theorem(3, build_h(t, n));
      EXPECT_NE(v.outcome, Outcome::ConditionMet) << "t=" << t << " n=" << n;
      EXPECT_FALSE(has_hamilton_cycle(build_h(t, n)).holds);
    }
}

TEST(Theorem3Test, Inapplicable) {
  EXPECT_EQ(check_theorem(3, complete(3)).outcome, Outcome::Inapplicable);
  EXPECT_EQ(check_theorem(3, complete_bipartite(2, 3)).outcome, Outcome::Inapplicable);
  const Verdict d = check_theorem(3, disjoint_union(complete(2), complete(2)));
  EXPECT_EQ(d.outcome, Outcome::Inapplicable);
  EXPECT_EQ(d.reason, "disconnected");
  EXPECT_EQ(check_theorem(3, complete(2)).reason, "no valid t");
}

TEST(Theorem6Test, Examples) {
  const Verdict k8 = check_theorem(6, complete(8));
  EXPECT_EQ(k8.outcome, Outcome::ConditionMet);
  EXPECT_EQ(k8.conclusion, "Hamilton-connected");
  EXPECT_NEAR(*k8.evidence.rho, 14.0, 1e-9);
  EXPECT_DOUBLE_EQ(*k8.evidence.threshold, 17.5);

  const Verdict np = check_theorem(6, join(complete(4), empty(4)));
  EXPECT_EQ(np.outcome, Outcome::ConditionNotMet);
  EXPECT_NEAR(*np.margin(), -0.5, 1e-9);

  const Verdict big = check_theorem(6, join(complete(6), empty(6)));
  EXPECT_EQ(big.outcome, Outcome::ConditionNotMet);
  EXPECT_NEAR(*big.evidence.rho, 28.8102, 1e-4);
  EXPECT_DOUBLE_EQ(*big.evidence.threshold, 27.0);
}

TEST(Theorem6Test, Inapplicable) {
  EXPECT_EQ(check_theorem(6, complete(4)).reason, "order below 5");
  EXPECT_EQ(check_theorem(6, cycle(8)).reason, "minimum degree below 3");
}

TEST(Theorem8Test, Examples) {
  const Verdict k7 = check_theorem(8, complete(7));
  EXPECT_EQ(k7.outcome, Outcome::ConditionMet);
  EXPECT_EQ(k7.conclusion, "traceable-from-every-vertex");
  EXPECT_NEAR(*k7.evidence.rho, 12.0, 1e-9);
  EXPECT_DOUBLE_EQ(*k7.evidence.threshold, 16.0);

  const Verdict a = check_theorem(8, join(complete(3), empty(4)));
  EXPECT_EQ(a.outcome, Outcome::ConditionNotMet);
  EXPECT_NEAR(*a.evidence.rho, 16.4244, 1e-4);
  const Verdict b = check_theorem(8, join(complete(5), empty(6)));
  EXPECT_EQ(b.outcome, Outcome::ConditionNotMet);
  EXPECT_NEAR(*b.evidence.rho, 27.2621, 1e-4);
  EXPECT_NEAR(*b.evidence.threshold, 280.0 / 11.0, 1e-12);
}

TEST(Theorem10Test, FiveCycle) {
  const Verdict v = check_theorem(10, cycle(5));
  EXPECT_EQ(v.outcome, Outcome::ConditionNotMet);
  EXPECT_NEAR(*v.evidence.rho, 12.0, 1e-9);
  EXPECT_DOUBLE_EQ(*v.evidence.threshold, 11.8);
}

TEST(Theorem10Test, DisconnectedComplement) {
  Graph g = complete(6);
  g.remove_edge(0, 1);
  const Verdict v = check_theorem(10, g);
  EXPECT_EQ(v.outcome, Outcome::Inapplicable);
  EXPECT_EQ(v.reason, "complement-disconnected");
  EXPECT_EQ(check_theorem(10, Graph(1)).outcome, Outcome::Inapplicable);
}

TEST(Theorem10Test, SparseGraphsNeverMeetTheCondition) {
  // With a connected complement the hypothesis forces m >= C(n-1, 2).
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      if (!is_connected(complement(g))) continue;
      const Verdict v = check_theorem(10, g);
      if (g.edge_count() < (n - 1) * (n - 2) / 2) {
        EXPECT_EQ(v.outcome, Outcome::ConditionNotMet) << emit_graph6(g);
      }
    }
  }
}

TEST(EdgeConditionTest, Examples) {
  const EdgeCondition l9 = edge_condition(add_isolated(complete(4)), EdgeLemma::L9);
  EXPECT_TRUE(l9.holds);
  EXPECT_EQ(l9.slack, 0);

  const EdgeCondition l5 = edge_condition(complete(8), EdgeLemma::L5);
  EXPECT_TRUE(l5.holds);
  EXPECT_EQ(l5.slack, 7);

  const EdgeCondition l1 = edge_condition(build_h(2, 4), EdgeLemma::L1);
  EXPECT_TRUE(l1.holds);
  EXPECT_EQ(l1.slack, 0);
  EXPECT_EQ(l1.t, 2u);

  const EdgeCondition l7 = edge_condition(cycle(6), EdgeLemma::L7);
  EXPECT_FALSE(l7.holds);
  EXPECT_EQ(l7.slack, 6 - 10);

  EXPECT_FALSE(edge_condition(cycle(6), EdgeLemma::L5).applicable);
  EXPECT_FALSE(edge_condition(complete(3), EdgeLemma::L1).applicable);
}

TEST(EdgeConditionTest, SpectralConditionsImplyEdgeConditions) {
  // The spectral hypotheses are stronger than the edge-count ones.
  for (std::size_t n = 4; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      if (!is_connected(g)) continue;
      const GraphAnalysis a = analyze(g);
      if (check_theorem6(a).outcome == Outcome::ConditionMet) {
        EXPECT_TRUE(edge_condition(g, EdgeLemma::L5).holds) << emit_graph6(g);
      }
      if (check_theorem8(a).outcome == Outcome::ConditionMet) {
        EXPECT_TRUE(edge_condition(g, EdgeLemma::L7).holds) << emit_graph6(g);
      }
    }
  }
}

TEST(DetectExceptionTest, Examples) {
  EXPECT_EQ(detect_exception(join(complete(3), disjoint_union(complete(3), empty(2))),
                             ExceptionKind::NP1),
            std::optional<std::string>("K_3 v (K_{n-5} + 2K_1)"));
  EXPECT_FALSE(detect_exception(cycle(6), ExceptionKind::NP1));
  EXPECT_EQ(detect_exception(add_isolated(complete(6)), ExceptionKind::KIsolated),
            std::optional<std::string>("K_{n-1}+v"));
  EXPECT_EQ(detect_exception(add_pendant(complete(6)), ExceptionKind::KPendant),
            std::optional<std::string>("K_{n-1}+e"));
  EXPECT_EQ(detect_exception(build_h(2, 5), ExceptionKind::H),
            std::optional<std::string>("H_{2,3}"));
  // Relabelled members are still recognised.
  const Graph g = testing::relabel(join(complete(4), empty(4)), {7, 6, 5, 4, 3, 2, 1, 0});
  EXPECT_EQ(detect_exception(g, ExceptionKind::NP1), std::optional<std::string>("K_4 v 4K_1"));
}

TEST(DetectExceptionTest, SizeLimit) {
  // Candidates exist at order 20 with matching edge count only for the
  // member itself.
  EXPECT_THROW(detect_exception(add_isolated(complete(19)), ExceptionKind::KIsolated),
               SizeLimitError);
  EXPECT_FALSE(detect_exception(cycle(20), ExceptionKind::KIsolated));
}

TEST(FamilyThresholdTest, MembersExceedTheirThresholds) {
  for (std::size_t n = 4; n <= 16; ++n) {
    for (const auto& m : build_family(Family::NP1, n)) {
      const Verdict v = check_theorem(6, m.graph);
      EXPECT_EQ(v.outcome, Outcome::ConditionNotMet) << m.id;
      EXPECT_LT(*v.margin(), 0.0) << m.id;
    }
    for (const auto& m : build_family(Family::NP2, n)) {
      const Verdict v = check_theorem(8, m.graph);
      EXPECT_EQ(v.outcome, Outcome::ConditionNotMet) << m.id;
      EXPECT_LT(*v.margin(), 0.0) << m.id;
    }
  }
}

TEST(SoundnessTest, ConclusionsMatchTheOracles) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const GraphAnalysis a = analyze(g);
      if (check_theorem3(a).outcome == Outcome::ConditionMet) {
        EXPECT_TRUE(has_hamilton_cycle(g).holds) << emit_graph6(g);
      }
      if (check_theorem6(a).outcome == Outcome::ConditionMet) {
        EXPECT_TRUE(is_hamilton_connected(g).holds) << emit_graph6(g);
      }
      if (check_theorem8(a).outcome == Outcome::ConditionMet) {
        EXPECT_TRUE(is_traceable_from_every_vertex(g).holds) << emit_graph6(g);
      }
      const Verdict t10 = check_theorem10(a);
      if (t10.conclusion == "Hamiltonian") {
        EXPECT_TRUE(has_hamilton_cycle(g).holds) << emit_graph6(g);
      }
      if (t10.conclusion == "traceable") {
        EXPECT_TRUE(has_hamilton_path(g).holds) << emit_graph6(g);
      }
    }
  }
}

TEST(VerdictTest, EvidenceRecomputesTheOutcome) {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 300; ++i) {
    const Graph g = testing::random_connected_graph(4 + i % 9, 0.5 + 0.05 * (i % 8), rng);
    for (int theorem : {3, 6, 8, 10}) {
      const Verdict v = check_theorem(theorem, g);
      if (v.outcome == Outcome::Inapplicable) continue;
      ASSERT_TRUE(v.evidence.rho && v.evidence.threshold);
      const bool met = *v.evidence.rho <= *v.evidence.threshold + kThresholdTolerance;
      EXPECT_EQ(met, v.outcome != Outcome::ConditionNotMet);
      EXPECT_EQ(v.evidence.boundary,
                std::abs(*v.evidence.rho - *v.evidence.threshold) <= kThresholdTolerance);
      EXPECT_EQ(v.evidence.n, g.order());
      EXPECT_EQ(v.evidence.m, g.edge_count());
      EXPECT_EQ(v.evidence.delta, min_degree(g));
      const Graph& source = theorem == 10 ? complement(g) : g;
      EXPECT_NEAR(*v.evidence.rho, testing::dense_rho(source), 1e-8);
    }
  }
  EXPECT_THROW(check_theorem(5, complete(5)), InvalidParameter);
}

}  // namespace
}  // namespace qdham
