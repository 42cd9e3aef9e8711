#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qdham/enumerate.hpp"
#include "qdham/families.hpp"
#include "qdham/spectral.hpp"
#include "support/oracles.hpp"

namespace qdham {
namespace {

double rho_of(const Graph& g) { return spectral_radius(qd_matrix(all_pairs_distances(g))).rho; }

TEST(SpectralRadiusTest, ClosedForms) {
  for (std::size_t n = 2; n <= 12; ++n) EXPECT_NEAR(rho_of(complete(n)), 2.0 * n - 2.0, 1e-9);
  EXPECT_NEAR(rho_of(path(3)), (7.0 + std::sqrt(17.0)) / 2.0, 1e-9);
  EXPECT_NEAR(rho_of(join(complete(4), empty(4))), 18.0, 1e-9);
  EXPECT_EQ(rho_of(Graph(1)), 0.0);
}

TEST(SpectralRadiusTest, AgreesWithDenseEigensolver) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = 2 + i % 25;
    const Graph g = testing::random_connected_graph(n, 0.2 + 0.1 * (i % 5), rng);
    EXPECT_NEAR(rho_of(g), testing::dense_rho(g), 1e-8) << emit_graph6(g);
  }
}

TEST(SpectralRadiusTest, EigenpairProperties) {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 2 + i % 20;
    const Graph g = testing::random_connected_graph(n, 0.3, rng);
    const QDMatrix q = qd_matrix(all_pairs_distances(g));
    const SpectralEstimate est = spectral_radius(q);
    EXPECT_LE(est.residual, PowerOptions{}.tolerance);
    double norm = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      EXPECT_GT(est.vector[u], 0.0);
      norm += est.vector[u] * est.vector[u];
      // rho x_u = Tr(u) x_u + sum_v d(u, v) x_v
      double row = 0.0;
      for (std::size_t v = 0; v < n; ++v) row += static_cast<double>(q.at(u, v)) * est.vector[v];
      EXPECT_NEAR(row, est.rho * est.vector[u], 1e-8);
    }
    EXPECT_NEAR(norm, 1.0, 1e-9);
  }
}

TEST(SpectralRadiusTest, IterationCap) {
  PowerOptions opts;
  opts.max_iterations = 1;
  try {
    spectral_radius(qd_matrix(all_pairs_distances(path(6))), opts);
    FAIL();
  } catch (const NoConvergence& e) {
    EXPECT_EQ(e.best().iterations, 1u);
    EXPECT_GT(e.best().residual, opts.tolerance);
  }
}

TEST(LowerBoundTest, SigmaBound) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_connected_graph(2 + i % 15, 0.3, rng);
    const DistanceData d = all_pairs_distances(g);
    const double rho = spectral_radius(qd_matrix(d)).rho;
    EXPECT_GE(rho, lower_bound_sigma(d) - 1e-9);
    if (is_transmission_regular(d)) {
      EXPECT_NEAR(rho, lower_bound_sigma(d), 1e-9);
    } else {
      EXPECT_GT(rho, lower_bound_sigma(d) + 1e-9);
    }
  }
  const DistanceData c7 = all_pairs_distances(cycle(7));
  EXPECT_NEAR(spectral_radius(qd_matrix(c7)).rho, lower_bound_sigma(c7), 1e-9);
}

TEST(LowerBoundTest, BipartiteBoundHoldsAndIsAttained) {
  EXPECT_DOUBLE_EQ(lower_bound_bipartite(8), 20.0);
  EXPECT_DOUBLE_EQ(lower_bound_bipartite(3), (7.0 + std::sqrt(17.0)) / 2.0);
  EXPECT_THROW(lower_bound_bipartite(1), InvalidParameter);
  auto is_bip = [](const Graph& g) { return bipartition(g).has_value(); };
  for (std::size_t n = 2; n <= 9; ++n) {
    double smallest = 1e300;
    for (const Graph& g : enumerate_graphs(n, is_bip)) {
      if (!is_connected(g)) continue;
      const double rho = rho_of(g);
      EXPECT_GE(rho, lower_bound_bipartite(n) - 1e-9) << emit_graph6(g);
      smallest = std::min(smallest, rho);
    }
    // The minimum over connected bipartite graphs is the balanced complete
    // bipartite graph.
    EXPECT_NEAR(smallest, lower_bound_bipartite(n), 1e-9) << "n=" << n;
    EXPECT_NEAR(rho_of(complete_bipartite(n / 2, n - n / 2)), lower_bound_bipartite(n), 1e-9);
  }
}

TEST(QuotientTest, StarPartition) {
  // K_{1,3}: centre row [3, 3]; leaf row [1, 5 + 4].
  const DistanceData d = all_pairs_distances(star(3));
  const PartitionQuotient pq = quotient_matrix(d, {{0}, {1, 2, 3}});
  EXPECT_EQ(pq.matrix, (std::vector<std::int64_t>{3, 3, 1, 9}));
  EXPECT_NEAR(quotient_spectral_radius(pq), 6.0 + std::sqrt(12.0), 1e-9);
  EXPECT_NEAR(quotient_spectral_radius(pq), testing::dense_rho(star(3)), 1e-9);
}

std::vector<std::vector<std::size_t>> family_classes(std::size_t clique, std::size_t n) {
  // join(kn(c), union(kn(n - c - 2), e(2))): clique first, then the inner
  // clique, then the two independent vertices.
  std::vector<std::vector<std::size_t>> classes(3);
  for (std::size_t v = 0; v < clique; ++v) classes[0].push_back(v);
  classes[1] = {n - 2, n - 1};
  for (std::size_t v = clique; v < n - 2; ++v) classes[2].push_back(v);
  return classes;
}

TEST(QuotientTest, ThreeClassFamilies) {
  for (std::size_t order = 7; order <= 14; ++order) {
    const auto n = static_cast<std::int64_t>(order);
    const Graph g6 = parameterized_member(Family::NP1, order).graph;
    const PartitionQuotient a = quotient_matrix(all_pairs_distances(g6), family_classes(3, order));
    EXPECT_EQ(a.matrix, (std::vector<std::int64_t>{n + 1, 2, n - 5, 3, 2 * n - 3, 2 * n - 10, 3, 4,
                                                   2 * n - 5}));
    EXPECT_NEAR(quotient_spectral_radius(a), testing::dense_rho(g6), 1e-8);

    const Graph g8 = parameterized_member(Family::NP2, order).graph;
    const PartitionQuotient b = quotient_matrix(all_pairs_distances(g8), family_classes(2, order));
    EXPECT_EQ(b.matrix, (std::vector<std::int64_t>{n, 2, n - 4, 2, 2 * n - 2, 2 * n - 8, 2, 4,
                                                   2 * n - 4}));
    EXPECT_NEAR(quotient_spectral_radius(b), testing::dense_rho(g8), 1e-8);
  }
}

TEST(QuotientTest, NonEquitablePartitionIsRejected) {
  const DistanceData d = all_pairs_distances(path(4));
  try {
    quotient_matrix(d, {{0, 1}, {2, 3}});
    FAIL();
  } catch (const NonEquitablePartition& e) {
    EXPECT_EQ(e.class_i(), 0u);
    EXPECT_EQ(e.first_witness(), 0u);
    EXPECT_EQ(e.second_witness(), 1u);
  }
  EXPECT_THROW(quotient_matrix(d, {{0, 1}, {1, 2, 3}}), InvalidParameter);
  EXPECT_THROW(quotient_matrix(d, {{0, 1}, {2}}), InvalidParameter);
  EXPECT_NO_THROW(quotient_matrix(d, {{0, 3}, {1, 2}}));
}

TEST(CubicTest, Coefficients) {
  const Cubic f = family_char_cubic(CubicFamily::T6, 7);
  EXPECT_DOUBLE_EQ(f.c2, -28.0);
  EXPECT_DOUBLE_EQ(f.c1, 231.0);
  EXPECT_DOUBLE_EQ(f.c0, -592.0);
  const Cubic g = family_char_cubic(CubicFamily::T8, 6);
  EXPECT_DOUBLE_EQ(g.c2, -24.0);
  EXPECT_DOUBLE_EQ(g.c1, 164.0);
  EXPECT_DOUBLE_EQ(g.c0, -344.0);
  EXPECT_THROW(family_char_cubic(CubicFamily::T6, 6), InvalidParameter);
  EXPECT_THROW(family_char_cubic(CubicFamily::T8, 5), InvalidParameter);
}

TEST(CubicTest, CriticalPoints) {
  for (std::size_t order = 7; order <= 40; ++order) {
    const double n = static_cast<double>(order);
    const Cubic f = family_char_cubic(CubicFamily::T6, order);
    ASSERT_TRUE(f.x1 && f.x2);
    const double rf = std::sqrt(n * n + 23 * n - 119);
    EXPECT_NEAR(*f.x1, (5 * n - 7 - rf) / 3, 1e-9);
    EXPECT_NEAR(*f.x2, (5 * n - 7 + rf) / 3, 1e-9);
    const Cubic g = family_char_cubic(CubicFamily::T8, order);
    const double rg = std::sqrt(n * n + 24 * n - 96);
    EXPECT_NEAR(*g.x1, (5 * n - 6 - rg) / 3, 1e-9);
    EXPECT_NEAR(*g.x2, (5 * n - 6 + rg) / 3, 1e-9);
  }
}

TEST(CubicTest, LargestRoot) {
  EXPECT_NEAR(largest_cubic_root(make_cubic(-3, 0, 0)), 3.0, 1e-12);
  EXPECT_NEAR(largest_cubic_root(make_cubic(-6, 11, -6)), 3.0, 1e-12);
  EXPECT_NEAR(largest_cubic_root(make_cubic(0, 1, -2)), 1.0, 1e-12);  // no critical points
}

TEST(CubicTest, LargestRootIsTheFamilyPerronRoot) {
  for (std::size_t order = 7; order <= 60; ++order) {
    const double r6 = largest_cubic_root(family_char_cubic(CubicFamily::T6, order));
    const double r8 = largest_cubic_root(family_char_cubic(CubicFamily::T8, order));
    EXPECT_NEAR(r6, rho_of(parameterized_member(Family::NP1, order).graph), 1e-8) << order;
    EXPECT_NEAR(r8, rho_of(parameterized_member(Family::NP2, order).graph), 1e-8) << order;
    EXPECT_GT(r6, *family_char_cubic(CubicFamily::T6, order).x2);
  }
  EXPECT_NEAR(largest_cubic_root(family_char_cubic(CubicFamily::T8, 6)),
              rho_of(parameterized_member(Family::NP2, 6).graph), 1e-8);
}

TEST(CubicTest, FamilyRootExceedsThreshold) {
  // Closed forms of f and g at the threshold values are negative, so the
  // largest root lies to the right of the threshold.
  for (std::size_t order = 7; order <= 200; ++order) {
    const double n = static_cast<double>(order);
    const double t6 = (2 * n * n + 6 * n - 36) / n;
    const double t8 = (2 * n * n + 6 * n - 28) / n;
    const Cubic f = family_char_cubic(CubicFamily::T6, order);
    const Cubic g = family_char_cubic(CubicFamily::T8, order);
    const double f_closed =
        -8 * (std::pow(n, 5) - 6 * std::pow(n, 4) - 70 * std::pow(n, 3) + 954 * n * n - 4050 * n + 5832) /
        std::pow(n, 3);
    const double g_closed =
        -8 * (std::pow(n, 5) - 4 * std::pow(n, 4) - 67 * std::pow(n, 3) + 686 * n * n - 2352 * n + 2744) /
        std::pow(n, 3);
    EXPECT_NEAR(static_cast<double>(f(t6)), f_closed, 1e-6 * std::max(1.0, std::abs(f_closed)));
    EXPECT_NEAR(static_cast<double>(g(t8)), g_closed, 1e-6 * std::max(1.0, std::abs(g_closed)));
    EXPECT_LT(f(t6), 0);
    EXPECT_LT(g(t8), 0);
    EXPECT_GT(largest_cubic_root(f), t6);
    EXPECT_GT(largest_cubic_root(g), t8);
  }
}

}  // namespace
}  // namespace qdham
