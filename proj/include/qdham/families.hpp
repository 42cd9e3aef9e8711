#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qdham/errors.hpp"
#include "qdham/graph.hpp"

namespace qdham {

/// H_{t,n-t}: balanced bipartite graph on 2n vertices.
///
/// Layout: X = 0..n-1, Y1 = n..2n-t-1 (complete to X), Y2 = 2n-t..2n-1, where
/// every Y2 vertex is adjacent to X vertices 0..t-1. Edge count is
/// n^2 - tn + t^2 and the minimum degree is t.
inline Graph build_h(std::size_t t, std::size_t n) {
  if (t == 0) throw InvalidParameter("h: t must be at least 1");
  if (n < 2 * t) throw InvalidParameter("h: requires n >= 2t");
  Graph g(2 * n);
  const std::size_t y1 = n;
  const std::size_t y2 = 2 * n - t;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = y1; y < y2; ++y) g.add_edge(x, y);
  for (std::size_t y = y2; y < 2 * n; ++y)
    for (std::size_t x = 0; x < t; ++x) g.add_edge(x, y);
  return g;
}

enum class Family { NP1, NP2 };

inline const char* family_name(Family f) { return f == Family::NP1 ? "NP1" : "NP2"; }

struct FamilyMember {
  std::string id;    ///< human-readable name, e.g. "K_4 v 4K_1"
  std::string expr;  ///< equivalent graph expression
  bool parameterized = false;
  Graph graph;
};

/// Smallest order at which the parameterized member K_c v (K_{n-c-2} + 2K_1)
/// is emitted (7 for NP1, 6 for NP2).
inline std::size_t family_parameterized_min_order(Family f) { return f == Family::NP1 ? 7 : 6; }

/// Size of the clique K_c in the parameterized member (3 for NP1, 2 for NP2).
inline std::size_t family_clique(Family f) { return f == Family::NP1 ? 3 : 2; }

/// The parameterized member K_c v (K_{n-c-2} + 2K_1) at order n. Vertex
/// layout: clique 0..c-1, then K_{n-c-2}, then the two isolated vertices.
inline FamilyMember parameterized_member(Family f, std::size_t order) {
  const std::size_t c = family_clique(f);
  if (order < family_parameterized_min_order(f)) {
    throw InvalidParameter(std::string(family_name(f)) + " parameterized member needs order >= " +
                           std::to_string(family_parameterized_min_order(f)));
  }
  const std::size_t inner = order - c - 2;
  FamilyMember m{
      "K_" + std::to_string(c) + " v (K_{n-" + std::to_string(c + 2) + "} + 2K_1)",
      "join(kn(" + std::to_string(c) + "), union(kn(" + std::to_string(inner) + "), e(2)))",
      true, join(complete(c), disjoint_union(complete(inner), empty(2)))};
  return m;
}

/// All members of the exception family having exactly `order` vertices.
/// The fixed members of NP2 are those of NP1 with one fewer clique vertex.
inline std::vector<FamilyMember> build_family(Family f, std::size_t order) {
  // Fixed members are written for NP1; NP2 lowers the clique/join size by one.
  const std::size_t s = f == Family::NP1 ? 0 : 1;
  auto k = [](std::size_t a) { return std::to_string(a); };

  struct Fixed {
    std::string id;
    std::string expr;
    Graph graph;
  };
  std::vector<Fixed> fixed;
  fixed.push_back({"K_" + k(6 - s) + " v 6K_1", "join(kn(" + k(6 - s) + "), e(6))",
                   join(complete(6 - s), empty(6))});
  fixed.push_back({"K_" + k(4 - s) + " v (K_2 + 3K_1)",
                   "join(kn(" + k(4 - s) + "), union(kn(2), e(3)))",
                   join(complete(4 - s), disjoint_union(complete(2), empty(3)))});
  fixed.push_back({"5K_1 v K_" + k(5 - s), "join(e(5), kn(" + k(5 - s) + "))",
                   join(empty(5), complete(5 - s))});
  fixed.push_back({"K_" + k(4 - s) + " v (K_{1,4} + K_1)",
                   "join(kn(" + k(4 - s) + "), union(star(4), kn(1)))",
                   join(complete(4 - s), disjoint_union(star(4), complete(1)))});
  fixed.push_back({"K_" + k(4 - s) + " v (K_{1,3} + K_2)",
                   "join(kn(" + k(4 - s) + "), union(star(3), kn(2)))",
                   join(complete(4 - s), disjoint_union(star(3), complete(2)))});
  fixed.push_back({"K_" + k(3 - s) + " v K_{2,5}", "join(kn(" + k(3 - s) + "), bip(2, 5))",
                   join(complete(3 - s), complete_bipartite(2, 5))});
  fixed.push_back({"K_" + k(4 - s) + " v 4K_1", "join(kn(" + k(4 - s) + "), e(4))",
                   join(complete(4 - s), empty(4))});
  fixed.push_back({"K_" + k(3 - s) + " v (K_1 + K_{1,3})",
                   "join(kn(" + k(3 - s) + "), union(kn(1), star(3)))",
                   join(complete(3 - s), disjoint_union(complete(1), star(3)))});
  fixed.push_back({"K_" + k(3 - s) + " v (K_{1,2} + K_2)",
                   "join(kn(" + k(3 - s) + "), union(star(2), kn(2)))",
                   join(complete(3 - s), disjoint_union(star(2), complete(2)))});
  fixed.push_back({"K_" + k(2 - s) + " v K_{2,4}", "join(kn(" + k(2 - s) + "), bip(2, 4))",
                   join(complete(2 - s), complete_bipartite(2, 4))});

  std::vector<FamilyMember> out;
  for (auto& m : fixed) {
    if (m.graph.order() == order) out.push_back({m.id, m.expr, false, std::move(m.graph)});
  }
  if (order >= family_parameterized_min_order(f)) out.push_back(parameterized_member(f, order));
  return out;
}

}  // namespace qdham
