#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdham/errors.hpp"

namespace qdham {

/// Undirected simple graph on vertices 0..n-1, stored as n adjacency bit rows.
///
/// Rows are packed into 64-bit words; the exact-search code paths (oracles,
/// isomorphism) only accept orders that fit in a single word and read rows
/// through `mask()`.
class Graph {
 public:
  explicit Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {
    if (n == 0) throw InvalidParameter("graph order must be at least 1");
  }

  std::size_t order() const { return n_; }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (std::uint64_t w : bits_) twice += static_cast<std::size_t>(std::popcount(w));
    return twice / 2;
  }

  bool has_edge(std::size_t u, std::size_t v) const {
    return (bits_[u * words_ + v / 64] >> (v % 64)) & 1u;
  }

  void add_edge(std::size_t u, std::size_t v) {
    check_pair(u, v);
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
    bits_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
  }

  void remove_edge(std::size_t u, std::size_t v) {
    check_pair(u, v);
    bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  }

  std::size_t degree(std::size_t v) const {
    std::size_t d = 0;
    for (std::uint64_t w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  std::span<const std::uint64_t> row(std::size_t v) const {
    return {bits_.data() + v * words_, words_};
  }

  /// Adjacency row as a single word. Only valid when order() <= 64.
  std::uint64_t mask(std::size_t v) const { return bits_[v * words_]; }

  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = bits_[v * words_ + w];
      while (bits) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(std::size_t u, std::size_t v) const {
    if (u >= n_ || v >= n_) {
      throw InvalidParameter("vertex out of range: (" + std::to_string(u) + ", " +
                             std::to_string(v) + ") in graph of order " +
                             std::to_string(n_));
    }
    if (u == v) throw InvalidParameter("self-loop at vertex " + std::to_string(u));
  }

  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

struct Bipartition {
  std::vector<std::size_t> x;
  std::vector<std::size_t> y;
};

struct GraphStats {
  std::size_t edges = 0;
  std::size_t min_degree = 0;
  bool connected = false;
  std::optional<Bipartition> bipartition;
};

inline std::size_t min_degree(const Graph& g) {
  std::size_t d = g.degree(0);
  for (std::size_t v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

inline bool is_connected(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

/// 2-colouring by BFS, one component at a time; the lowest vertex of each
/// component goes to X. Empty when an odd cycle exists.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      for (std::size_t w : g.neighbors(u)) {
        if (colour[w] < 0) {
          colour[w] = 1 - colour[u];
          queue.push_back(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (std::size_t v = 0; v < n; ++v) (colour[v] == 0 ? parts.x : parts.y).push_back(v);
  return parts;
}

inline GraphStats basic_stats(const Graph& g) {
  return GraphStats{g.edge_count(), min_degree(g), is_connected(g), bipartition(g)};
}

// ---------------------------------------------------------------------------
// Constructors. Vertex labels are positional: composite constructors list the
// first operand's vertices first, then the second operand's, each keeping its
// internal order.

inline Graph complete(std::size_t n) {
  if (n == 0) throw InvalidParameter("kn: order must be at least 1");
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

/// nK_1.
inline Graph empty(std::size_t n) {
  if (n == 0) throw InvalidParameter("e: order must be at least 1");
  return Graph(n);
}

inline Graph path(std::size_t n) {
  if (n == 0) throw InvalidParameter("path: order must be at least 1");
  Graph g(n);
  for (std::size_t v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidParameter("cycle: order must be at least 3");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

/// K_{a,b}: vertices 0..a-1 form one side, a..a+b-1 the other.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw InvalidParameter("bip: both sides must be nonempty");
  Graph g(a + b);
  for (std::size_t u = 0; u < a; ++u)
    for (std::size_t v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

/// K_{1,k}, centre is vertex 0.
inline Graph star(std::size_t k) {
  if (k == 0) throw InvalidParameter("star: leaf count must be at least 1");
  return complete_bipartite(1, k);
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const std::size_t n1 = g1.order();
  Graph g(n1 + g2.order());
  for (std::size_t u = 0; u < n1; ++u)
    for (std::size_t v : g1.neighbors(u))
      if (u < v) g.add_edge(u, v);
  for (std::size_t u = 0; u < g2.order(); ++u)
    for (std::size_t v : g2.neighbors(u))
      if (u < v) g.add_edge(n1 + u, n1 + v);
  return g;
}

inline Graph join(const Graph& g1, const Graph& g2) {
  Graph g = disjoint_union(g1, g2);
  for (std::size_t u = 0; u < g1.order(); ++u)
    for (std::size_t v = 0; v < g2.order(); ++v) g.add_edge(u, g1.order() + v);
  return g;
}

/// kG.
inline Graph repeat(std::size_t k, const Graph& g) {
  if (k == 0) throw InvalidParameter("rep: count must be at least 1");
  Graph out = g;
  for (std::size_t i = 1; i < k; ++i) out = disjoint_union(out, g);
  return out;
}

inline Graph complement(const Graph& g) {
  Graph c(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

/// G + e: a new last vertex joined to vertex 0 only.
inline Graph add_pendant(const Graph& g) {
  Graph out = disjoint_union(g, Graph(1));
  out.add_edge(0, g.order());
  return out;
}

/// G + v: a new isolated last vertex.
inline Graph add_isolated(const Graph& g) { return disjoint_union(g, Graph(1)); }

}  // namespace qdham
