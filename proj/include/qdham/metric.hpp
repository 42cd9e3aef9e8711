#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdham/errors.hpp"
#include "qdham/graph.hpp"

namespace qdham {

/// Exact all-pairs hop distances with per-vertex transmissions and the total
/// transmission sigma = (sum of transmissions) / 2.
struct DistanceData {
  std::size_t n = 0;
  std::vector<std::uint32_t> dist;  ///< row-major n x n
  std::vector<std::uint64_t> tr;
  std::uint64_t sigma = 0;

  std::uint32_t at(std::size_t u, std::size_t v) const { return dist[u * n + v]; }
};

/// Q_D = diag(Tr) + D, kept as exact integers.
struct QDMatrix {
  std::size_t n = 0;
  std::vector<std::uint64_t> q;  ///< row-major n x n

  std::uint64_t at(std::size_t i, std::size_t j) const { return q[i * n + j]; }
};

/// One BFS per source. Throws DisconnectedError naming the first unreached
/// pair (lowest source, then lowest target).
inline DistanceData all_pairs_distances(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::uint32_t kUnseen = ~std::uint32_t{0};
  DistanceData d;
  d.n = n;
  d.dist.assign(n * n, kUnseen);
  d.tr.assign(n, 0);

  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  std::vector<std::size_t> queue;
  queue.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::uint32_t* row = d.dist.data() + s * n;
    row[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t w : adj[u]) {
        if (row[w] == kUnseen) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
      }
    }
    if (queue.size() != n) {
      for (std::size_t v = 0; v < n; ++v)
        if (row[v] == kUnseen) throw DisconnectedError(s, v);
    }
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < n; ++v) total += row[v];
    d.tr[s] = total;
  }
  std::uint64_t sum = 0;
  for (std::uint64_t t : d.tr) sum += t;
  d.sigma = sum / 2;
  return d;
}

inline QDMatrix qd_matrix(const DistanceData& d) {
  QDMatrix m;
  m.n = d.n;
  m.q.resize(d.n * d.n);
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = 0; j < d.n; ++j) m.q[i * d.n + j] = i == j ? d.tr[i] : d.at(i, j);
  return m;
}

inline bool is_transmission_regular(const DistanceData& d) {
  for (std::uint64_t t : d.tr)
    if (t != d.tr[0]) return false;
  return true;
}

/// Per-vertex slack Tr(v) - (2(n-1) - deg(v)). Nonnegative; zero exactly when
/// every vertex lies within two hops of v.
inline std::vector<std::int64_t> degree_transmission_bound(const Graph& g, const DistanceData& d) {
  std::vector<std::int64_t> slack(d.n);
  const auto n = static_cast<std::int64_t>(d.n);
  for (std::size_t v = 0; v < d.n; ++v) {
    const auto deg = static_cast<std::int64_t>(g.degree(v));
    slack[v] = static_cast<std::int64_t>(d.tr[v]) - (2 * (n - 1) - deg);
  }
  return slack;
}

}  // namespace qdham
