#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qdham/errors.hpp"
#include "qdham/graph.hpp"

namespace qdham {

inline constexpr std::size_t kIsomorphismLimit = 16;

namespace detail {

inline std::vector<std::uint64_t> masks_of(const Graph& g) {
  std::vector<std::uint64_t> rows(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) rows[v] = g.mask(v);
  return rows;
}

/// Per-vertex invariant: degree, then the number of vertices at each BFS
/// distance (unreachable vertices counted in the last slot).
inline std::vector<std::vector<std::size_t>> vertex_invariants(
    const std::vector<std::uint64_t>& rows) {
  const std::size_t n = rows.size();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::vector<std::vector<std::size_t>> inv(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t>& out = inv[s];
    out.push_back(static_cast<std::size_t>(std::popcount(rows[s])));
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= rows[std::countr_zero(f)];
      next &= ~seen;
      if (!next) break;
      out.push_back(static_cast<std::size_t>(std::popcount(next)));
      seen |= next;
      frontier = next;
    }
    out.push_back(n + static_cast<std::size_t>(std::popcount(all & ~seen)));
  }
  return inv;
}

class IsoSearch {
 public:
  IsoSearch(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
            std::vector<std::vector<std::size_t>> inv_a,
            std::vector<std::vector<std::size_t>> inv_b)
      : a_(std::move(a)), b_(std::move(b)), inv_a_(std::move(inv_a)), inv_b_(std::move(inv_b)) {
    const std::size_t n = a_.size();
    // Match rarest invariant classes first, then prefer vertices adjacent to
    // already-placed ones so adjacency checks prune early.
    std::vector<std::size_t> class_size(n, 0);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t w = 0; w < n; ++w)
        if (inv_a_[u] == inv_a_[w]) ++class_size[u];
    std::vector<bool> placed(n, false);
    std::uint64_t placed_mask = 0;
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t u = 0; u < n; ++u) {
        if (placed[u]) continue;
        if (best == n) {
          best = u;
          continue;
        }
        const bool adj_u = (a_[u] & placed_mask) != 0;
        const bool adj_b = (a_[best] & placed_mask) != 0;
        if (adj_u != adj_b) {
          if (adj_u) best = u;
        } else if (class_size[u] < class_size[best]) {
          best = u;
        }
      }
      placed[best] = true;
      placed_mask |= std::uint64_t{1} << best;
      order_.push_back(best);
    }
    map_.assign(n, n);
  }

  bool run() { return extend(0, 0); }

 private:
  bool extend(std::size_t depth, std::uint64_t used) {
    const std::size_t n = a_.size();
    if (depth == n) return true;
    const std::size_t u = order_[depth];
    for (std::size_t cand = 0; cand < n; ++cand) {
      if ((used >> cand) & 1u) continue;
      if (inv_a_[u] != inv_b_[cand]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const std::size_t w = order_[d];
        const bool ea = (a_[u] >> w) & 1u;
        const bool eb = (b_[cand] >> map_[w]) & 1u;
        ok = ea == eb;
      }
      if (!ok) continue;
      map_[u] = cand;
      if (extend(depth + 1, used | (std::uint64_t{1} << cand))) return true;
    }
    map_[u] = n;
    return false;
  }

  std::vector<std::uint64_t> a_;
  std::vector<std::uint64_t> b_;
  std::vector<std::vector<std::size_t>> inv_a_;
  std::vector<std::vector<std::size_t>> inv_b_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
};

}  // namespace detail

/// Exact isomorphism test by backtracking over invariant-compatible vertex
/// pairs. The invariant is the degree plus the distance profile of a vertex.
inline bool is_isomorphic(const Graph& g1, const Graph& g2, std::size_t limit = kIsomorphismLimit) {
  if (limit > 64) limit = 64;
  const std::size_t n = g1.order();
  if (n > limit) throw SizeLimitError("is_isomorphic", n, limit);
  if (g2.order() > limit) throw SizeLimitError("is_isomorphic", g2.order(), limit);
  if (n != g2.order() || g1.edge_count() != g2.edge_count()) return false;

  auto a = detail::masks_of(g1);
  auto b = detail::masks_of(g2);
  auto inv_a = detail::vertex_invariants(a);
  auto inv_b = detail::vertex_invariants(b);
  auto sa = inv_a;
  auto sb = inv_b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  return detail::IsoSearch(std::move(a), std::move(b), std::move(inv_a), std::move(inv_b)).run();
}

namespace detail {

/// Individualisation-refinement canonical labelling for graphs with at most
/// 64 vertices. Leaves are compared by their relabelled adjacency rows and
/// the smallest wins. Twin vertices in a branching cell are explored once.
class Canonicalizer {
 public:
  explicit Canonicalizer(const Graph& g) : rows_(masks_of(g)), n_(g.order()) {}

  std::vector<std::size_t> run() {
    std::vector<std::vector<std::size_t>> cells(1);
    for (std::size_t v = 0; v < n_; ++v) cells[0].push_back(v);
    refine(cells);
    search(cells);
    return best_labels_;
  }

 private:
  using Partition = std::vector<std::vector<std::size_t>>;

  void refine(Partition& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        std::uint64_t splitter = 0;
        for (std::size_t v : cells[s]) splitter |= std::uint64_t{1} << v;
        Partition next;
        for (const auto& cell : cells) {
          if (cell.size() == 1) {
            next.push_back(cell);
            continue;
          }
          std::vector<std::pair<int, std::size_t>> keyed;
          for (std::size_t v : cell) keyed.emplace_back(std::popcount(rows_[v] & splitter), v);
          std::stable_sort(keyed.begin(), keyed.end(),
                           [](const auto& x, const auto& y) { return x.first < y.first; });
          std::size_t begin = next.size();
          next.emplace_back();
          for (std::size_t i = 0; i < keyed.size(); ++i) {
            if (i > 0 && keyed[i].first != keyed[i - 1].first) next.emplace_back();
            next.back().push_back(keyed[i].second);
          }
          if (next.size() - begin > 1) changed = true;
        }
        if (changed) cells = std::move(next);
      }
    }
  }

  bool twins(std::size_t u, std::size_t v) const {
    const std::uint64_t bu = std::uint64_t{1} << u;
    const std::uint64_t bv = std::uint64_t{1} << v;
    return (rows_[u] & ~bv) == (rows_[v] & ~bu);
  }

  void search(const Partition& cells) {
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) {
      consider_leaf(cells);
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v : cells[target]) {
      bool skip = false;
      for (std::size_t w : tried) {
        if (twins(v, w)) {
          skip = true;
          break;
        }
      }
      if (skip) continue;
      tried.push_back(v);
      Partition child;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<std::size_t> rest;
        for (std::size_t w : cells[i])
          if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      refine(child);
      search(child);
    }
  }

  void consider_leaf(const Partition& cells) {
    std::vector<std::size_t> label(n_);
    for (std::size_t i = 0; i < cells.size(); ++i) label[cells[i][0]] = i;
    std::vector<std::uint64_t> cert(n_, 0);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::uint64_t r = rows_[u]; r; r &= r - 1)
        cert[label[u]] |= std::uint64_t{1} << label[static_cast<std::size_t>(std::countr_zero(r))];
    if (best_labels_.empty() || cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_labels_ = std::move(label);
    }
  }

  std::vector<std::uint64_t> rows_;
  std::size_t n_;
  std::vector<std::uint64_t> best_cert_;
  std::vector<std::size_t> best_labels_;
};

}  // namespace detail

/// Canonical relabelling: isomorphic graphs map to identical graphs.
/// Intended for small corpora generation (n <= 12 or so).
inline Graph canonical_form(const Graph& g) {
  if (g.order() > 64) throw SizeLimitError("canonical_form", g.order(), 64);
  const auto label = detail::Canonicalizer(g).run();
  Graph out(g.order());
  for (std::size_t u = 0; u < g.order(); ++u)
    for (std::size_t v : g.neighbors(u))
      if (u < v) out.add_edge(label[u], label[v]);
  return out;
}

}  // namespace qdham
