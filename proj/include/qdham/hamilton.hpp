#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qdham/errors.hpp"
#include "qdham/graph.hpp"

namespace qdham {

/// Largest order accepted by the single-query oracles.
inline constexpr std::size_t kHamiltonLimit = 24;
/// Largest order accepted by the all-pairs / all-sources oracles.
inline constexpr std::size_t kHamiltonAllPairsLimit = 16;

/// Answer of an exact Hamiltonicity query.
///
/// When `holds` is true, `witness` is the Hamilton cycle or path found (a
/// cycle is listed without repeating its first vertex). When false, it may
/// name the failing pair (Hamilton-connectivity) or failing start vertex
/// (traceability from every vertex); otherwise it is empty.
struct OracleAnswer {
  bool holds = false;
  std::vector<std::size_t> witness;
};

namespace detail {

/// Subset table for Hamilton paths. `ends[S]` holds, as a bit set, every v
/// such that some path visiting exactly S starts in `sources` and ends at v.
///
/// Seeding every vertex of `sources` is the universal-vertex reduction with
/// the apex left implicit: paths of G + apex starting at the apex are paths
/// of G starting in the apex's neighbourhood.
class PathTable {
 public:
  PathTable(const std::vector<std::uint32_t>& rows, std::uint32_t sources)
      : rows_(rows), n_(rows.size()), ends_(std::size_t{1} << n_, 0) {
    for (std::uint32_t s = sources; s; s &= s - 1) {
      const std::uint32_t bit = s & (~s + 1);
      ends_[bit] = bit;
    }
    const std::size_t full = ends_.size();
    for (std::size_t mask = 1; mask < full; ++mask) {
      const std::uint32_t at = ends_[mask];
      if (!at) continue;
      for (std::uint32_t e = at; e; e &= e - 1) {
        const auto v = static_cast<std::size_t>(std::countr_zero(e));
        for (std::uint32_t w = rows_[v] & ~static_cast<std::uint32_t>(mask); w; w &= w - 1) {
          const std::uint32_t bit = w & (~w + 1);
          ends_[mask | bit] |= bit;
        }
      }
    }
  }

  std::uint32_t full_ends() const { return ends_.back(); }

  /// Vertex sequence from a source to `end`, covering all vertices.
  std::vector<std::size_t> trace(std::size_t end) const {
    std::vector<std::size_t> seq;
    std::size_t mask = ends_.size() - 1;
    std::size_t v = end;
    while (true) {
      seq.push_back(v);
      const std::size_t prev = mask & ~(std::size_t{1} << v);
      if (prev == 0) break;
      const std::uint32_t options = ends_[prev] & rows_[v];
      if (!options) throw std::logic_error("hamilton: inconsistent path table");
      v = static_cast<std::size_t>(std::countr_zero(options));
      mask = prev;
    }
    return {seq.rbegin(), seq.rend()};
  }

 private:
  const std::vector<std::uint32_t>& rows_;
  std::size_t n_;
  std::vector<std::uint32_t> ends_;
};

inline std::vector<std::uint32_t> rows32(const Graph& g, std::size_t limit, const char* op) {
  if (g.order() > limit) throw SizeLimitError(op, g.order(), limit);
  std::vector<std::uint32_t> rows(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) rows[v] = static_cast<std::uint32_t>(g.mask(v));
  return rows;
}

inline std::uint32_t all_vertices(std::size_t n) {
  return n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
}

/// Throws if `seq` is not a Hamilton path (or cycle when `closed`) of g.
inline void validate_witness(const Graph& g, const std::vector<std::size_t>& seq, bool closed) {
  const std::size_t n = g.order();
  bool ok = seq.size() == n;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; ok && i < seq.size(); ++i) {
    ok = seq[i] < n && !seen[seq[i]];
    if (ok) seen[seq[i]] = true;
    if (ok && i > 0) ok = g.has_edge(seq[i - 1], seq[i]);
  }
  if (ok && closed && n > 1) ok = g.has_edge(seq.back(), seq.front());
  if (!ok) throw std::logic_error("hamilton: witness failed validation");
}

/// Cheap necessary conditions for a Hamilton path ending at `end` (or at any
/// vertex when `end` is n) and starting in `sources`.
inline bool path_possible(const std::vector<std::uint32_t>& rows, std::uint32_t sources,
                          std::size_t end) {
  const std::size_t n = rows.size();
  if (n == 1) return true;
  std::size_t leaves = 0;
  std::vector<std::size_t> leaf_parent_count(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const int deg = std::popcount(rows[v]);
    if (deg == 0) return false;
    if (deg == 1) {
      ++leaves;
      if (n >= 4 && ++leaf_parent_count[std::countr_zero(rows[v])] >= 2) return false;
      // A degree-1 vertex must be an endpoint.
      const bool may_start = (sources >> v) & 1u;
      const bool may_end = end == n || end == v;
      if (!may_start && !may_end) return false;
    }
  }
  return leaves <= 2;
}

}  // namespace detail

/// Hamilton cycle by subset DP anchored at vertex 0. Graphs with fewer than
/// three vertices have no Hamilton cycle.
inline OracleAnswer has_hamilton_cycle(const Graph& g) {
  const auto rows = detail::rows32(g, kHamiltonLimit, "has_hamilton_cycle");
  const std::size_t n = rows.size();
  if (n < 3) return {};
  for (std::uint32_t r : rows)
    if (std::popcount(r) < 2) return {};
  detail::PathTable table(rows, 1u);
  const std::uint32_t closing = table.full_ends() & rows[0];
  if (!closing) return {};
  OracleAnswer ans{true, table.trace(static_cast<std::size_t>(std::countr_zero(closing)))};
  detail::validate_witness(g, ans.witness, true);
  return ans;
}

/// Hamilton path with free endpoints.
inline OracleAnswer has_hamilton_path(const Graph& g) {
  const auto rows = detail::rows32(g, kHamiltonLimit, "has_hamilton_path");
  const std::size_t n = rows.size();
  const std::uint32_t all = detail::all_vertices(n);
  if (!detail::path_possible(rows, all, n)) return {};
  detail::PathTable table(rows, all);
  const std::uint32_t ends = table.full_ends();
  if (!ends) return {};
  OracleAnswer ans{true, table.trace(static_cast<std::size_t>(std::countr_zero(ends)))};
  detail::validate_witness(g, ans.witness, false);
  return ans;
}

/// Hamilton path from u to v.
inline OracleAnswer has_hamilton_path_between(const Graph& g, std::size_t u, std::size_t v) {
  const auto rows = detail::rows32(g, kHamiltonLimit, "has_hamilton_path_between");
  const std::size_t n = rows.size();
  if (u >= n || v >= n) throw InvalidParameter("has_hamilton_path_between: vertex out of range");
  if (u == v) throw InvalidParameter("has_hamilton_path_between: endpoints must differ");
  if (!detail::path_possible(rows, std::uint32_t{1} << u, v)) return {};
  detail::PathTable table(rows, std::uint32_t{1} << u);
  if (!((table.full_ends() >> v) & 1u)) return {};
  OracleAnswer ans{true, table.trace(v)};
  detail::validate_witness(g, ans.witness, false);
  return ans;
}

/// Every pair joined by a Hamilton path. One table per source gives all
/// targets at once. On failure the witness is the lowest failing pair (u, v).
/// K_1 holds vacuously.
inline OracleAnswer is_hamilton_connected(const Graph& g) {
  const auto rows = detail::rows32(g, kHamiltonAllPairsLimit, "is_hamilton_connected");
  const std::size_t n = rows.size();
  for (std::size_t u = 0; u + 1 < n; ++u) {
    const std::uint32_t source = std::uint32_t{1} << u;
    std::uint32_t reached = 0;
    if (detail::path_possible(rows, source, n)) {
      reached = detail::PathTable(rows, source).full_ends();
    }
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!((reached >> v) & 1u)) return {false, {u, v}};
    }
  }
  return {true, {}};
}

/// For every vertex x some Hamilton path starts at x. On failure the witness
/// is the lowest failing start vertex.
inline OracleAnswer is_traceable_from_every_vertex(const Graph& g) {
  const auto rows = detail::rows32(g, kHamiltonAllPairsLimit, "is_traceable_from_every_vertex");
  const std::size_t n = rows.size();
  for (std::size_t x = 0; x < n; ++x) {
    const std::uint32_t source = std::uint32_t{1} << x;
    if (!detail::path_possible(rows, source, n) ||
        (n > 1 && !detail::PathTable(rows, source).full_ends())) {
      return {false, {x}};
    }
  }
  return {true, {}};
}

}  // namespace qdham
