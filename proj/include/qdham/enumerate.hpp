#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qdham/errors.hpp"
#include "qdham/graph.hpp"
#include "qdham/io.hpp"
#include "qdham/isomorphism.hpp"

namespace qdham {

/// All graphs on `n` vertices satisfying `keep`, one per isomorphism class,
/// in canonical form and sorted by graph6 string.
///
/// `keep` must be hereditary (closed under deleting a vertex): classes on k
/// vertices are grown from the kept classes on k-1 vertices by adding a new
/// vertex with every possible neighbourhood.
template <typename Predicate>
std::vector<Graph> enumerate_graphs(std::size_t n, Predicate keep) {
  if (n == 0) throw InvalidParameter("enumerate: order must be at least 1");
  if (n > 12) throw SizeLimitError("enumerate_graphs", n, 12);

  std::vector<Graph> level;
  if (keep(Graph(1))) level.push_back(Graph(1));
  for (std::size_t k = 2; k <= n; ++k) {
    std::map<std::string, Graph> seen;
    for (const Graph& parent : level) {
      const std::uint64_t subsets = std::uint64_t{1} << (k - 1);
      for (std::uint64_t s = 0; s < subsets; ++s) {
        Graph child = add_isolated(parent);
        for (std::uint64_t bits = s; bits; bits &= bits - 1)
          child.add_edge(static_cast<std::size_t>(std::countr_zero(bits)), k - 1);
        if (!keep(child)) continue;
        Graph canon = canonical_form(child);
        std::string key = emit_graph6(canon);
        seen.try_emplace(std::move(key), std::move(canon));
      }
    }
    level.clear();
    for (auto& [key, g] : seen) level.push_back(std::move(g));
  }
  return level;
}

inline std::vector<Graph> enumerate_graphs(std::size_t n) {
  return enumerate_graphs(n, [](const Graph&) { return true; });
}

}  // namespace qdham
