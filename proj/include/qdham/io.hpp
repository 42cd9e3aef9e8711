#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>

#include "qdham/errors.hpp"
#include "qdham/graph.hpp"

namespace qdham {

namespace detail {

inline constexpr int kGraph6Bias = 63;

inline int graph6_value(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", pos);
  return c - kGraph6Bias;
}

}  // namespace detail

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted; padding bits must be zero.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  std::size_t pos = 0;
  if (text.substr(0, header.size()) == header) pos = header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' ||
                           text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }

  std::uint64_t n = 0;
  if (pos < text.size() && text[pos] == '~') {
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      pos += 2;
      for (int i = 0; i < 6; ++i) n = (n << 6) | detail::graph6_value(text, pos++);
    } else {
      pos += 1;
      for (int i = 0; i < 3; ++i) n = (n << 6) | detail::graph6_value(text, pos++);
    }
  } else {
    n = static_cast<std::uint64_t>(detail::graph6_value(text, pos++));
  }
  if (n == 0) throw ParseError("graph6: order 0 is not supported", pos - 1);

  const std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6: expected " + std::to_string(bytes) +
                         " adjacency bytes, found " + std::to_string(text.size() - pos),
                     text.size() < pos + bytes ? text.size() : pos + bytes);
  }

  Graph g(static_cast<std::size_t>(n));
  std::size_t k = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u, ++k) {
      const int value = detail::graph6_value(text, pos + k / 6);
      if ((value >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  if (k % 6 != 0) {
    const int last = detail::graph6_value(text, pos + k / 6);
    if (last & ((1 << (6 - k % 6)) - 1)) {
      throw ParseError("graph6: nonzero padding bits", pos + k / 6);
    }
  }
  return g;
}

inline std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + detail::kGraph6Bias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + detail::kGraph6Bias));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + detail::kGraph6Bias));
  }

  int acc = 0;
  int filled = 0;
  for (std::size_t v = 1; v < n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + detail::kGraph6Bias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + detail::kGraph6Bias));
  return out;
}

/// Edge-list text: first token the order n, then whitespace-separated
/// 0-indexed `u v` pairs. Duplicate edges are merged.
inline Graph parse_edge_list(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::istringstream tokens(text);
  long long n = 0;
  if (!(tokens >> n) || n < 1) throw ParseError("edge list: missing or invalid order", 0);
  Graph g(static_cast<std::size_t>(n));
  while (true) {
    tokens >> std::ws;
    if (tokens.eof()) break;
    const auto offset = static_cast<std::size_t>(tokens.tellg());
    long long u = 0;
    long long v = 0;
    if (!(tokens >> u)) throw ParseError("edge list: non-integer token", offset);
    if (!(tokens >> v)) throw ParseError("edge list: dangling or non-integer endpoint", offset);
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
      throw ParseError("edge list: invalid edge " + std::to_string(u) + " " + std::to_string(v),
                       offset);
    }
    g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  return g;
}

}  // namespace qdham
