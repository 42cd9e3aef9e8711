#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qdham/families.hpp"
#include "qdham/graph.hpp"
#include "qdham/isomorphism.hpp"
#include "qdham/metric.hpp"
#include "qdham/spectral.hpp"

namespace qdham {

/// Distance from the threshold within which rho counts as equal to it.
inline constexpr double kThresholdTolerance = 1e-9;

enum class Outcome { ConditionMet, ExceptionGraph, ConditionNotMet, Inapplicable };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::ConditionMet:
      return "ConditionMet";
    case Outcome::ExceptionGraph:
      return "ExceptionGraph";
    case Outcome::ConditionNotMet:
      return "ConditionNotMet";
    case Outcome::Inapplicable:
      return "Inapplicable";
  }
  return "";
}

struct Evidence {
  std::optional<double> rho;
  std::optional<double> threshold;
  std::optional<std::size_t> t;
  std::size_t n = 0;  ///< graph order
  std::size_t m = 0;
  std::size_t delta = 0;
  bool boundary = false;  ///< |rho - threshold| <= kThresholdTolerance
};

struct Verdict {
  int theorem = 0;
  Outcome outcome = Outcome::Inapplicable;
  std::string conclusion;  ///< property established, empty if none
  std::string exception;   ///< matched exception graph, empty if none
  std::string reason;      ///< why the checker is inapplicable
  Evidence evidence;

  /// threshold - rho; negative when the spectral condition fails.
  std::optional<double> margin() const {
    if (!evidence.rho || !evidence.threshold) return std::nullopt;
    return *evidence.threshold - *evidence.rho;
  }
};

/// Quantities shared by all checkers; rho and distances are present only for
/// connected graphs.
struct GraphAnalysis {
  Graph graph;
  GraphStats stats;
  std::optional<DistanceData> distances;
  std::optional<SpectralEstimate> spectrum;
};

inline GraphAnalysis analyze(const Graph& g, const PowerOptions& opts = {}) {
  GraphAnalysis a{g, basic_stats(g), std::nullopt, std::nullopt};
  if (a.stats.connected) {
    a.distances = all_pairs_distances(g);
    a.spectrum = spectral_radius(qd_matrix(*a.distances), opts);
  }
  return a;
}

namespace detail {

inline Evidence base_evidence(const GraphAnalysis& a) {
  Evidence e;
  e.n = a.graph.order();
  e.m = a.stats.edges;
  e.delta = a.stats.min_degree;
  if (a.spectrum) e.rho = a.spectrum->rho;
  return e;
}

inline Verdict inapplicable(int theorem, Evidence e, std::string reason) {
  Verdict v;
  v.theorem = theorem;
  v.outcome = Outcome::Inapplicable;
  v.reason = std::move(reason);
  v.evidence = std::move(e);
  return v;
}

inline std::int64_t choose2(std::int64_t k) { return k < 2 ? 0 : k * (k - 1) / 2; }

/// Balanced bipartition half-order, or nothing.
inline std::optional<std::size_t> balanced_half(const GraphStats& s) {
  if (!s.bipartition || s.bipartition->x.size() != s.bipartition->y.size()) return std::nullopt;
  return s.bipartition->x.size();
}

/// Candidates are pre-filtered by edge count; only a surviving candidate
/// above the isomorphism limit raises SizeLimitError.
inline bool matches(const Graph& g, const Graph& candidate) {
  if (g.order() != candidate.order() || g.edge_count() != candidate.edge_count()) return false;
  return is_isomorphic(g, candidate);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exception-graph detection.

enum class ExceptionKind { H, NP1, NP2, KPendant, KIsolated };

/// Identifier of the exception graph g is isomorphic to, if any.
inline std::optional<std::string> detect_exception(const Graph& g, ExceptionKind which) {
  const std::size_t n = g.order();
  switch (which) {
    case ExceptionKind::H: {
      if (n % 2 != 0) return std::nullopt;
      const std::size_t half = n / 2;
      for (std::size_t t = 1; 2 * t <= half; ++t) {
        if (detail::matches(g, build_h(t, half))) {
          return "H_{" + std::to_string(t) + "," + std::to_string(half - t) + "}";
        }
      }
      return std::nullopt;
    }
    case ExceptionKind::NP1:
    case ExceptionKind::NP2: {
      const Family f = which == ExceptionKind::NP1 ? Family::NP1 : Family::NP2;
      for (const auto& member : build_family(f, n))
        if (detail::matches(g, member.graph)) return member.id;
      return std::nullopt;
    }
    case ExceptionKind::KPendant:
      if (n < 3) return std::nullopt;
      if (detail::matches(g, add_pendant(complete(n - 1)))) return std::string("K_{n-1}+e");
      return std::nullopt;
    case ExceptionKind::KIsolated:
      if (n < 2) return std::nullopt;
      if (detail::matches(g, add_isolated(complete(n - 1)))) return std::string("K_{n-1}+v");
      return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Edge-count lemma conditions.

enum class EdgeLemma { L1, L5, L7, L9 };

struct EdgeCondition {
  bool applicable = false;
  bool holds = false;
  std::int64_t slack = 0;  ///< m - bound
  std::optional<std::size_t> t;
  std::string reason;
};

/// L1: balanced bipartite G[X,Y] with |X| = |Y| = n, delta >= t, n >= 2t:
///     m >= n^2 - tn + t^2 (all valid t tried, largest slack reported).
/// L5: connected, n >= 5, delta >= 3: m >= C(n-2, 2) + 6.
/// L7: connected, n >= 4, delta >= 2: m >= C(n-2, 2) + 4.
/// L9: n >= 2: m >= C(n-1, 2).
inline EdgeCondition edge_condition(const Graph& g, EdgeLemma which) {
  const GraphStats s = basic_stats(g);
  const auto n = static_cast<std::int64_t>(g.order());
  const auto m = static_cast<std::int64_t>(s.edges);
  const auto delta = static_cast<std::int64_t>(s.min_degree);
  EdgeCondition out;
  auto finish = [&](std::int64_t bound) {
    out.applicable = true;
    out.slack = m - bound;
    out.holds = out.slack >= 0;
    return out;
  };
  switch (which) {
    case EdgeLemma::L1: {
      const auto half = detail::balanced_half(s);
      if (!half) {
        out.reason = "not balanced bipartite";
        return out;
      }
      const auto h = static_cast<std::int64_t>(*half);
      bool any = false;
      for (std::int64_t t = 1; t <= delta && 2 * t <= h; ++t) {
        const std::int64_t slack = m - (h * h - t * h + t * t);
        if (!any || slack > out.slack) {
          out.slack = slack;
          out.t = static_cast<std::size_t>(t);
        }
        any = true;
      }
      if (!any) {
        out.reason = "no valid t";
        return out;
      }
      out.applicable = true;
      out.holds = out.slack >= 0;
      return out;
    }
    case EdgeLemma::L5:
      if (!s.connected || n < 5 || delta < 3) {
        out.reason = "requires connected, n >= 5, delta >= 3";
        return out;
      }
      return finish(detail::choose2(n - 2) + 6);
    case EdgeLemma::L7:
      if (!s.connected || n < 4 || delta < 2) {
        out.reason = "requires connected, n >= 4, delta >= 2";
        return out;
      }
      return finish(detail::choose2(n - 2) + 4);
    case EdgeLemma::L9:
      if (n < 2) {
        out.reason = "requires n >= 2";
        return out;
      }
      return finish(detail::choose2(n - 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Spectral sufficient conditions.

/// Theorem 3 threshold m - n^2 + (t+6)n - (t^2+4) with n the half-order.
inline double theorem3_threshold(std::size_t m, std::size_t half, std::size_t t) {
  const auto mm = static_cast<double>(m);
  const auto h = static_cast<double>(half);
  const auto tt = static_cast<double>(t);
  return mm - h * h + (tt + 6) * h - (tt * tt + 4);
}

inline double theorem6_threshold(std::size_t order) {
  const auto n = static_cast<double>(order);
  return (2 * n * n + 6 * n - 36) / n;
}

inline double theorem8_threshold(std::size_t order) {
  const auto n = static_cast<double>(order);
  return (2 * n * n + 6 * n - 28) / n;
}

inline double theorem10_threshold(std::size_t order, std::size_t edges) {
  const auto n = static_cast<double>(order);
  const auto m = static_cast<double>(edges);
  return (3 * n * n - n + 10 * m - 2) / (2 * n);
}

/// Balanced bipartite G with delta >= t, n >= 2t (n = |X| = |Y|): if
/// rho_D <= m - n^2 + (t+6)n - (t^2+4) then G is Hamiltonian unless it is
/// H_{t,n-t}. Every valid t is tried; evidence reports the t with the best
/// margin, so the condition holds for some t exactly when it holds there.
inline Verdict check_theorem3(const GraphAnalysis& a) {
  Evidence e = detail::base_evidence(a);
  if (!a.stats.connected) return detail::inapplicable(3, e, "disconnected");
  const auto half = detail::balanced_half(a.stats);
  if (!half) return detail::inapplicable(3, e, "not balanced bipartite");
  const double rho = a.spectrum->rho;

  std::optional<std::size_t> best_t;
  double best = 0.0;
  for (std::size_t t = 1; t <= a.stats.min_degree && 2 * t <= *half; ++t) {
    const double thr = theorem3_threshold(a.stats.edges, *half, t);
    if (!best_t || thr > best) {
      best = thr;
      best_t = t;
    }
  }
  if (!best_t) return detail::inapplicable(3, e, "no valid t");

  e.t = best_t;
  e.threshold = best;
  e.boundary = std::abs(rho - best) <= kThresholdTolerance;

  Verdict v;
  v.theorem = 3;
  v.evidence = e;
  if (rho > best + kThresholdTolerance) {
    v.outcome = Outcome::ConditionNotMet;
    return v;
  }
  // The exception clause is checked against H_{t,n-t} for every t that meets
  // the condition.
  for (std::size_t tt = 1; tt <= a.stats.min_degree && 2 * tt <= *half; ++tt) {
    if (rho > theorem3_threshold(a.stats.edges, *half, tt) + kThresholdTolerance) continue;
    if (detail::matches(a.graph, build_h(tt, *half))) {
      v.outcome = Outcome::ExceptionGraph;
      v.exception = "H_{" + std::to_string(tt) + "," + std::to_string(*half - tt) + "}";
      v.evidence.t = tt;
      v.evidence.threshold = theorem3_threshold(a.stats.edges, *half, tt);
      v.evidence.boundary = std::abs(rho - *v.evidence.threshold) <= kThresholdTolerance;
      return v;
    }
  }
  v.outcome = Outcome::ConditionMet;
  v.conclusion = "Hamiltonian";
  return v;
}

namespace detail {

inline Verdict threshold_check(const GraphAnalysis& a, int theorem, std::size_t min_order,
                               std::size_t min_delta, double threshold, const char* conclusion) {
  Evidence e = base_evidence(a);
  if (!a.stats.connected) return inapplicable(theorem, e, "disconnected");
  if (a.graph.order() < min_order) {
    return inapplicable(theorem, e, "order below " + std::to_string(min_order));
  }
  if (a.stats.min_degree < min_delta) {
    return inapplicable(theorem, e, "minimum degree below " + std::to_string(min_delta));
  }
  e.threshold = threshold;
  e.boundary = std::abs(*e.rho - threshold) <= kThresholdTolerance;
  Verdict v;
  v.theorem = theorem;
  v.evidence = e;
  if (*e.rho <= threshold + kThresholdTolerance) {
    v.outcome = Outcome::ConditionMet;
    v.conclusion = conclusion;
  } else {
    v.outcome = Outcome::ConditionNotMet;
  }
  return v;
}

}  // namespace detail

/// Connected, n >= 5, delta >= 3, rho_D <= (2n^2+6n-36)/n => Hamilton-connected.
inline Verdict check_theorem6(const GraphAnalysis& a) {
  return detail::threshold_check(a, 6, 5, 3, theorem6_threshold(a.graph.order()),
                                 "Hamilton-connected");
}

/// Connected, n >= 4, delta >= 2, rho_D <= (2n^2+6n-28)/n => traceable from
/// every vertex.
inline Verdict check_theorem8(const GraphAnalysis& a) {
  return detail::threshold_check(a, 8, 4, 2, theorem8_threshold(a.graph.order()),
                                 "traceable-from-every-vertex");
}

/// rho_D(G^C) <= (3n^2-n+10m-2)/(2n) => traceable unless G = K_{n-1}+v;
/// strict inequality => Hamiltonian unless G = K_{n-1}+e. Evidence rho is
/// that of the complement.
inline Verdict check_theorem10(const GraphAnalysis& a, const PowerOptions& opts = {}) {
  Evidence e = detail::base_evidence(a);
  e.rho.reset();
  const std::size_t n = a.graph.order();
  if (n < 2) return detail::inapplicable(10, e, "order below 2");
  const Graph comp = complement(a.graph);
  if (!is_connected(comp)) return detail::inapplicable(10, e, "complement-disconnected");

  const double rho = spectral_radius(qd_matrix(all_pairs_distances(comp)), opts).rho;
  const double thr = theorem10_threshold(n, a.stats.edges);
  e.rho = rho;
  e.threshold = thr;
  e.boundary = std::abs(rho - thr) <= kThresholdTolerance;

  Verdict v;
  v.theorem = 10;
  v.evidence = e;
  if (rho > thr + kThresholdTolerance) {
    v.outcome = Outcome::ConditionNotMet;
    return v;
  }
  const bool strict = rho < thr - kThresholdTolerance;
  if (auto id = detect_exception(a.graph, ExceptionKind::KIsolated)) {
    v.outcome = Outcome::ExceptionGraph;
    v.exception = *id;
    return v;
  }
  if (strict) {
    if (auto id = detect_exception(a.graph, ExceptionKind::KPendant)) {
      v.outcome = Outcome::ExceptionGraph;
      v.exception = *id;
      v.conclusion = "traceable";
      return v;
    }
    v.outcome = Outcome::ConditionMet;
    v.conclusion = "Hamiltonian";
    return v;
  }
  v.outcome = Outcome::ConditionMet;
  v.conclusion = "traceable";
  return v;
}

inline Verdict check_theorem(int theorem, const GraphAnalysis& a, const PowerOptions& opts = {}) {
  switch (theorem) {
    case 3:
      return check_theorem3(a);
    case 6:
      return check_theorem6(a);
    case 8:
      return check_theorem8(a);
    case 10:
      return check_theorem10(a, opts);
    default:
      throw InvalidParameter("unknown theorem " + std::to_string(theorem) +
                             " (expected 3, 6, 8 or 10)");
  }
}

inline Verdict check_theorem(int theorem, const Graph& g, const PowerOptions& opts = {}) {
  return check_theorem(theorem, analyze(g, opts), opts);
}

}  // namespace qdham
