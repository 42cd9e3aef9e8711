#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "qdham/hamilton.hpp"
#include "qdham/io.hpp"
#include "qdham/report.hpp"
#include "qdham/theorems.hpp"

namespace qdham {

struct TheoremCounts {
  std::size_t met = 0;
  std::size_t exception = 0;
  std::size_t not_met = 0;
  std::size_t inapplicable = 0;

  std::size_t total() const { return met + exception + not_met + inapplicable; }
};

struct Counterexample {
  std::size_t line = 0;
  std::string graph6;
  int theorem = 0;
  std::string detail;
  Json verdict;
};

struct AuditOptions {
  std::vector<int> theorems{3, 6, 8, 10};
  std::size_t max_order = kHamiltonAllPairsLimit;
  std::size_t jobs = 0;  ///< 0 = hardware concurrency
  PowerOptions power;
};

struct AuditSummary {
  std::size_t scanned = 0;
  std::size_t skipped = 0;
  std::map<std::string, std::size_t> skip_reasons;
  std::map<int, TheoremCounts> counts;
  std::vector<Counterexample> counterexamples;
  bool partial = false;
  double wall_seconds = 0.0;
};

/// Checks a verdict's conclusion against the exact oracle; returns a
/// description of the disagreement, or nothing when the claim holds.
inline std::optional<std::string> contradicts_oracle(const Verdict& v, const Graph& g) {
  if (v.conclusion.empty()) return std::nullopt;
  if (v.conclusion == "Hamiltonian") {
    if (!has_hamilton_cycle(g).holds) return "claimed Hamiltonian, no Hamilton cycle exists";
    return std::nullopt;
  }
  if (v.conclusion == "Hamilton-connected") {
    const auto a = is_hamilton_connected(g);
    if (!a.holds) {
      return "claimed Hamilton-connected, no Hamilton path between " +
             std::to_string(a.witness[0]) + " and " + std::to_string(a.witness[1]);
    }
    return std::nullopt;
  }
  if (v.conclusion == "traceable-from-every-vertex") {
    const auto a = is_traceable_from_every_vertex(g);
    if (!a.holds) {
      return "claimed traceable from every vertex, no Hamilton path starts at " +
             std::to_string(a.witness[0]);
    }
    return std::nullopt;
  }
  if (v.conclusion == "traceable") {
    if (!has_hamilton_path(g).holds) return "claimed traceable, no Hamilton path exists";
    return std::nullopt;
  }
  return "unknown conclusion " + v.conclusion;
}

namespace detail {

struct AuditItem {
  std::size_t line = 0;
  std::string text;
  std::optional<std::string> skip;
  std::vector<Verdict> verdicts;
  std::vector<std::optional<std::string>> failures;
};

inline void audit_item(AuditItem& item, const AuditOptions& opts) {
  std::optional<Graph> g;
  try {
    g = parse_graph6(item.text);
  } catch (const ParseError&) {
    item.skip = "parse error";
    return;
  }
  if (g->order() > opts.max_order) {
    item.skip = "order above limit";
    return;
  }
  try {
    const GraphAnalysis a = analyze(*g, opts.power);
    for (int t : opts.theorems) {
      Verdict v = check_theorem(t, a, opts.power);
      item.failures.push_back(contradicts_oracle(v, *g));
      item.verdicts.push_back(std::move(v));
    }
  } catch (const SizeLimitError&) {
    item.verdicts.clear();
    item.failures.clear();
    item.skip = "size limit";
  } catch (const NoConvergence&) {
    item.verdicts.clear();
    item.failures.clear();
    item.skip = "no convergence";
  }
}

}  // namespace detail

/// Streams graph6 lines (blank lines and `#` comments skipped) through the
/// selected checkers and audits every positive conclusion with the oracle.
/// Work is batched across threads; results merge in input order.
inline AuditSummary audit_corpus(std::istream& in, const AuditOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  AuditSummary summary;
  for (int t : opts.theorems) summary.counts[t];

  const std::size_t jobs =
      opts.jobs ? opts.jobs : std::max<std::size_t>(1, std::thread::hardware_concurrency());
  constexpr std::size_t kBatch = 512;

  std::size_t line_no = 0;
  std::string line;
  bool done = false;
  while (!done) {
    std::vector<detail::AuditItem> batch;
    while (batch.size() < kBatch) {
      if (!std::getline(in, line)) {
        done = true;
        break;
      }
      ++line_no;
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      batch.push_back({line_no, line, std::nullopt, {}, {}});
    }
    if (in.bad()) summary.partial = true;

    const std::size_t workers = std::min(jobs, std::max<std::size_t>(1, batch.size()));
    if (workers <= 1) {
      for (auto& item : batch) detail::audit_item(item, opts);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < batch.size(); i += workers) detail::audit_item(batch[i], opts);
        });
      }
      for (auto& th : pool) th.join();
    }

    for (const auto& item : batch) {
      ++summary.scanned;
      if (item.skip) {
        ++summary.skipped;
        ++summary.skip_reasons[*item.skip];
        continue;
      }
      for (std::size_t i = 0; i < item.verdicts.size(); ++i) {
        const Verdict& v = item.verdicts[i];
        TheoremCounts& c = summary.counts[v.theorem];
        switch (v.outcome) {
          case Outcome::ConditionMet:
            ++c.met;
            break;
          case Outcome::ExceptionGraph:
            ++c.exception;
            break;
          case Outcome::ConditionNotMet:
            ++c.not_met;
            break;
          case Outcome::Inapplicable:
            ++c.inapplicable;
            break;
        }
        if (item.failures[i]) {
          summary.counterexamples.push_back(
              {item.line, item.text, v.theorem, *item.failures[i], to_json(v)});
        }
      }
    }
  }
  summary.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

inline Json to_json(const AuditSummary& s) {
  Json j;
  j["graphs_scanned"] = s.scanned;
  j["skipped"] = s.skipped;
  Json reasons = Json::object();
  for (const auto& [k, v] : s.skip_reasons) reasons[k] = v;
  j["skip_reasons"] = reasons;
  Json per = Json::object();
  for (const auto& [t, c] : s.counts) {
    Json cj;
    cj["met"] = c.met;
    cj["exception"] = c.exception;
    cj["not_met"] = c.not_met;
    cj["inapplicable"] = c.inapplicable;
    per[std::to_string(t)] = cj;
  }
  j["theorems"] = per;
  Json ce = Json::array();
  for (const auto& c : s.counterexamples) {
    Json cj;
    cj["line"] = c.line;
    cj["graph6"] = c.graph6;
    cj["theorem"] = c.theorem;
    cj["detail"] = c.detail;
    cj["verdict"] = c.verdict;
    ce.push_back(cj);
  }
  j["counterexample_count"] = s.counterexamples.size();
  j["counterexamples"] = ce;
  j["partial"] = s.partial;
  j["wall_seconds"] = s.wall_seconds;
  return j;
}

}  // namespace qdham
