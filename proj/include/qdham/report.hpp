#pragma once

#include <cstdio>
#include <string>

#include "json.hpp"
#include "qdham/hamilton.hpp"
#include "qdham/theorems.hpp"

namespace qdham {

using Json = nlohmann::ordered_json;

/// Fixed-point rendering with six decimals; ties resolve to even on the exact
/// binary value (glibc printf semantics).
inline std::string format_fixed(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  std::string s(buf);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

namespace detail {

// Tolerances and residuals are far below 1e-6, so they render in scientific
// notation with six fractional digits instead.
inline bool scientific_key(const std::string& key) {
  return key == "tolerance" || key == "residual";
}

inline std::string format_scientific(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

inline void dump_into(const Json& j, std::string& out, int indent, int depth,
                      bool scientific = false) {
  auto newline = [&](int d) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(it.value(), out, indent, depth + 1, scientific_key(it.key()));
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dump_into(v, out, indent, depth + 1);
      }
      newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += scientific ? format_scientific(j.get<double>()) : format_fixed(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace detail

/// Serializes with fixed field order and six-decimal floats. `indent < 0`
/// gives a single line.
inline std::string dump_json(const Json& j, int indent = -1) {
  std::string out;
  detail::dump_into(j, out, indent, 0);
  return out;
}

inline Json to_json(const Verdict& v) {
  Json j;
  j["theorem"] = v.theorem;
  j["outcome"] = outcome_name(v.outcome);
  if (!v.conclusion.empty()) j["conclusion"] = v.conclusion;
  if (!v.exception.empty()) j["exception"] = v.exception;
  if (!v.reason.empty()) j["reason"] = v.reason;
  j["rho"] = v.evidence.rho ? Json(*v.evidence.rho) : Json(nullptr);
  j["threshold"] = v.evidence.threshold ? Json(*v.evidence.threshold) : Json(nullptr);
  const auto margin = v.margin();
  j["margin"] = margin ? Json(*margin) : Json(nullptr);
  j["n"] = v.evidence.n;
  j["m"] = v.evidence.m;
  j["delta"] = v.evidence.delta;
  if (v.evidence.t) j["t"] = *v.evidence.t;
  j["boundary"] = v.evidence.boundary;
  j["tolerance"] = kThresholdTolerance;
  return j;
}

inline Json to_json(const OracleAnswer& a) {
  Json j;
  j["holds"] = a.holds;
  j["witness"] = a.witness;
  return j;
}

}  // namespace qdham
