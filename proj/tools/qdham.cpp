// Command-line front end: compute, check, oracle, tables, audit, enumerate.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qdham/qdham.hpp"

namespace {

using qdham::Json;

enum ExitCode { kOk = 0, kInternal = 1, kInputError = 2, kAcceptanceFailure = 3, kSizeLimit = 4 };

struct InputSpec {
  std::string expr;
  std::string g6;
  std::string edges;
};

void add_input_options(CLI::App* cmd, InputSpec& in) {
  auto* e = cmd->add_option("--expr", in.expr, "graph expression, e.g. \"join(kn(4), e(4))\"");
  auto* g = cmd->add_option("--g6", in.g6, "graph6 line");
  auto* f = cmd->add_option("--edges", in.edges, "edge-list file (first line n, then u v pairs)");
  e->excludes(g)->excludes(f);
  g->excludes(f);
}

qdham::Graph load_input(const InputSpec& in, Json& id) {
  if (!in.expr.empty()) {
    id = Json{{"kind", "expr"}, {"text", in.expr}};
    return qdham::parse_expr(in.expr);
  }
  if (!in.g6.empty()) {
    id = Json{{"kind", "graph6"}, {"text", in.g6}};
    return qdham::parse_graph6(in.g6);
  }
  if (!in.edges.empty()) {
    id = Json{{"kind", "edges"}, {"path", in.edges}};
    std::ifstream file(in.edges);
    if (!file) throw qdham::ParseError("cannot open edge-list file " + in.edges, 0);
    return qdham::parse_edge_list(file);
  }
  throw qdham::InvalidParameter("one of --expr, --g6, --edges is required");
}

void print(const Json& j, bool pretty) { std::cout << qdham::dump_json(j, pretty ? 2 : -1) << '\n'; }

int fail(const std::string& kind, const std::string& message, int code,
         std::optional<std::size_t> offset = std::nullopt) {
  Json err;
  err["error"] = kind;
  err["message"] = message;
  if (offset) err["offset"] = *offset;
  std::cout << qdham::dump_json(err) << '\n';
  return code;
}

Json oracle_query(const qdham::Graph& g, const std::string& prop, std::size_t u, std::size_t v) {
  Json j;
  j["property"] = prop;
  qdham::OracleAnswer a;
  if (prop == "ham-cycle") {
    a = qdham::has_hamilton_cycle(g);
  } else if (prop == "ham-path") {
    a = qdham::has_hamilton_path(g);
  } else if (prop == "ham-path-between") {
    a = qdham::has_hamilton_path_between(g, u, v);
    j["u"] = u;
    j["v"] = v;
  } else if (prop == "ham-connected") {
    a = qdham::is_hamilton_connected(g);
  } else if (prop == "traceable-all") {
    a = qdham::is_traceable_from_every_vertex(g);
  } else {
    throw qdham::InvalidParameter("unknown property " + prop);
  }
  j["holds"] = a.holds;
  j["witness"] = a.witness;
  return j;
}

Json compute_report(const qdham::Graph& g, const Json& id, const qdham::PowerOptions& power,
                    const std::vector<int>& theorems, const std::vector<std::string>& props) {
  const qdham::GraphAnalysis a = qdham::analyze(g, power);
  if (!a.stats.connected) {
    // Propagates as an input error naming the first unreached pair.
    qdham::all_pairs_distances(g);
  }
  Json r;
  r["input"] = id;
  r["n"] = g.order();
  r["m"] = a.stats.edges;
  r["delta"] = a.stats.min_degree;
  r["connected"] = a.stats.connected;
  r["bipartite"] = a.stats.bipartition.has_value();
  r["sigma"] = a.distances->sigma;
  r["transmission_regular"] = qdham::is_transmission_regular(*a.distances);
  r["rho"] = a.spectrum->rho;
  r["residual"] = a.spectrum->residual;
  r["iterations"] = a.spectrum->iterations;
  r["tolerance"] = power.tolerance;
  Json bounds;
  bounds["sigma"] = qdham::lower_bound_sigma(*a.distances);
  if (a.stats.bipartition && g.order() >= 2) {
    bounds["bipartite"] = qdham::lower_bound_bipartite(g.order());
  }
  r["bounds"] = bounds;
  if (!theorems.empty()) {
    Json vs = Json::array();
    for (int t : theorems) vs.push_back(qdham::to_json(qdham::check_theorem(t, a, power)));
    r["verdicts"] = vs;
  }
  if (!props.empty()) {
    Json os = Json::array();
    for (const auto& p : props) os.push_back(oracle_query(g, p, 0, 0));
    r["oracle"] = os;
  }
  return r;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

void print_tables_pretty(const std::vector<qdham::TableResult>& results) {
  int current = 0;
  for (const auto& r : results) {
    if (r.row.table != current) {
      current = r.row.table;
      std::cout << (current == 1 ? "" : "\n") << "Table " << current << "\n";
      std::cout << pad("graph", 26) << pad("printed", 10) << pad("computed", 12)
                << pad("|delta|", 12) << pad("n", 4) << pad("threshold", 12) << "status\n";
    }
    const std::string thr = std::to_string(r.threshold.num) + "/" + std::to_string(r.threshold.den);
    std::cout << pad(std::string(r.row.graph), 26) << pad(std::string(r.row.printed_rho), 10)
              << pad(qdham::format_fixed(r.rho), 12) << pad(qdham::format_fixed(r.delta), 12)
              << pad(std::to_string(r.order), 4) << pad(thr, 12)
              << (r.rho_ok && r.threshold_ok ? "ok" : "MISMATCH") << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance signless Laplacian spectra and Hamiltonicity conditions"};
  app.require_subcommand(1);

  bool pretty = false;
  double tol = 1e-10;
  InputSpec input;
  std::vector<int> theorems;
  std::vector<std::string> props;
  int theorem = 0;
  std::string prop;
  std::size_t u = 0;
  std::size_t v = 1;
  bool emit_g6 = false;
  std::string corpus;
  std::size_t limit_n = qdham::kHamiltonAllPairsLimit;
  std::size_t jobs = 0;
  std::size_t enum_n = 0;
  bool connected_only = false;
  bool bipartite_only = false;

  const std::vector<std::string> prop_names{"ham-cycle", "ham-path", "ham-path-between",
                                            "ham-connected", "traceable-all"};

  auto* compute = app.add_subcommand("compute", "full spectral report for one graph");
  add_input_options(compute, input);
  compute->add_option("--tol", tol, "power-iteration residual tolerance");
  compute->add_flag("--pretty", pretty, "indented output");
  compute->add_flag("--emit-g6", emit_g6, "print the graph6 encoding instead of the report");
  compute->add_option("-t,--theorem", theorems, "also evaluate these theorems")
      ->check(CLI::IsMember({3, 6, 8, 10}));
  compute->add_option("--prop", props, "also run these oracle queries")
      ->check(CLI::IsMember(prop_names));

  auto* check = app.add_subcommand("check", "evaluate one spectral sufficient condition");
  add_input_options(check, input);
  check->add_option("-t,--theorem", theorem, "theorem number")
      ->required()
      ->check(CLI::IsMember({3, 6, 8, 10}));
  check->add_option("--tol", tol, "power-iteration residual tolerance");
  check->add_flag("--pretty", pretty, "indented output");

  auto* oracle = app.add_subcommand("oracle", "exact Hamiltonicity query");
  add_input_options(oracle, input);
  oracle->add_option("--prop", prop, "property")->required()->check(CLI::IsMember(prop_names));
  oracle->add_option("--u", u, "first endpoint for ham-path-between");
  oracle->add_option("--v", v, "second endpoint for ham-path-between");
  oracle->add_flag("--pretty", pretty, "indented output");

  auto* tables = app.add_subcommand("tables", "recompute the exception-family tables");
  tables->add_option("--tol", tol, "power-iteration residual tolerance");
  tables->add_flag("--pretty", pretty, "aligned text table instead of JSON");

  auto* audit = app.add_subcommand("audit", "audit theorem verdicts against the exact oracles");
  audit->add_option("--corpus", corpus, "graph6 corpus file, '-' for stdin")->required();
  audit->add_option("-t,--theorem", theorems, "theorems to audit (default all)")
      ->check(CLI::IsMember({3, 6, 8, 10}));
  audit->add_option("--limit-n", limit_n, "skip graphs above this order")
      ->check(CLI::Range(std::size_t{1}, qdham::kHamiltonAllPairsLimit));
  audit->add_option("--jobs", jobs, "worker threads (0 = hardware concurrency)");
  audit->add_option("--tol", tol, "power-iteration residual tolerance");
  audit->add_flag("--pretty", pretty, "indented output");

  auto* enumerate = app.add_subcommand("enumerate", "write all graphs of one order as graph6");
  enumerate->add_option("--n", enum_n, "order")->required()->check(CLI::Range(1, 10));
  enumerate->add_flag("--connected", connected_only, "connected graphs only");
  enumerate->add_flag("--bipartite", bipartite_only, "bipartite graphs only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail("usage", e.what(), kInputError);
  }

  qdham::PowerOptions power;
  power.tolerance = tol;

  try {
    if (*compute) {
      Json id;
      const qdham::Graph g = load_input(input, id);
      if (emit_g6) {
        std::cout << qdham::emit_graph6(g) << '\n';
        return kOk;
      }
      print(compute_report(g, id, power, theorems, props), pretty);
      return kOk;
    }
    if (*check) {
      Json id;
      const qdham::Graph g = load_input(input, id);
      Json j = qdham::to_json(qdham::check_theorem(theorem, g, power));
      j["input"] = id;
      print(j, pretty);
      return kOk;
    }
    if (*oracle) {
      Json id;
      const qdham::Graph g = load_input(input, id);
      Json j = oracle_query(g, prop, u, v);
      j["input"] = id;
      print(j, pretty);
      return kOk;
    }
    if (*tables) {
      const auto results = qdham::reproduce_tables(power);
      bool ok = true;
      Json rows = Json::array();
      Json flagged = Json::array();
      for (const auto& r : results) {
        Json row;
        row["table"] = r.row.table;
        row["graph"] = std::string(r.row.graph);
        row["expr"] = std::string(r.row.expr);
        row["n"] = r.order;
        row["printed_rho"] = std::string(r.row.printed_rho);
        row["rho"] = r.rho;
        row["abs_delta"] = r.delta;
        row["printed_threshold"] = std::string(r.row.printed_threshold);
        row["threshold"] = std::to_string(r.threshold.num) + "/" + std::to_string(r.threshold.den);
        row["threshold_value"] = r.threshold.value();
        row["rho_ok"] = r.rho_ok;
        row["threshold_ok"] = r.threshold_ok;
        row["rho_exceeds_threshold"] = r.exceeds_threshold;
        rows.push_back(row);
        if (!r.rho_ok || !r.threshold_ok) {
          ok = false;
          flagged.push_back(std::string(r.row.graph));
        }
      }
      if (pretty) {
        print_tables_pretty(results);
        if (!ok) std::cout << "\nflagged rows: " << flagged.size() << "\n";
      } else {
        Json out;
        out["tolerance"] = qdham::kTableTolerance;
        out["rows"] = rows;
        out["flagged"] = flagged;
        out["all_match"] = ok;
        print(out, false);
      }
      return ok ? kOk : kAcceptanceFailure;
    }
    if (*audit) {
      qdham::AuditOptions opts;
      if (!theorems.empty()) opts.theorems = theorems;
      opts.max_order = limit_n;
      opts.jobs = jobs;
      opts.power = power;
      qdham::AuditSummary summary;
      if (corpus == "-") {
        summary = qdham::audit_corpus(std::cin, opts);
      } else {
        std::ifstream file(corpus);
        if (!file) return fail("io", "cannot open corpus " + corpus, kInputError);
        summary = qdham::audit_corpus(file, opts);
      }
      print(qdham::to_json(summary), pretty);
      return summary.counterexamples.empty() && !summary.partial ? kOk : kAcceptanceFailure;
    }
    if (*enumerate) {
      const auto graphs = qdham::enumerate_graphs(enum_n, [&](const qdham::Graph& g) {
        return !bipartite_only || qdham::bipartition(g).has_value();
      });
      for (const auto& g : graphs) {
        if (connected_only && !qdham::is_connected(g)) continue;
        std::cout << qdham::emit_graph6(g) << '\n';
      }
      return kOk;
    }
  } catch (const qdham::SizeLimitError& e) {
    return fail("size-limit", e.what(), kSizeLimit);
  } catch (const qdham::ParseError& e) {
    return fail("parse", e.what(), kInputError, e.offset());
  } catch (const qdham::DisconnectedError& e) {
    return fail("disconnected", e.what(), kInputError);
  } catch (const qdham::InvalidParameter& e) {
    return fail("invalid-parameter", e.what(), kInputError);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), kInternal);
  }
  return kOk;
}
