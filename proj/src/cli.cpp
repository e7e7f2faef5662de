#include "indseq/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "indseq/bipartite_bounds.hpp"
#include "indseq/builder.hpp"
#include "indseq/enumerate.hpp"
#include "indseq/errors.hpp"
#include "indseq/experiment.hpp"
#include "indseq/extremal.hpp"
#include "indseq/graph6.hpp"
#include "indseq/json_io.hpp"
#include "indseq/random.hpp"
#include "indseq/seq_analysis.hpp"

namespace indseq {

namespace {

constexpr const char* kFooter = R"txt(Graph input (poly):
  a graph6 string, or a builder expression
    name(arg, ...) with names path, cycle, complete, empty, star (one
    integer), complete_bipartite (two integers), union and join (two or
    more graphs); K<n>, P<n>, C<n>, E<n>, S<n> abbreviate complete, path,
    cycle, empty and star. Example: "join(union(K4,K4,K4),K37)".

p schedules (random):
  delta-constant:D   p = D
  sqrt-log:D         p = D * sqrt(ln n / n)
  connectivity:c     p = (ln n + ln ln n + c) / n

Environment: INDSEQ_WORKERS sets the default for --workers.
Exit codes: 0 ok, 1 I/O error, 2 parse error, 3 budget exceeded,
4 precondition violated.)txt";

struct Common {
  int workers = 1;
  std::optional<std::uint64_t> budget_nodes;
  std::string format;  // empty: the subcommand default
  std::string output;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::string first_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
  }
  throw ParseError("input file holds no graph");
}

std::string line(const Json& j) { return j.dump() + "\n"; }

CountOptions count_options(const Common& c) {
  CountOptions o;
  if (c.budget_nodes) o.node_budget = *c.budget_nodes;
  return o;
}

BoundOptions bound_options(const Common& c) {
  BoundOptions o;
  if (c.budget_nodes) o.node_budget = *c.budget_nodes;
  return o;
}

Json header(const char* command) {
  Json j;
  j["schema"] = kSchema;
  j["command"] = command;
  return j;
}

// --- poly -------------------------------------------------------------

struct PolyArgs {
  std::string graph;
  std::string file;
};

std::string cmd_poly(const PolyArgs& a, const Common& c) {
  if (a.graph.empty() == a.file.empty()) {
    throw ParseError("poly needs exactly one of GRAPH or --file");
  }
  const Graph g = parse_graph_text(a.file.empty() ? a.graph : first_line(read_file(a.file)));
  const CoeffSeq seq = ind_seq(g, count_options(c));
  const SeqVerdict verdict = analyze(seq);
  if (c.format == "csv") {
    std::string out = "t,i_t\n";
    const auto digits = seq.to_strings();
    for (std::size_t t = 0; t < digits.size(); ++t) {
      out += std::to_string(t) + "," + digits[t] + "\n";
    }
    return out;
  }
  Json j = header("poly");
  j["graph6"] = write_graph6(g);
  j["n"] = g.order();
  j["edges"] = g.edge_count();
  j["sequence"] = to_json(seq);
  j["total"] = total(seq).get_str();
  j["alpha"] = seq.degree();
  j["verdict"] = to_json(verdict);
  j["real_rooted"] = is_real_rooted(seq);
  return line(j);
}

// --- random -----------------------------------------------------------

struct RandomArgs {
  int n = 0;
  std::optional<double> p;
  std::string schedule;
  int samples = 1;
  std::uint64_t seed = 0;
  bool bounds_only = false;
};

std::string cmd_random(const RandomArgs& a, const Common& c) {
  ExperimentConfig config;
  config.n = a.n;
  if (a.p.has_value() == !a.schedule.empty()) {
    throw ParseError("random needs exactly one of --p or --p-schedule");
  }
  if (a.p) {
    config.p = PSpec{PSpec::Kind::kFixed, *a.p};
  } else {
    config.p = parse_schedule(a.schedule);
  }
  config.samples = a.samples;
  config.seed = a.seed;
  config.workers = c.workers;
  config.bounds_only = a.bounds_only;
  config.count = count_options(c);
  config.bounds = bound_options(c);
  const ExperimentResult result = run_experiment(config);
  return c.format == "csv" ? to_csv(result) : line(to_json(result));
}

// --- extremal ---------------------------------------------------------

struct ExtremalArgs {
  int n = 0;
  int delta = 0;
  std::string x;
  std::optional<int> t;
  std::optional<int> probe_to;
  int max_order = EnumerationOptions{}.max_order;
};

std::string cmd_extremal(const ExtremalArgs& a, const Common& c) {
  if (!a.x.empty() && a.t) throw ParseError("--x and --t are exclusive");
  ExtremalOptions opts;
  opts.workers = c.workers;
  opts.enumeration.max_order = a.max_order;
  opts.count = count_options(c);

  if (a.probe_to) {
    if (!a.x.empty() || a.t) throw ParseError("--probe-to compares i(G) only");
    const ConjectureProbe probe = probe_conjecture3(a.delta, a.n, *a.probe_to, opts);
    if (c.format == "csv") {
      std::string out = "n,kdn_value,max_value,counterexample,kdn_unique\n";
      for (const auto& r : probe.rows) {
        out += std::to_string(r.n) + "," + rational_to_string(r.kdn_value) + "," +
               rational_to_string(r.max_value) + "," + (r.counterexample ? "1" : "0") +
               "," + (r.kdn_unique ? "1" : "0") + "\n";
      }
      return out;
    }
    Json j = header("extremal");
    j["probe"] = to_json(probe);
    return line(j);
  }

  std::optional<Rational> x;
  if (!a.x.empty()) x = rational_from_string(a.x);
  const ExtremalReport report =
      a.t ? verify_fixed_size(a.n, a.delta, *a.t, opts)
          : verify_max_total(a.n, a.delta, x, opts);
  if (c.format == "csv") {
    std::string out = "graph6,value\n";
    for (const auto& g6 : report.maximizer_graph6) {
      out += g6 + "," + rational_to_string(report.max_value) + "\n";
    }
    return out;
  }
  Json j = header("extremal");
  const Json body = to_json(report);
  for (const auto& [key, value] : body.items()) j[key] = value;
  if (x && *x > 0 && a.delta >= 1) {
    Json th = to_json(thresholds(*x));
    th["n_min"] = high_to_string(n_min(*x, a.delta));
    j["thresholds"] = std::move(th);
  }
  return line(j);
}

// --- enumerate --------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  int delta = 0;
  int max_order = EnumerationOptions{}.max_order;
};

std::string cmd_enumerate(const EnumerateArgs& a, const Common& c) {
  EnumerationOptions opts;
  opts.max_order = a.max_order;
  const std::vector<Graph> graphs = enumerate_all(a.n, a.delta, opts);
  if (c.format == "json") {
    Json j = header("enumerate");
    j["n"] = a.n;
    j["delta"] = a.delta;
    j["count"] = graphs.size();
    Json list = Json::array();
    for (const auto& g : graphs) list.push_back(write_graph6(g));
    j["graphs"] = std::move(list);
    return line(j);
  }
  std::string out = c.format == "csv" ? "graph6\n" : "";
  for (const auto& g : graphs) out += write_graph6(g) + "\n";
  return out;
}

// --- bounds -----------------------------------------------------------

struct BoundsArgs {
  std::string input;
  std::string file;
  std::string family;
  std::optional<int> n;
  std::optional<double> p;
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  bool no_sandwich = false;
};

BipartiteGraph bounds_input(const BoundsArgs& a) {
  const int sources = !a.input.empty() + !a.file.empty() + !a.family.empty() +
                      (a.family.empty() && a.p.has_value());
  if (sources != 1) {
    throw ParseError("bounds needs exactly one of INPUT, --file, --family or --p");
  }
  if (!a.input.empty()) return bipartite_from_json(parse_json(a.input));
  if (!a.file.empty()) return bipartite_from_json(parse_json(read_file(a.file)));
  if (!a.n) throw ParseError("--family and --p need --n");
  if (a.family == "complete") return BipartiteGraph::complete(*a.n);
  if (a.family == "empty") return BipartiteGraph::empty(*a.n);
  if (a.family == "matching") return BipartiteGraph::perfect_matching(*a.n);
  if (!a.family.empty()) throw ParseError("unknown family '" + a.family + "'");
  return sample_bipartite(*a.n, *a.p, RngSpec{a.seed, a.stream});
}

std::string cmd_bounds(const BoundsArgs& a, const Common& c) {
  const BipartiteGraph b = bounds_input(a);
  const int n = b.side();
  const BoundOptions bopts = bound_options(c);
  const bool sandwich = !a.no_sandwich && n <= kExactCountLimit;
  std::optional<SandwichReport> report;
  if (sandwich) report = coefficient_sandwich(b, count_options(c), bopts);
  const BoundProfile profile = report ? report->profile : make_profile(b, bopts);

  std::vector<std::optional<bool>> uni(n + 1), logc(n + 1);
  for (int t = 1; t <= n; ++t) {
    if (unimodality_range_covers(n, t)) uni[t] = unimodality_threshold_ok(profile, t);
    if (t <= n - 1) logc[t] = logconcavity_threshold_ok(profile, t);
  }
  std::optional<PropertyReport> props;
  if (a.p && n * *a.p > 1.0) props = as_properties(b, *a.p, profile);

  if (c.format == "csv") {
    auto cell = [](const std::optional<bool>& v) {
      return v ? std::string(*v ? "1" : "0") : std::string();
    };
    std::string out = "t,x,unimodality_threshold_ok,logconcavity_threshold_ok,"
                      "count,lower,upper\n";
    for (int t = 0; t <= n; ++t) {
      out += std::to_string(t) + "," + rational_to_string(profile.x[t]) + "," +
             cell(uni[t]) + "," + cell(logc[t]) + ",";
      if (report && t >= 1) {
        const SandwichRow& row = report->rows[t - 1];
        out += row.count.get_str() + "," + row.lower.get_str() + "," +
               rational_to_string(row.upper);
      } else {
        out += ",,";
      }
      out += "\n";
    }
    return out;
  }

  Json j = header("bounds");
  j["graph"] = to_json(b);
  j["profile"] = to_json(profile);
  j["sandwich"] = report ? to_json(*report) : Json(nullptr);
  Json u = Json::object(), l = Json::object();
  for (int t = 1; t <= n; ++t) {
    if (uni[t]) u[std::to_string(t)] = *uni[t];
    if (logc[t]) l[std::to_string(t)] = *logc[t];
  }
  j["unimodality_threshold_ok"] = std::move(u);
  j["logconcavity_threshold_ok"] = std::move(l);
  j["properties"] = props ? to_json(*props) : Json(nullptr);
  return line(j);
}

void add_common(CLI::App* sub, Common& c, const std::vector<std::string>& formats) {
  sub->add_option("--workers", c.workers, "Worker threads")
      ->envname("INDSEQ_WORKERS")
      ->check(CLI::Range(1, 1024));
  sub->add_option("--budget-nodes", c.budget_nodes,
                  "Search-node budget for counting and bound searches");
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(formats));
  sub->add_option("--output", c.output, "Write data to FILE instead of stdout");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Independent set sequences: exact counting, bounds and extremal checks",
               "indseq"};
  app.footer(kFooter);
  app.require_subcommand(1);

  Common common;
  PolyArgs poly;
  RandomArgs random;
  ExtremalArgs extremal;
  EnumerateArgs enumerate;
  BoundsArgs bounds;

  auto* p = app.add_subcommand("poly", "Independence sequence and its verdict");
  p->add_option("graph", poly.graph, "graph6 string or builder expression");
  p->add_option("--file", poly.file, "Read the graph from FILE");
  add_common(p, common, {"json", "csv"});

  auto* r = app.add_subcommand("random", "Seeded experiments on G(n,n,p)");
  r->add_option("--n", random.n, "Side size")->required();
  r->add_option("--p", random.p, "Fixed edge probability");
  r->add_option("--p-schedule", random.schedule, "Probability schedule name:value");
  r->add_option("--samples", random.samples, "Number of samples")->default_val(1);
  r->add_option("--seed", random.seed, "64-bit seed")->default_val(0);
  r->add_flag("--bounds-only", random.bounds_only, "Skip exact counting");
  add_common(r, common, {"json", "csv"});

  auto* e = app.add_subcommand("extremal", "Exhaustive maximisers under minimum degree");
  e->add_option("--n", extremal.n, "Vertex count (probe: first n)")->required();
  e->add_option("--delta", extremal.delta, "Minimum degree")->required();
  e->add_option("--x", extremal.x, "Maximise P(G,x) at rational x (e.g. 1/2)");
  e->add_option("--t", extremal.t, "Maximise i_t(G)");
  e->add_option("--probe-to", extremal.probe_to,
                "Compare max i(G) with K_{delta,n-delta} for n up to this");
  e->add_option("--max-order", extremal.max_order, "Enumeration limit (hard wall 10)");
  add_common(e, common, {"json", "csv"});

  auto* en = app.add_subcommand("enumerate", "Isomorph-free graphs with minimum degree");
  en->add_option("--n", enumerate.n, "Vertex count")->required();
  en->add_option("--delta", enumerate.delta, "Minimum degree")->default_val(0);
  en->add_option("--max-order", enumerate.max_order, "Enumeration limit (hard wall 10)");
  add_common(en, common, {"graph6", "json", "csv"});

  auto* b = app.add_subcommand("bounds", "K, m(k), x(t) and the coefficient sandwich");
  b->add_option("input", bounds.input, R"(JSON {"n":..,"rows":["0x..",..]})");
  b->add_option("--file", bounds.file, "Read the JSON graph from FILE");
  b->add_option("--family", bounds.family, "complete | empty | matching (with --n)");
  b->add_option("--n", bounds.n, "Side size for --family or --p");
  b->add_option("--p", bounds.p, "Sample G(n,n,p); also enables property checks");
  b->add_option("--seed", bounds.seed, "Seed for --p")->default_val(0);
  b->add_option("--stream", bounds.stream, "Stream for --p")->default_val(0);
  b->add_flag("--no-sandwich", bounds.no_sandwich, "Skip exact counting");
  add_common(b, common, {"json", "csv"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& h) {
    return app.exit(h, out, err);
  } catch (const CLI::CallForAllHelp& h) {
    return app.exit(h, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    if (common.format.empty()) common.format = en->parsed() ? "graph6" : "json";
    std::string data;
    if (p->parsed()) data = cmd_poly(poly, common);
    else if (r->parsed()) data = cmd_random(random, common);
    else if (e->parsed()) data = cmd_extremal(extremal, common);
    else if (en->parsed()) data = cmd_enumerate(enumerate, common);
    else data = cmd_bounds(bounds, common);

    if (common.output.empty()) {
      out << data;
      out.flush();
    } else {
      std::ofstream file(common.output, std::ios::binary);
      file << data;
      if (!file) throw std::ios_base::failure("cannot write '" + common.output + "'");
    }
    return kExitOk;
  } catch (const ParseError& ex) {
    err << "indseq: parse error: " << ex.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceeded& ex) {
    err << "indseq: budget exceeded: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const PreconditionError& ex) {
    err << "indseq: precondition violated: " << ex.what() << "\n";
    return kExitPrecondition;
  } catch (const std::exception& ex) {
    err << "indseq: " << ex.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace indseq
