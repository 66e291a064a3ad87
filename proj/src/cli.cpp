#include "booklab/cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "booklab/canonical.hpp"
#include "booklab/cliques.hpp"
#include "booklab/constructions.hpp"
#include "booklab/error.hpp"
#include "booklab/graph_io.hpp"
#include "booklab/partitions.hpp"
#include "booklab/patterns.hpp"
#include "booklab/report_json.hpp"
#include "booklab/search.hpp"
#include "booklab/table.hpp"

namespace booklab {

namespace {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GraphFormat parse_format(const std::string& name) {
  if (name == "auto") return GraphFormat::kAuto;
  if (name == "g6" || name == "graph6") return GraphFormat::kGraph6;
  if (name == "edges" || name == "edge-list") return GraphFormat::kEdgeList;
  throw Error(ErrorKind::kInvalidParameter, "unknown graph format '" + name + "'");
}

/// "-" is stdin, an existing path is read, anything else is graph text.
std::string slurp_input(const std::string& spec, std::istream& in) {
  if (spec == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream file(spec);
    if (!file) throw IoError("cannot read " + spec);
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
  }
  return spec;
}

json witness_json(const VertexSet& s) { return s.members(); }

struct Common {
  std::string input;
  std::string format = "auto";
  std::string forbid;
  int r = 0;
  int jobs = 1;
};

void add_input(CLI::App* cmd, Common& c) {
  cmd->add_option("--input,-i", c.input,
                  "graph6 text, edge-list file, graph file path, or - for stdin")
      ->required();
  cmd->add_option("--format", c.format, "input format: auto, g6, edges")
      ->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
  CLI::App app{"booklab: generalized Turan numbers ex(n, K_r, B_{r,s}) by "
               "exhaustive search, constructions and Zykov symmetrization"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kSchema));

  Common c;
  std::function<void()> action;

  // count
  auto* count = app.add_subcommand("count", "count r-cliques of a graph");
  add_input(count, c);
  count->add_option("--r", c.r, "clique size")->required();
  count->callback([&] {
    action = [&] {
      const Graph g = parse_graph(slurp_input(c.input, in), parse_format(c.format));
      out << json{{"schema", kSchema},
                  {"n", g.order()},
                  {"r", c.r},
                  {"count", count_cliques(g, c.r)}}
                 .dump()
          << '\n';
    };
  });

  // free
  auto* free_cmd = app.add_subcommand("free", "test a graph for family-freeness");
  add_input(free_cmd, c);
  free_cmd->add_option("--forbid", c.forbid, "family, e.g. \"B(4,1),H1,K(5)\"")
      ->required();
  free_cmd->callback([&] {
    action = [&] {
      const Graph g = parse_graph(slurp_input(c.input, in), parse_format(c.format));
      const ForbiddenFamily family = parse_family(c.forbid);
      json j{{"schema", kSchema}, {"n", g.order()}, {"family", to_string(family)}};
      json violations = json::array();
      for (const auto& p : family.patterns) {
        ForbiddenFamily single;
        single.patterns.push_back(p);
        if (!is_free(g, single))
          violations.push_back({{"kind", "pattern"}, {"name", p.name}});
      }
      for (const auto& b : family.books) {
        if (auto w = book_violation(g, b)) {
          violations.push_back(
              {{"kind", "book"},
               {"name", "B(" + std::to_string(b.r) + "," + std::to_string(b.s) + ")"},
               {"first", witness_json(w->first)},
               {"second", witness_json(w->second)},
               {"overlap", w->overlap}});
        }
      }
      j["free"] = violations.empty();
      j["violations"] = std::move(violations);
      out << j.dump() << '\n';
    };
  });

  // construct
  struct {
    int n = 0, r = 4, s = 1, t = 2;
    std::string kind, partition, family, to = "g6", sidecar;
  } k;
  auto* construct = app.add_subcommand("construct", "emit an extremal construction");
  construct->add_option("--n", k.n, "vertex count")->required();
  construct->add_option("--kind", k.kind, "book, k4pack, gp, b42, turan")
      ->required()
      ->check(CLI::IsMember({"book", "k4pack", "gp", "b42", "turan"}));
  construct->add_option("--r", k.r, "clique size (book, turan)")->capture_default_str();
  construct->add_option("--s", k.s, "overlap (book, gp)")->capture_default_str();
  construct->add_option("--t", k.t, "part count (turan)")->capture_default_str();
  construct->add_option("--partition", k.partition, "gp partition, e.g. 3,1");
  construct->add_option("--family", k.family,
                        "family to verify (defaults to the construction's own)");
  construct->add_option("--to", k.to, "output format: g6, edges")->capture_default_str();
  construct->add_option("--sidecar", k.sidecar, "write the JSON sidecar here");
  construct->callback([&] {
    action = [&] {
      Graph g;
      ForbiddenFamily own;
      Count predicted = 0;
      int r = 0;
      if (k.kind == "book") {
        g = book_extremal(k.n, k.r, k.s);
        own.add_book(k.r, k.s);
        r = k.r;
        predicted = turan_clique_count(k.n - k.s - 1, k.r - k.s - 1, k.r - k.s - 1);
      } else if (k.kind == "k4pack") {
        g = k4_packing(k.n);
        own.add_book(3, 1);
        r = 3;
        predicted = k4_packing_value(k.n);
      } else if (k.kind == "gp") {
        if (k.partition.empty())
          throw Error(ErrorKind::kInvalidParameter, "--kind gp needs --partition");
        const Partition p = parse_partition(k.partition);
        g = gp_construction(k.n, p, k.s);
        own.add_book(p.total(), k.s);
        r = p.total();
        predicted = gp_predicted_count(k.n, p);
      } else if (k.kind == "b42") {
        g = b42_construction(k.n);
        own.add_book(4, 2);
        r = 4;
        predicted = b42_predicted_count(k.n);
      } else {
        g = turan_graph(k.n, k.t);
        own.add_clique(k.t + 1);
        r = k.r;
        predicted = turan_clique_count(k.n, k.t, k.r);
      }
      const ForbiddenFamily family = k.family.empty() ? own : parse_family(k.family);
      const json sidecar{{"schema", kSchema},
                         {"n", k.n},
                         {"kind", k.kind},
                         {"r", r},
                         {"family", to_string(family)},
                         {"predicted_count", predicted},
                         {"count", count_cliques(g, r)},
                         {"verified_free", is_free(g, family)}};
      out << format_graph(g, parse_format(k.to));
      if (parse_format(k.to) == GraphFormat::kGraph6) out << '\n';
      if (k.sidecar.empty()) {
        out << sidecar.dump() << '\n';
      } else {
        std::ofstream file(k.sidecar);
        if (!file) throw IoError("cannot write " + k.sidecar);
        file << sidecar.dump(2) << '\n';
      }
    };
  });

  // exact
  struct {
    int n = 0;
    std::string engine = "canonical";
    double max_seconds = 0;
    int max_order = 0;
  } e;
  auto* exact = app.add_subcommand("exact", "exact ex(n, K_r, family) by exhaustive search");
  exact->add_option("--n", e.n, "vertex count")->required();
  exact->add_option("--r", c.r, "clique size")->required();
  exact->add_option("--forbid", c.forbid, "family (empty for none)");
  exact->add_option("--engine", e.engine, "canonical or labeled")->capture_default_str();
  exact->add_option("--max-seconds", e.max_seconds,
                    "soft deadline; partial report flagged exhaustive=false");
  exact->add_option("--max-order", e.max_order, "override the engine's order cap");
  exact->add_option("--jobs,-j", c.jobs, "worker threads")->capture_default_str();
  exact->callback([&] {
    action = [&] {
      SearchOptions options;
      options.jobs = c.jobs;
      if (e.max_seconds > 0) options.max_seconds = e.max_seconds;
      if (e.max_order > 0) options.max_order = e.max_order;
      const auto report =
          exact_ex(e.n, c.r, parse_family(c.forbid), parse_engine(e.engine), options);
      out << to_json(report).dump() << '\n';
    };
  });

  // climb
  ClimbOptions climb_options;
  auto* climb = app.add_subcommand("climb", "Zykov-symmetrization hill climbing");
  add_input(climb, c);
  climb->add_option("--r", c.r, "clique size")->required();
  climb->add_option("--forbid", c.forbid, "family");
  climb->add_option("--seed", climb_options.seed, "seed for restarts")->capture_default_str();
  climb->add_option("--restarts", climb_options.restarts, "runs, the first on the input as given")
      ->capture_default_str();
  climb->add_option("--jobs,-j", c.jobs, "worker threads")->capture_default_str();
  climb->callback([&] {
    action = [&] {
      const Graph g = parse_graph(slurp_input(c.input, in), parse_format(c.format));
      climb_options.jobs = c.jobs;
      const auto report = symmetrize(g, c.r, parse_family(c.forbid), climb_options);
      out << to_json(report).dump() << '\n';
    };
  });

  // beta
  struct {
    int r = 0, s = 0;
    bool all = false;
  } b;
  auto* beta_cmd = app.add_subcommand("beta", "maximum length of an s-sum-free partition of r");
  beta_cmd->add_option("r", b.r, "total")->required();
  beta_cmd->add_option("s", b.s, "forbidden subset sum")->required();
  beta_cmd->add_flag("--all", b.all, "also list every s-sum-free partition");
  beta_cmd->callback([&] {
    action = [&] {
      const auto result = beta(b.r, b.s);
      out << json{{"schema", kSchema},
                  {"r", b.r},
                  {"s", b.s},
                  {"beta", result.value},
                  {"witness", result.witness.parts()}}
                 .dump()
          << '\n';
      if (!b.all) return;
      for_each_partition(b.r, [&](const Partition& p) {
        if (is_s_sum_free(p, b.s))
          out << json{{"partition", p.parts()}, {"length", p.length()}}.dump() << '\n';
      });
    };
  });

  // table
  struct {
    std::string theorem;
    TableOptions options;
    std::string engine = "canonical";
    bool csv = false;
  } t;
  auto* table = app.add_subcommand("table", "closed-form values against computed ones");
  table->add_option("--theorem", t.theorem, "1.1, 2.1, 1.3 or 1.7")->required();
  table->add_option("--n-min", t.options.n_min, "first n (default per table)");
  table->add_option("--n-max", t.options.n_max, "last n")->capture_default_str();
  table->add_option("--exhaustive-max", t.options.exhaustive_max,
                    "largest n searched exhaustively")
      ->capture_default_str();
  table->add_option("--engine", t.engine, "canonical or labeled")->capture_default_str();
  table->add_option("--jobs,-j", t.options.jobs, "worker threads")->capture_default_str();
  table->add_flag("--csv", t.csv, "emit CSV instead of JSON");
  table->callback([&] {
    action = [&] {
      const TableKind kind = parse_table_kind(t.theorem);
      t.options.engine = parse_engine(t.engine);
      const auto rows = table_report(kind, t.options);
      if (t.csv) {
        out << to_csv(rows);
      } else {
        out << to_json(kind, rows).dump() << '\n';
      }
    };
  });

  // convert
  std::string convert_to = "g6";
  auto* convert = app.add_subcommand("convert", "translate between graph formats");
  add_input(convert, c);
  convert->add_option("--to", convert_to, "g6, edges or canonical (canonical graph6)")
      ->capture_default_str();
  convert->callback([&] {
    action = [&] {
      const Graph g = parse_graph(slurp_input(c.input, in), parse_format(c.format));
      if (convert_to == "canonical") {
        out << canonical_form(g).key << '\n';
        return;
      }
      const auto fmt = parse_format(convert_to);
      out << format_graph(g, fmt);
      if (fmt == GraphFormat::kGraph6) out << '\n';
    };
  });

  std::vector<const char*> argv{"booklab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& ex) {
    const int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const Error& ex) {
    err << "booklab: " << to_string(ex.kind()) << ": " << ex.what() << '\n';
    return ex.kind() == ErrorKind::kResourceLimit ? kExitResourceLimit : kExitInvalid;
  } catch (const IoError& ex) {
    err << "booklab: io: " << ex.what() << '\n';
    return kExitIo;
  }
}

}  // namespace booklab
