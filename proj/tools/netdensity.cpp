#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "CLI11.hpp"
#include "netdensity/analysis.hpp"
#include "netdensity/error.hpp"
#include "netdensity/genkit.hpp"
#include "netdensity/measures.hpp"
#include "netdensity/pajek.hpp"
#include "netdensity/triangles.hpp"

namespace fs = std::filesystem;
using namespace netdensity;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string measure_list() {
  std::string out;
  for (const auto id : all_measures()) {
    if (!out.empty()) out += ", ";
    out += measure_name(id);
  }
  return out;
}

// Relative paths that do not exist are retried under $NETDENSITY_DATA.
fs::path resolve_input(const std::string& arg) {
  fs::path p(arg);
  if (fs::exists(p) || p.is_absolute()) return p;
  if (const char* dir = std::getenv("NETDENSITY_DATA")) {
    const auto alt = fs::path(dir) / p;
    if (fs::exists(alt)) return alt;
  }
  return p;
}

pajek::ParsedNet load(const std::string& arg) { return pajek::read_net_file(resolve_input(arg)); }

const Graph& undirected(const pajek::ParsedNet& net, std::string_view command) {
  if (net.is_directed()) throw UsageError(std::string(command) + " needs an undirected network");
  return net.graph();
}

MeasureId measure_arg(const std::string& name) {
  const auto id = parse_measure(name);
  if (!id) throw UsageError("unknown measure '" + name + "'; valid names: " + measure_list());
  return *id;
}

std::vector<MeasureId> measure_args(const std::vector<std::string>& names, ElementKind kind) {
  std::vector<MeasureId> ids;
  for (const auto& name : names) {
    const auto id = measure_arg(name);
    if (measure_kind(id) != kind) throw UsageError("measure '" + name + "' is not of the requested element kind");
    ids.push_back(id);
  }
  return ids;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

void run_oracle(const Graph& g, const EdgeTriangleTable& table) {
  if (brute_force_triangles(g, g.node_count()) != table) throw InvariantError("triangle counts differ from the brute-force oracle");
  std::cerr << "oracle: triangle counts match brute force\n";
}

std::string format_value(MeasureId id, double v) {
  return is_normalized(id) ? pajek::format_fixed5(v) : pajek::format_shortest(v);
}

// ---- stats

void cmd_stats(const std::string& input, bool oracle) {
  const auto net = load(input);
  const auto& diag = net.diagnostics;
  std::ostringstream out;
  if (net.is_directed()) {
    const auto& d = net.digraph();
    const auto table = count_directed_triangles(d);
    std::uint64_t tt = 0, tc = 0;
    for (const auto& r : table.rows) {
      tt += r.transitive;
      tc += r.cyclic;
    }
    out << "directed\nnodes: " << d.node_count() << "\narcs: " << d.arc_count() << "\ntransitive arc-triangle incidences: " << tt
        << "\ncyclic arc-triangle incidences: " << tc << "\n";
  } else {
    const auto& g = net.graph();
    const GraphContext ctx(g);
    if (oracle) run_oracle(g, ctx.triangles);
    out << "nodes: " << g.node_count() << "\nedges: " << g.edge_count() << "\nmax degree: " << g.max_degree()
        << "\nmu: " << ctx.triangles.mu << "\ntriangles: " << total_triangles(ctx.triangles) << "\ntop degrees:\n";
    std::vector<NodeId> order(g.node_count());
    std::iota(order.begin(), order.end(), NodeId{0});
    const auto k = std::min<std::size_t>(5, order.size());
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(), [&](NodeId a, NodeId b) {
      return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    for (std::size_t i = 0; i < k; ++i)
      out << "  " << i + 1 << "\t" << g.degree(order[i]) << "\t" << pajek::csv_quote(g.label(order[i])) << "\n";
  }
  out << "records: " << diag.vertex_records << " vertex, " << diag.edge_records << " edge, " << diag.arc_records << " arc\n";
  if (diag.normalization.loops_dropped || diag.normalization.duplicates_dropped)
    out << "dropped: " << diag.normalization.loops_dropped << " loops, " << diag.normalization.duplicates_dropped << " duplicates\n";
  if (diag.weights_discarded) out << "weights ignored: " << diag.weights_discarded << "\n";
  if (!diag.stopped_at.empty()) out << "stopped at: " << diag.stopped_at << "\n";
  std::cout << out.str();
}

// ---- measure

struct MeasureArgs {
  std::string input;
  std::vector<std::string> edge, node, arc;
  std::string output;
  std::string vec_dir;
  bool oracle = false;
};

void cmd_measure(const MeasureArgs& args) {
  const auto edge_ids = measure_args(args.edge, ElementKind::edge);
  const auto node_ids = measure_args(args.node, ElementKind::node);
  const auto arc_ids = measure_args(args.arc, ElementKind::arc);
  const int kinds = !edge_ids.empty() + !node_ids.empty() + !arc_ids.empty();
  if (kinds == 0) throw UsageError("no measures requested; use --edge, --node or --arc");
  if (kinds > 1 && !args.output.empty()) throw UsageError("-o takes one element kind per run");
  if (!args.vec_dir.empty() && node_ids.empty()) throw UsageError("--vec needs --node measures");

  const auto net = load(args.input);
  std::string text;
  if (!arc_ids.empty()) {
    if (!net.is_directed()) throw UsageError("arc measures need a directed network");
    const auto& d = net.digraph();
    const auto table = count_directed_triangles(d);
    std::vector<MeasureTable> tables;
    for (const auto id : arc_ids) tables.push_back(compute_measure(d, table, id));
    text += pajek::write_arc_csv(d, table, tables);
  }
  if (!edge_ids.empty() || !node_ids.empty()) {
    const auto& g = undirected(net, "edge and node measures");
    const GraphContext ctx(g);
    if (args.oracle) run_oracle(g, ctx.triangles);
    if (!edge_ids.empty()) {
      std::vector<MeasureTable> tables;
      for (const auto id : edge_ids) tables.push_back(compute_measure(ctx, id));
      text += pajek::write_edge_csv(g, ctx.triangles, tables);
    }
    if (!node_ids.empty()) {
      std::vector<MeasureTable> tables;
      for (const auto id : node_ids) tables.push_back(compute_measure(ctx, id));
      if (!text.empty()) text += "\n";
      text += pajek::write_node_csv(g, ctx.neighborhood_edges, tables);
      if (!args.vec_dir.empty()) {
        fs::create_directories(args.vec_dir);
        for (const auto& t : tables)
          emit(pajek::write_vec(g.node_count(), t.values), (fs::path(args.vec_dir) / (std::string(measure_name(t.id)) + ".vec")).string());
      }
    }
  }
  emit(text, args.output);
}

// ---- cut

void cmd_cut(const std::string& input, const std::string& measure, double level, const std::string& output) {
  const auto id = measure_arg(measure);
  if (measure_kind(id) != ElementKind::edge) throw UsageError("cut needs an edge measure");
  const auto net = load(input);
  const auto& g = undirected(net, "cut");
  const GraphContext ctx(g);
  const auto cut = edge_cut(g, compute_measure(ctx, id), level);
  std::cout << "cut " << measure_name(id) << " >= " << pajek::format_shortest(level) << ": " << cut.retained_edges.size()
            << " edges, " << cut.cut.graph.node_count() << " nodes\n"
            << census_text(cut) << "\n";
  if (!output.empty()) emit(pajek::write_net(cut.cut.graph), output);
}

// ---- top

void cmd_top(const std::string& input, const std::string& measure, std::size_t k) {
  const auto id = measure_arg(measure);
  const auto net = load(input);
  std::vector<RankedRow> rows;
  if (measure_kind(id) == ElementKind::arc) {
    if (!net.is_directed()) throw UsageError("arc measures need a directed network");
    const auto& d = net.digraph();
    rows = top_k(d, compute_measure(d, count_directed_triangles(d), id), k);
  } else {
    const auto& g = undirected(net, "edge and node measures");
    const GraphContext ctx(g);
    rows = top_k(g, ctx.triangles, compute_measure(ctx, id), k);
  }
  std::ostringstream out;
  for (const auto& r : rows) {
    out << r.rank << "\t" << format_value(id, r.value);
    if (r.t) out << "\tt=" << *r.t;
    out << "\tdeg=";
    for (std::size_t i = 0; i < r.degrees.size(); ++i) out << (i ? "/" : "") << r.degrees[i];
    out << "\t";
    for (std::size_t i = 0; i < r.labels.size(); ++i) out << (i ? " -- " : "") << r.labels[i];
    out << "\n";
  }
  std::cout << out.str();
}

// ---- scatter

Series axis(const std::string& name, const Graph& g, const GraphContext& ctx) {
  if (name == "deg") return degree_series(g);
  if (name == "minDeg") return min_degree_series(g);
  const auto id = measure_arg(name);
  if (measure_kind(id) == ElementKind::arc) throw UsageError("scatter takes edge or node measures");
  return series_of(compute_measure(ctx, id));
}

void cmd_scatter(const std::string& input, const std::string& x, const std::string& y, const std::string& output) {
  const auto net = load(input);
  const auto& g = undirected(net, "scatter");
  const GraphContext ctx(g);
  const auto sx = axis(x, g, ctx);
  const auto sy = axis(y, g, ctx);
  if (sx.kind != sy.kind) throw UsageError("scatter axes must both be edge or both be node series");
  const auto data = scatter(sx, sy);
  std::string text = data.x_name + "," + data.y_name + ",key\n";
  for (const auto& p : data.points) {
    const auto key = data.kind == ElementKind::node ? g.label(static_cast<NodeId>(p.key))
                                                    : g.label(g.edge(p.key).u) + " -- " + g.label(g.edge(p.key).v);
    text += pajek::format_shortest(p.x) + "," + pajek::format_shortest(p.y) + "," + pajek::csv_quote(key) + "\n";
  }
  emit(text, output);
}

// ---- gen

std::int64_t int_param(const std::string& s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("not an integer: " + s);
  return v;
}

double real_param(const std::string& s) {
  double v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("not a number: " + s);
  return v;
}

gen::GenSpec gen_spec(const std::vector<std::string>& args, std::uint64_t seed) {
  if (args.empty()) throw UsageError("gen needs a family: complete n | path n | cycle n | star k | T a t b | er n p");
  const auto& family = args[0];
  auto expect = [&](std::size_t count) {
    if (args.size() != count + 1) throw UsageError("gen " + family + " takes " + std::to_string(count) + " parameter(s)");
  };
  gen::GenSpec spec;
  spec.seed = seed;
  if (family == "complete" || family == "path" || family == "cycle" || family == "star") {
    expect(1);
    spec.family = family == "complete" ? gen::Family::complete
                  : family == "path"   ? gen::Family::path
                  : family == "cycle"  ? gen::Family::cycle
                                       : gen::Family::star;
    spec.n = int_param(args[1]);
  } else if (family == "T") {
    expect(3);
    spec.family = gen::Family::t_pattern;
    spec.a = int_param(args[1]);
    spec.t = int_param(args[2]);
    spec.b = int_param(args[3]);
  } else if (family == "er") {
    expect(2);
    spec.family = gen::Family::erdos_renyi;
    spec.n = int_param(args[1]);
    spec.p = real_param(args[2]);
  } else {
    throw UsageError("unknown family '" + family + "'");
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Triangle-based local density measures on Pajek networks.\n\nMeasures: " + measure_list() +
               "\nScatter axes also accept deg (nodes) and minDeg (edges).\nRelative input paths fall back to $NETDENSITY_DATA."};
  app.require_subcommand(1);

  std::string input;
  bool oracle = false;

  auto* stats = app.add_subcommand("stats", "Size, mu, triangles and the top-5 degrees");
  stats->add_option("input", input, "Pajek .net file")->required();
  stats->add_flag("--oracle", oracle, "Cross-check triangle counts against brute force");

  MeasureArgs margs;
  auto* measure = app.add_subcommand("measure", "Per-edge, per-node or per-arc measure tables as CSV");
  measure->add_option("input", margs.input, "Pajek .net file")->required();
  measure->add_option("--edge", margs.edge, "Edge measures")->delimiter(',');
  measure->add_option("--node", margs.node, "Node measures")->delimiter(',');
  measure->add_option("--arc", margs.arc, "Arc measures (directed input)")->delimiter(',');
  measure->add_option("-o,--output", margs.output, "Write the CSV here instead of stdout");
  measure->add_option("--vec", margs.vec_dir, "Directory for one Pajek .vec file per node measure");
  measure->add_flag("--oracle", margs.oracle, "Cross-check triangle counts against brute force");

  std::string measure_id;
  double level = 0.0;
  std::string output;
  auto* cut = app.add_subcommand("cut", "Subnetwork of edges with measure >= level");
  cut->add_option("input", input, "Pajek .net file")->required();
  cut->add_option("--measure", measure_id, "Edge measure")->required();
  cut->add_option("--level", level, "Inclusive threshold")->required();
  cut->add_option("-o,--output", output, "Write the cut as .net");

  std::size_t k = 10;
  auto* top = app.add_subcommand("top", "Largest values of a measure");
  top->add_option("input", input, "Pajek .net file")->required();
  top->add_option("--measure", measure_id, "Measure")->required();
  top->add_option("-k", k, "Number of rows")->capture_default_str();

  std::string x_axis, y_axis;
  auto* sc = app.add_subcommand("scatter", "Paired values of two measures as CSV");
  sc->add_option("input", input, "Pajek .net file")->required();
  sc->add_option("--x", x_axis, "Measure, deg or minDeg")->required();
  sc->add_option("--y", y_axis, "Measure, deg or minDeg")->required();
  sc->add_option("-o,--output", output, "Write the CSV here instead of stdout");

  std::vector<std::string> gen_args;
  std::uint64_t seed = 1;
  auto* gen_cmd = app.add_subcommand("gen", "Generate complete n | path n | cycle n | star k | T a t b | er n p");
  gen_cmd->add_option("spec", gen_args, "Family and parameters")->required();
  gen_cmd->add_option("--seed", seed, "Seed for er")->capture_default_str();
  gen_cmd->add_option("-o,--output", output, "Write the .net here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*stats) cmd_stats(input, oracle);
    else if (*measure) cmd_measure(margs);
    else if (*cut) cmd_cut(input, measure_id, level, output);
    else if (*top) cmd_top(input, measure_id, k);
    else if (*sc) cmd_scatter(input, x_axis, y_axis, output);
    else if (*gen_cmd) emit(pajek::write_net(gen::make(gen_spec(gen_args, seed))), output);
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
