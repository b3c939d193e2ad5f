#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "netdensity/analysis.hpp"
#include "netdensity/error.hpp"
#include "netdensity/genkit.hpp"
#include "netdensity/measures.hpp"
#include "netdensity/pajek.hpp"
#include "netdensity/triangles.hpp"

namespace py = pybind11;
using namespace netdensity;

namespace {

MeasureId measure_id(const std::string& name) {
  const auto id = parse_measure(name);
  if (!id) throw py::value_error("unknown measure '" + name + "'");
  return *id;
}

std::string_view kind_name(ElementKind k) {
  switch (k) {
    case ElementKind::edge: return "edge";
    case ElementKind::node: return "node";
    case ElementKind::arc: return "arc";
  }
  return "?";
}

py::object wrap(pajek::ParsedNet net) {
  if (net.is_directed()) return py::cast(std::move(std::get<DiGraph>(net.network)));
  return py::cast(std::move(std::get<Graph>(net.network)));
}

py::list edge_list(const std::vector<EdgeRef>& edges) {
  py::list out;
  for (const auto& e : edges) out.append(py::make_tuple(e.u, e.v));
  return out;
}

py::dict ranked(const RankedRow& r) {
  py::dict d;
  d["rank"] = r.rank;
  d["index"] = r.index;
  d["value"] = r.value;
  d["labels"] = r.labels;
  d["degrees"] = r.degrees;
  d["t"] = r.t ? py::cast(*r.t) : py::none();
  return d;
}

}  // namespace

PYBIND11_MODULE(_netdensity, m) {
  m.doc() = "Triangle-based local density measures";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<InvariantError>(m, "InvariantError", error.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<NodePair>& edges, std::vector<std::string> labels) {
             return build_graph(n, edges, std::move(labels)).graph;
           }),
           py::arg("n"), py::arg("edges") = std::vector<NodePair>{}, py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("node_count", &Graph::node_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def_property_readonly("edges", [](const Graph& g) { return edge_list(g.edges()); })
      .def_property_readonly("labels", [](const Graph& g) {
        std::vector<std::string> out;
        for (NodeId u = 0; u < g.node_count(); ++u) out.push_back(g.label(u));
        return out;
      })
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, NodeId u) {
        const auto s = g.neighbors(u);
        return std::vector<NodeId>(s.begin(), s.end());
      })
      .def("label", &Graph::label)
      .def("find_edge", &Graph::find_edge)
      .def("has_edge", &Graph::has_edge)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.node_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  py::class_<DiGraph>(m, "DiGraph")
      .def(py::init([](std::size_t n, const std::vector<NodePair>& arcs, std::vector<std::string> labels) {
             return build_digraph(n, arcs, std::move(labels)).graph;
           }),
           py::arg("n"), py::arg("arcs") = std::vector<NodePair>{}, py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("node_count", &DiGraph::node_count)
      .def_property_readonly("arc_count", &DiGraph::arc_count)
      .def_property_readonly("arcs", [](const DiGraph& d) { return edge_list(d.arcs()); })
      .def("outdeg", &DiGraph::outdeg)
      .def("indeg", &DiGraph::indeg)
      .def("label", &DiGraph::label)
      .def("find_arc", &DiGraph::find_arc)
      .def("__eq__", [](const DiGraph& a, const DiGraph& b) { return a == b; })
      .def("__repr__", [](const DiGraph& d) {
        return "<DiGraph n=" + std::to_string(d.node_count()) + " arcs=" + std::to_string(d.arc_count()) + ">";
      });

  // ---- io
  m.def("parse_net", [](std::string_view text) { return wrap(pajek::parse_net(text)); }, py::arg("text"),
        "Parse Pajek .net text into a Graph or DiGraph.");
  m.def("read_net", [](const std::filesystem::path& p) { return wrap(pajek::read_net_file(p)); }, py::arg("path"));
  m.def("write_net", py::overload_cast<const Graph&>(&pajek::write_net));
  m.def("write_net", py::overload_cast<const DiGraph&>(&pajek::write_net));

  // ---- triangles and measures
  m.def("measure_names", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto id : all_measures()) out.emplace_back(measure_name(id), kind_name(measure_kind(id)));
    return out;
  }, "List of (name, element kind) pairs.");

  m.def("edge_triangles", [](const Graph& g) {
    const auto table = count_edge_triangles(g);
    py::dict d;
    std::vector<std::size_t> t, lo, hi;
    for (const auto& r : table.rows) {
      t.push_back(r.t);
      lo.push_back(r.m);
      hi.push_back(r.M);
    }
    d["t"] = t;
    d["m"] = lo;
    d["M"] = hi;
    d["mu"] = table.mu;
    d["delta"] = table.delta;
    d["triangles"] = total_triangles(table);
    return d;
  }, py::arg("graph"), "Per-edge t, m, M in edge order, plus mu, delta and the triangle count.");

  m.def("brute_force_t", [](const Graph& g) {
    std::vector<std::size_t> t;
    for (const auto& r : brute_force_triangles(g).rows) t.push_back(r.t);
    return t;
  }, py::arg("graph"));

  m.def("neighborhood_edges", [](const Graph& g) { return node_neighborhood_edges(g, count_edge_triangles(g)); },
        py::arg("graph"), "E(u) for every node.");

  m.def("measure", [](const Graph& g, const std::string& name) {
    return compute_measure(GraphContext(g), measure_id(name)).values;
  }, py::arg("graph"), py::arg("name"), "Values of an edge or node measure in edge/node order.");

  m.def("measure", [](const DiGraph& d, const std::string& name) {
    return compute_measure(d, count_directed_triangles(d), measure_id(name)).values;
  }, py::arg("graph"), py::arg("name"), "Values of an arc measure in arc order.");

  // ---- analysis
  m.def("cut", [](const Graph& g, const std::string& name, double level) {
    const auto result = edge_cut(g, compute_measure(GraphContext(g), measure_id(name)), level);
    py::list comps;
    for (const auto& c : result.components) {
      std::vector<NodeId> parents;
      for (const auto u : c.nodes) parents.push_back(result.cut.to_parent[u]);
      comps.append(py::make_tuple(std::string(shape_name(c.shape)), parents, c.edge_count));
    }
    py::dict d;
    d["retained_edges"] = result.retained_edges;
    d["census"] = census_text(result);
    d["components"] = comps;
    d["graph"] = result.cut.graph;
    d["to_parent"] = result.cut.to_parent;
    return d;
  }, py::arg("graph"), py::arg("name"), py::arg("level"));

  m.def("top", [](const Graph& g, const std::string& name, std::size_t k) {
    const GraphContext ctx(g);
    py::list out;
    for (const auto& r : top_k(g, ctx.triangles, compute_measure(ctx, measure_id(name)), k)) out.append(ranked(r));
    return out;
  }, py::arg("graph"), py::arg("name"), py::arg("k") = 10);

  m.def("top", [](const DiGraph& d, const std::string& name, std::size_t k) {
    py::list out;
    for (const auto& r : top_k(d, compute_measure(d, count_directed_triangles(d), measure_id(name)), k)) out.append(ranked(r));
    return out;
  }, py::arg("graph"), py::arg("name"), py::arg("k") = 10);

  m.def("count_value", [](const Graph& g, const std::string& name, double target, std::optional<std::size_t> min_degree,
                          std::optional<std::size_t> max_degree) {
    DegreeFilter filter;
    if (min_degree || max_degree)
      filter = [=](std::size_t d) { return (!min_degree || d >= *min_degree) && (!max_degree || d <= *max_degree); };
    return count_value(g, compute_measure(GraphContext(g), measure_id(name)), target, filter);
  }, py::arg("graph"), py::arg("name"), py::arg("target"), py::arg("min_degree") = py::none(),
        py::arg("max_degree") = py::none());

  // ---- generators
  auto gen = m.def_submodule("gen", "Graph generators");
  gen.def("complete", &gen::complete, py::arg("n"));
  gen.def("path", &gen::path, py::arg("n"));
  gen.def("cycle", &gen::cycle, py::arg("n"));
  gen.def("star", &gen::star, py::arg("leaves"));
  gen.def("t_pattern", &gen::t_pattern, py::arg("a"), py::arg("t"), py::arg("b"));
  gen.def("random_graph", [](std::int64_t n, double p, std::uint64_t seed) {
    return gen::make({.family = gen::Family::erdos_renyi, .n = n, .p = p, .seed = seed});
  }, py::arg("n"), py::arg("p"), py::arg("seed"));
}
