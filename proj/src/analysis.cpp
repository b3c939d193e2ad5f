#include "netdensity/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "netdensity/error.hpp"

namespace netdensity {
namespace {

constexpr double kValueTolerance = 1e-9;

std::string plural(std::size_t count, std::string_view singular) {
  return std::to_string(count) + " " + std::string(singular) + (count == 1 ? "" : "s");
}

void check_table(const MeasureTable& table, ElementKind kind, std::size_t expected) {
  if (table.kind != kind || table.size() != expected) {
    throw Error("measure " + std::string(measure_name(table.id)) + " is not keyed by this graph's elements");
  }
}

std::size_t table_domain(const Graph& g, const MeasureTable& table) {
  switch (table.kind) {
    case ElementKind::edge: return g.edge_count();
    case ElementKind::node: return g.node_count();
    case ElementKind::arc: break;
  }
  throw Error("arc measure " + std::string(measure_name(table.id)) + " needs a directed network");
}

}  // namespace

std::string_view shape_name(ComponentShape shape) {
  switch (shape) {
    case ComponentShape::isolated_edge: return "isolated_edge";
    case ComponentShape::path: return "path";
    case ComponentShape::cycle: return "cycle";
    case ComponentShape::triangle: return "triangle";
    case ComponentShape::clique: return "clique";
    case ComponentShape::other: return "other";
  }
  return "?";
}

ComponentShape classify_component(std::size_t nodes, std::size_t edges, std::span<const std::size_t> degrees) {
  const auto max_deg = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
  if (nodes == 2 && edges == 1) return ComponentShape::isolated_edge;
  if (nodes == 3 && edges == 3) return ComponentShape::triangle;
  if (nodes >= 3 && edges + 1 == nodes && max_deg <= 2) return ComponentShape::path;
  if (nodes >= 4 && edges == nodes && std::all_of(degrees.begin(), degrees.end(), [](auto d) { return d == 2; })) {
    return ComponentShape::cycle;
  }
  if (nodes >= 4 && edges == nodes * (nodes - 1) / 2) return ComponentShape::clique;
  return ComponentShape::other;
}

CutResult edge_cut(const Graph& g, const MeasureTable& measure, double level) {
  check_table(measure, ElementKind::edge, g.edge_count());
  CutResult result;
  result.level = level;

  std::vector<NodePair> kept_pairs;
  std::vector<NodeId> kept_nodes;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (measure.values[e] >= level) {
      result.retained_edges.push_back(e);
      kept_nodes.push_back(g.edge(e).u);
      kept_nodes.push_back(g.edge(e).v);
    }
  }
  std::sort(kept_nodes.begin(), kept_nodes.end());
  kept_nodes.erase(std::unique(kept_nodes.begin(), kept_nodes.end()), kept_nodes.end());

  // Local ids follow ascending parent ids, as in induced_subgraph.
  auto local = [&](NodeId parent) {
    return static_cast<NodeId>(std::lower_bound(kept_nodes.begin(), kept_nodes.end(), parent) - kept_nodes.begin());
  };
  for (const EdgeId e : result.retained_edges) kept_pairs.emplace_back(local(g.edge(e).u), local(g.edge(e).v));

  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (const NodeId u : kept_nodes) labels.push_back(g.labels()[u]);
  }
  result.cut.graph = build_graph(kept_nodes.size(), kept_pairs, std::move(labels)).graph;
  result.cut.to_parent = std::move(kept_nodes);

  const Graph& cut = result.cut.graph;
  std::vector<bool> seen(cut.node_count(), false);
  for (NodeId start = 0; start < cut.node_count(); ++start) {
    if (seen[start]) continue;
    Component comp;
    std::vector<NodeId> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      comp.nodes.push_back(u);
      for (const NodeId w : cut.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.nodes.begin(), comp.nodes.end());
    std::vector<std::size_t> degrees;
    for (const NodeId u : comp.nodes) degrees.push_back(cut.degree(u));
    comp.edge_count = std::accumulate(degrees.begin(), degrees.end(), std::size_t{0}) / 2;
    comp.shape = classify_component(comp.nodes.size(), comp.edge_count, degrees);
    result.components.push_back(std::move(comp));
  }
  return result;
}

std::string census_text(const CutResult& cut) {
  if (cut.components.empty()) return "empty cut";
  std::map<std::size_t, std::size_t, std::greater<>> cliques;
  std::map<std::size_t, std::size_t> cycles;
  std::map<std::size_t, std::size_t> paths;
  std::map<std::size_t, std::size_t> others;
  std::size_t triangles = 0;
  std::size_t isolated = 0;
  for (const auto& c : cut.components) {
    switch (c.shape) {
      case ComponentShape::clique: ++cliques[c.nodes.size()]; break;
      case ComponentShape::triangle: ++triangles; break;
      case ComponentShape::cycle: ++cycles[c.nodes.size()]; break;
      case ComponentShape::path: ++paths[c.edge_count]; break;
      case ComponentShape::isolated_edge: ++isolated; break;
      case ComponentShape::other: ++others[c.nodes.size()]; break;
    }
  }
  std::vector<std::string> parts;
  for (const auto& [size, count] : cliques) parts.push_back(std::to_string(count) + " clique(" + std::to_string(size) + ")");
  if (triangles > 0) parts.push_back(plural(triangles, "triangle"));
  for (const auto& [size, count] : cycles) parts.push_back(std::to_string(count) + " cycle(" + std::to_string(size) + ")");
  for (const auto& [len, count] : paths) parts.push_back(std::to_string(count) + " path(" + std::to_string(len) + ")");
  if (isolated > 0) parts.push_back(plural(isolated, "isolated edge"));
  for (const auto& [size, count] : others) {
    parts.push_back(std::to_string(count) + " other(" + std::to_string(size) + " nodes)");
  }
  std::string text;
  for (const auto& p : parts) text += (text.empty() ? "" : ", ") + p;
  return text;
}

std::vector<std::size_t> rank_descending(const MeasureTable& table, std::size_t k) {
  std::vector<std::size_t> order(table.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  k = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (table.values[a] != table.values[b]) return table.values[a] > table.values[b];
                      return a < b;
                    });
  order.resize(k);
  return order;
}

std::vector<RankedRow> top_k(const Graph& g, const EdgeTriangleTable& triangles, const MeasureTable& table,
                             std::size_t k) {
  check_table(table, table.kind, table_domain(g, table));
  std::vector<RankedRow> rows;
  for (const auto index : rank_descending(table, k)) {
    RankedRow row;
    row.rank = rows.size() + 1;
    row.index = index;
    row.value = table.values[index];
    if (table.kind == ElementKind::node) {
      const auto u = static_cast<NodeId>(index);
      row.labels = {g.label(u)};
      row.degrees = {g.degree(u)};
    } else {
      const auto [u, v] = g.edge(index);
      row.labels = {g.label(u), g.label(v)};
      row.degrees = {g.degree(u), g.degree(v)};
      if (index < triangles.rows.size()) row.t = triangles.rows[index].t;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<RankedRow> top_k(const DiGraph& d, const MeasureTable& table, std::size_t k) {
  check_table(table, ElementKind::arc, d.arc_count());
  std::vector<RankedRow> rows;
  for (const auto index : rank_descending(table, k)) {
    const auto [u, v] = d.arcs()[index];
    rows.push_back({.rank = rows.size() + 1,
                    .index = index,
                    .value = table.values[index],
                    .labels = {d.label(u), d.label(v)},
                    .degrees = {d.outdeg(u), d.indeg(v)},
                    .t = std::nullopt});
  }
  return rows;
}

std::size_t count_value(const Graph& g, const MeasureTable& table, double target, const DegreeFilter& filter) {
  check_table(table, table.kind, table_domain(g, table));
  std::size_t count = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (std::abs(table.values[i] - target) > kValueTolerance) continue;
    if (filter) {
      std::size_t degree = 0;
      if (table.kind == ElementKind::node) {
        degree = g.degree(static_cast<NodeId>(i));
      } else {
        degree = std::min(g.degree(g.edge(i).u), g.degree(g.edge(i).v));
      }
      if (!filter(degree)) continue;
    }
    ++count;
  }
  return count;
}

Series series_of(const MeasureTable& table) {
  return {std::string(measure_name(table.id)), table.kind, table.values};
}

Series degree_series(const Graph& g) {
  Series s{"deg", ElementKind::node, {}};
  for (NodeId u = 0; u < g.node_count(); ++u) s.values.push_back(static_cast<double>(g.degree(u)));
  return s;
}

Series min_degree_series(const Graph& g) {
  Series s{"minDeg", ElementKind::edge, {}};
  for (const auto& [u, v] : g.edges()) s.values.push_back(static_cast<double>(std::min(g.degree(u), g.degree(v))));
  return s;
}

ScatterData scatter(const Series& x, const Series& y) {
  if (x.kind != y.kind || x.values.size() != y.values.size()) {
    throw Error("cannot pair " + x.name + " with " + y.name + ": they are keyed by different elements");
  }
  ScatterData data{x.name, y.name, x.kind, {}};
  data.points.reserve(x.values.size());
  for (std::size_t i = 0; i < x.values.size(); ++i) data.points.push_back({i, x.values[i], y.values[i]});
  return data;
}

ScatterData scatter(const MeasureTable& x, const MeasureTable& y) { return scatter(series_of(x), series_of(y)); }

ScatterData degree_pairs(const Graph& g, const MeasureTable& node_table) {
  check_table(node_table, ElementKind::node, g.node_count());
  return scatter(degree_series(g), series_of(node_table));
}

}  // namespace netdensity
