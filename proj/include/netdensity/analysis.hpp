#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "netdensity/graph.hpp"
#include "netdensity/measures.hpp"
#include "netdensity/triangles.hpp"

namespace netdensity {

/// Shape of a connected component of a cut. A 3-node cycle is a triangle,
/// not a cycle or clique; cliques are complete components on 4+ nodes.
enum class ComponentShape { isolated_edge, path, cycle, triangle, clique, other };

std::string_view shape_name(ComponentShape shape);

struct Component {
  ComponentShape shape = ComponentShape::other;
  std::vector<NodeId> nodes;  ///< ids in the cut graph, ascending
  std::size_t edge_count = 0;
};

struct CutResult {
  double level = 0.0;
  std::vector<EdgeId> retained_edges;  ///< parent edge ids, ascending
  Subgraph cut;                        ///< retained nodes and edges only
  std::vector<Component> components;   ///< ordered by smallest member
};

/// Keeps the edges whose value is at least `level` and the nodes incident to
/// them, then classifies every connected component.
CutResult edge_cut(const Graph& g, const MeasureTable& measure, double level);

/// Classifies one connected graph given its node count, edge count and
/// degree sequence.
ComponentShape classify_component(std::size_t nodes, std::size_t edges,
                                  std::span<const std::size_t> degrees);

/// Grouped component counts, e.g. "2 triangles, 1 path(2), 17 isolated edges".
std::string census_text(const CutResult& cut);

/// One row of a ranking. `labels` and `degrees` have one entry for a node
/// and two for an edge or arc; `t` is set for undirected edges.
struct RankedRow {
  std::size_t rank = 0;
  std::size_t index = 0;
  double value = 0.0;
  std::vector<std::string> labels;
  std::vector<std::size_t> degrees;
  std::optional<std::size_t> t;
};

/// Element indices of the k largest values, descending by value with ties
/// in ascending index order.
std::vector<std::size_t> rank_descending(const MeasureTable& table, std::size_t k);

/// Top rows of an edge or node table on an undirected graph.
std::vector<RankedRow> top_k(const Graph& g, const EdgeTriangleTable& triangles, const MeasureTable& table,
                             std::size_t k);
/// Top rows of an arc table.
std::vector<RankedRow> top_k(const DiGraph& d, const MeasureTable& table, std::size_t k);

/// Degree used by `count_value`'s filter: deg(u) for nodes and the smaller
/// end degree for edges.
using DegreeFilter = std::function<bool(std::size_t)>;

/// Number of elements with |value - target| <= 1e-9 whose degree passes the
/// filter.
std::size_t count_value(const Graph& g, const MeasureTable& table, double target,
                        const DegreeFilter& filter = {});

/// A named column of per-element values that can serve as a scatter axis.
struct Series {
  std::string name;
  ElementKind kind = ElementKind::edge;
  std::vector<double> values;
};

Series series_of(const MeasureTable& table);
/// deg(u) per node.
Series degree_series(const Graph& g);
/// min(deg u, deg v) per edge.
Series min_degree_series(const Graph& g);

struct ScatterPoint {
  std::size_t key = 0;
  double x = 0.0;
  double y = 0.0;
};

struct ScatterData {
  std::string x_name;
  std::string y_name;
  ElementKind kind = ElementKind::edge;
  std::vector<ScatterPoint> points;
};

/// Pairs two series over the same elements. Throws `Error` if their kinds
/// or lengths differ.
ScatterData scatter(const Series& x, const Series& y);
ScatterData scatter(const MeasureTable& x, const MeasureTable& y);
/// (deg u, value u) for a node table.
ScatterData degree_pairs(const Graph& g, const MeasureTable& node_table);

}  // namespace netdensity
