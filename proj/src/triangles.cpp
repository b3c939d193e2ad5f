#include "netdensity/triangles.hpp"

#include <algorithm>
#include <string>

#include "netdensity/error.hpp"

namespace netdensity {
namespace {

/// Size of the intersection of two ascending ranges.
std::size_t merge_count(std::span<const NodeId> a, std::span<const NodeId> b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

void fill_degree_terms(const Graph& g, EdgeTriangleTable& table) {
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const auto [u, v] = g.edge(id);
    const auto du = g.degree(u);
    const auto dv = g.degree(v);
    auto& row = table.rows[id];
    row.m = std::min(du, dv) - 1;
    row.M = std::max(du, dv) - 1;
    table.mu = std::max(table.mu, row.t);
  }
  table.delta = g.max_degree();
}

}  // namespace

EdgeTriangleTable count_edge_triangles(const Graph& g) {
  EdgeTriangleTable table;
  table.rows.resize(g.edge_count());
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const auto [u, v] = g.edge(id);
    table.rows[id].t = merge_count(g.neighbors(u), g.neighbors(v));
  }
  fill_degree_terms(g, table);
  return table;
}

EdgeTriangleTable brute_force_triangles(const Graph& g, std::size_t max_nodes) {
  const auto n = g.node_count();
  if (n > max_nodes) {
    throw Error("brute-force triangle oracle refused: " + std::to_string(n) +
                " nodes exceeds bound " + std::to_string(max_nodes));
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = true;

  EdgeTriangleTable table;
  table.rows.resize(g.edge_count());
  auto bump = [&](NodeId a, NodeId b) { ++table.rows[*g.find_edge(a, b)].t; };
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (!adj[i][j]) continue;
      for (NodeId k = j + 1; k < n; ++k) {
        if (adj[i][k] && adj[j][k]) {
          bump(i, j);
          bump(i, k);
          bump(j, k);
        }
      }
    }
  }
  fill_degree_terms(g, table);
  return table;
}

std::vector<std::uint64_t> node_neighborhood_edges(const Graph& g, const EdgeTriangleTable& table) {
  if (table.rows.size() != g.edge_count()) {
    throw InvariantError("triangle table has " + std::to_string(table.rows.size()) +
                         " rows for a graph with " + std::to_string(g.edge_count()) + " edges");
  }
  std::vector<std::uint64_t> result(g.node_count(), 0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    std::uint64_t star = 0;
    for (const EdgeId e : g.incident_edges(u)) star += table.rows[e].t;
    if (star % 2 != 0) {
      throw InvariantError("odd triangle sum " + std::to_string(star) + " over the star of node " +
                           std::to_string(u));
    }
    result[u] = star / 2;
  }
  return result;
}

std::uint64_t total_triangles(const EdgeTriangleTable& table) {
  std::uint64_t sum = 0;
  for (const auto& row : table.rows) sum += row.t;
  if (sum % 3 != 0) throw InvariantError("edge triangle sum " + std::to_string(sum) + " is not divisible by 3");
  return sum / 3;
}

DirectedTriangleTable count_directed_triangles(const DiGraph& d) {
  DirectedTriangleTable table;
  table.rows.reserve(d.arc_count());
  for (const auto& [u, v] : d.arcs()) {
    // No loops, so neither v nor u can show up in these intersections.
    table.rows.push_back({
        .transitive = merge_count(d.out_neighbors(u), d.in_neighbors(v)),
        .cyclic = merge_count(d.in_neighbors(u), d.out_neighbors(v)),
    });
  }
  return table;
}

}  // namespace netdensity
