#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "netdensity/graph.hpp"

namespace netdensity {

/// Triangle data of one undirected edge e = (u:v).
struct EdgeTriangles {
  std::size_t t = 0;  ///< common neighbors of u and v
  std::size_t m = 0;  ///< min(deg u, deg v) - 1
  std::size_t M = 0;  ///< max(deg u, deg v) - 1

  friend bool operator==(const EdgeTriangles&, const EdgeTriangles&) = default;
};

/// Per-edge triangle counts, indexed like `Graph::edges()`, with the graph
/// constants mu (largest t over all edges) and delta (maximum degree). Both
/// are 0 on an edgeless graph.
struct EdgeTriangleTable {
  std::vector<EdgeTriangles> rows;
  std::size_t mu = 0;
  std::size_t delta = 0;

  friend bool operator==(const EdgeTriangleTable&, const EdgeTriangleTable&) = default;
};

/// Transitive and cyclic triangle counts of an arc a = u -> v.
struct ArcTriangles {
  std::size_t transitive = 0;  ///< w with u -> w -> v
  std::size_t cyclic = 0;      ///< w with v -> w -> u

  friend bool operator==(const ArcTriangles&, const ArcTriangles&) = default;
};

/// Indexed like `DiGraph::arcs()`.
struct DirectedTriangleTable {
  std::vector<ArcTriangles> rows;

  friend bool operator==(const DirectedTriangleTable&, const DirectedTriangleTable&) = default;
};

/// Exact t(e) for every edge by merging the sorted neighbor lists of its
/// end nodes.
EdgeTriangleTable count_edge_triangles(const Graph& g);

constexpr std::size_t kDefaultOracleBound = 200;

/// Test oracle: same contract as `count_edge_triangles`, computed by
/// enumerating every node triple i < j < k. Throws `Error` when the graph has
/// more than `max_nodes` nodes.
EdgeTriangleTable brute_force_triangles(const Graph& g,
                                        std::size_t max_nodes = kDefaultOracleBound);

/// E(u), the number of edges among the neighbors of u, as half the sum of
/// t(e) over the edges incident to u. Throws `InvariantError` if a star sum is
/// odd, which means `table` does not belong to `g`.
std::vector<std::uint64_t> node_neighborhood_edges(const Graph& g, const EdgeTriangleTable& table);

/// Sum of t(e) over all edges divided by three.
std::uint64_t total_triangles(const EdgeTriangleTable& table);

DirectedTriangleTable count_directed_triangles(const DiGraph& d);

}  // namespace netdensity
