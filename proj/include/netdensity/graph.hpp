#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netdensity {

using NodeId = std::uint32_t;
using EdgeId = std::size_t;
using NodePair = std::pair<NodeId, NodeId>;

/// Edge identity. Undirected edges are stored with u < v; arcs keep their
/// orientation u -> v.
struct EdgeRef {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Normalization counts reported by the graph builders.
struct BuildReport {
  std::size_t loops_dropped = 0;
  std::size_t duplicates_dropped = 0;
};

/// Label shown for a node without an explicit label: "v<id>" with the 1-based
/// Pajek id.
std::string default_label(NodeId u);

/// Immutable undirected simple graph.
///
/// Nodes are 0..n-1. Each adjacency list is strictly ascending and carries a
/// parallel list of edge ids, so neighbor intersection is a linear merge and
/// star sums need no lookups. Edges are kept in lexicographic (u, v) order
/// with u < v; an edge's id is its position in `edges()`.
class Graph {
 public:
  Graph() = default;

  std::size_t node_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const NodeId> neighbors(NodeId u) const;
  /// Ids of the edges incident to `u`, parallel to `neighbors(u)`.
  std::span<const EdgeId> incident_edges(NodeId u) const;

  std::size_t degree(NodeId u) const;
  /// Maximum degree; 0 for an edgeless graph.
  std::size_t max_degree() const noexcept { return max_degree_; }

  const std::vector<EdgeRef>& edges() const noexcept { return edges_; }
  const EdgeRef& edge(EdgeId e) const { return edges_.at(e); }
  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;
  bool has_edge(NodeId u, NodeId v) const { return find_edge(u, v).has_value(); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Explicit label, or `default_label(u)` when the graph carries none.
  std::string label(NodeId u) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend struct GraphAccess;

  std::vector<std::size_t> offsets_;
  std::vector<NodeId> adjacency_;
  std::vector<EdgeId> adjacency_edges_;
  std::vector<EdgeRef> edges_;
  std::vector<std::string> labels_;
  std::size_t max_degree_ = 0;
};

/// Immutable directed simple graph without loops. Arcs are ordered pairs kept
/// in lexicographic order; an arc's id is its position in `arcs()`.
class DiGraph {
 public:
  DiGraph() = default;

  std::size_t node_count() const noexcept { return out_offsets_.empty() ? 0 : out_offsets_.size() - 1; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  std::span<const NodeId> out_neighbors(NodeId u) const;
  std::span<const NodeId> in_neighbors(NodeId u) const;
  std::size_t outdeg(NodeId u) const { return out_neighbors(u).size(); }
  std::size_t indeg(NodeId u) const { return in_neighbors(u).size(); }

  const std::vector<EdgeRef>& arcs() const noexcept { return arcs_; }
  std::optional<EdgeId> find_arc(NodeId u, NodeId v) const;
  bool has_arc(NodeId u, NodeId v) const { return find_arc(u, v).has_value(); }

  bool has_labels() const noexcept { return !labels_.empty(); }
  std::string label(NodeId u) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const DiGraph&, const DiGraph&) = default;

 private:
  friend struct GraphAccess;

  std::vector<std::size_t> out_offsets_;
  std::vector<NodeId> out_;
  std::vector<std::size_t> in_offsets_;
  std::vector<NodeId> in_;
  std::vector<EdgeRef> arcs_;
  std::vector<std::string> labels_;
};

struct GraphBuild {
  Graph graph;
  BuildReport report;
};

struct DiGraphBuild {
  DiGraph graph;
  BuildReport report;
};

/// Builds a canonical simple graph. Pairs may be unordered or repeated and may
/// contain loops; loops and duplicates are dropped and counted. `labels` is
/// either empty or has exactly `n` entries.
///
/// Throws `Error` naming the offending pair when an id is >= n.
GraphBuild build_graph(std::size_t n, std::span<const NodePair> pairs,
                       std::vector<std::string> labels = {});

/// Directed counterpart of `build_graph`: (u, v) and (v, u) are distinct arcs.
DiGraphBuild build_digraph(std::size_t n, std::span<const NodePair> pairs,
                           std::vector<std::string> labels = {});

/// A subgraph together with the parent id of each of its nodes.
struct Subgraph {
  Graph graph;
  std::vector<NodeId> to_parent;
};

/// Subgraph induced by `nodes` (duplicates ignored). Node i of the result is
/// the i-th smallest selected parent node; labels are carried over.
Subgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);

/// Induced subgraph on {u, v} + N(u) + N(v). Throws `Error` if `e` is not an
/// edge of `g`.
Subgraph edge_neighborhood(const Graph& g, EdgeRef e);

}  // namespace netdensity
