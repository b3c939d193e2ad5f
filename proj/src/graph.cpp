#include "netdensity/graph.hpp"

#include <algorithm>
#include <numeric>

#include "netdensity/error.hpp"

namespace netdensity {

struct GraphAccess {
  static Graph make(std::size_t n, std::vector<EdgeRef> edges, std::vector<std::string> labels) {
    Graph g;
    g.edges_ = std::move(edges);
    g.labels_ = std::move(labels);

    std::vector<std::size_t> deg(n, 0);
    for (const auto& e : g.edges_) {
      ++deg[e.u];
      ++deg[e.v];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t u = 0; u < n; ++u) g.offsets_[u + 1] = g.offsets_[u] + deg[u];
    g.max_degree_ = n == 0 ? 0 : *std::max_element(deg.begin(), deg.end());

    g.adjacency_.resize(2 * g.edges_.size());
    g.adjacency_edges_.resize(2 * g.edges_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    // Edges are sorted by (u, v), so filling in edge order leaves every
    // adjacency list ascending: for node x, its smaller neighbors arrive as
    // the v-side of edges (w, x) with increasing w before any (x, w').
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
      const auto [u, v] = g.edges_[id];
      g.adjacency_[cursor[u]] = v;
      g.adjacency_edges_[cursor[u]++] = id;
      g.adjacency_[cursor[v]] = u;
      g.adjacency_edges_[cursor[v]++] = id;
    }
    return g;
  }

  static DiGraph make_directed(std::size_t n, std::vector<EdgeRef> arcs,
                               std::vector<std::string> labels) {
    DiGraph d;
    d.arcs_ = std::move(arcs);
    d.labels_ = std::move(labels);

    d.out_offsets_.assign(n + 1, 0);
    d.in_offsets_.assign(n + 1, 0);
    for (const auto& a : d.arcs_) {
      ++d.out_offsets_[a.u + 1];
      ++d.in_offsets_[a.v + 1];
    }
    std::partial_sum(d.out_offsets_.begin(), d.out_offsets_.end(), d.out_offsets_.begin());
    std::partial_sum(d.in_offsets_.begin(), d.in_offsets_.end(), d.in_offsets_.begin());

    d.out_.resize(d.arcs_.size());
    d.in_.resize(d.arcs_.size());
    std::vector<std::size_t> out_cursor(d.out_offsets_.begin(), d.out_offsets_.end() - 1);
    std::vector<std::size_t> in_cursor(d.in_offsets_.begin(), d.in_offsets_.end() - 1);
    for (const auto& a : d.arcs_) {
      d.out_[out_cursor[a.u]++] = a.v;
      d.in_[in_cursor[a.v]++] = a.u;
    }
    return d;
  }
};

namespace {

void check_labels(std::size_t n, const std::vector<std::string>& labels) {
  if (!labels.empty() && labels.size() != n) {
    throw Error("label count " + std::to_string(labels.size()) + " does not match node count " +
                std::to_string(n));
  }
}

void check_pair(std::size_t n, const NodePair& p) {
  if (p.first >= n || p.second >= n) {
    throw Error("node id out of range in pair (" + std::to_string(p.first) + ", " +
                std::to_string(p.second) + "); node count is " + std::to_string(n));
  }
}

/// Sorts and deduplicates, counting the removed duplicates.
std::size_t sort_unique(std::vector<EdgeRef>& refs) {
  std::sort(refs.begin(), refs.end());
  const auto tail = std::unique(refs.begin(), refs.end());
  const auto removed = static_cast<std::size_t>(refs.end() - tail);
  refs.erase(tail, refs.end());
  return removed;
}

}  // namespace

std::string default_label(NodeId u) { return "v" + std::to_string(std::size_t{u} + 1); }

std::span<const NodeId> Graph::neighbors(NodeId u) const {
  const auto begin = offsets_.at(u);
  return {adjacency_.data() + begin, offsets_[u + 1] - begin};
}

std::span<const EdgeId> Graph::incident_edges(NodeId u) const {
  const auto begin = offsets_.at(u);
  return {adjacency_edges_.data() + begin, offsets_[u + 1] - begin};
}

std::size_t Graph::degree(NodeId u) const { return offsets_.at(u + 1) - offsets_.at(u); }

std::optional<EdgeId> Graph::find_edge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return std::nullopt;
  const auto nbrs = neighbors(u);
  const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v);
  if (it == nbrs.end() || *it != v) return std::nullopt;
  return incident_edges(u)[static_cast<std::size_t>(it - nbrs.begin())];
}

std::string Graph::label(NodeId u) const {
  if (u >= node_count()) throw Error("node id " + std::to_string(u) + " out of range");
  return labels_.empty() ? default_label(u) : labels_[u];
}

std::span<const NodeId> DiGraph::out_neighbors(NodeId u) const {
  const auto begin = out_offsets_.at(u);
  return {out_.data() + begin, out_offsets_[u + 1] - begin};
}

std::span<const NodeId> DiGraph::in_neighbors(NodeId u) const {
  const auto begin = in_offsets_.at(u);
  return {in_.data() + begin, in_offsets_[u + 1] - begin};
}

std::optional<EdgeId> DiGraph::find_arc(NodeId u, NodeId v) const {
  const auto it = std::lower_bound(arcs_.begin(), arcs_.end(), EdgeRef{u, v});
  if (it == arcs_.end() || *it != EdgeRef{u, v}) return std::nullopt;
  return static_cast<EdgeId>(it - arcs_.begin());
}

std::string DiGraph::label(NodeId u) const {
  if (u >= node_count()) throw Error("node id " + std::to_string(u) + " out of range");
  return labels_.empty() ? default_label(u) : labels_[u];
}

GraphBuild build_graph(std::size_t n, std::span<const NodePair> pairs,
                       std::vector<std::string> labels) {
  check_labels(n, labels);
  BuildReport report;
  std::vector<EdgeRef> refs;
  refs.reserve(pairs.size());
  for (const auto& p : pairs) {
    check_pair(n, p);
    if (p.first == p.second) {
      ++report.loops_dropped;
      continue;
    }
    refs.push_back({std::min(p.first, p.second), std::max(p.first, p.second)});
  }
  report.duplicates_dropped = sort_unique(refs);
  return {GraphAccess::make(n, std::move(refs), std::move(labels)), report};
}

DiGraphBuild build_digraph(std::size_t n, std::span<const NodePair> pairs,
                           std::vector<std::string> labels) {
  check_labels(n, labels);
  BuildReport report;
  std::vector<EdgeRef> refs;
  refs.reserve(pairs.size());
  for (const auto& p : pairs) {
    check_pair(n, p);
    if (p.first == p.second) {
      ++report.loops_dropped;
      continue;
    }
    refs.push_back({p.first, p.second});
  }
  report.duplicates_dropped = sort_unique(refs);
  return {GraphAccess::make_directed(n, std::move(refs), std::move(labels)), report};
}

Subgraph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  const auto n = g.node_count();
  std::vector<NodeId> selected(nodes.begin(), nodes.end());
  std::sort(selected.begin(), selected.end());
  selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
  if (!selected.empty() && selected.back() >= n) {
    throw Error("node id " + std::to_string(selected.back()) + " out of range; node count is " +
                std::to_string(n));
  }

  constexpr auto absent = static_cast<NodeId>(-1);
  std::vector<NodeId> local(n, absent);
  for (std::size_t i = 0; i < selected.size(); ++i) local[selected[i]] = static_cast<NodeId>(i);

  std::vector<EdgeRef> edges;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    for (const NodeId w : g.neighbors(selected[i])) {
      if (w > selected[i] && local[w] != absent) {
        edges.push_back({static_cast<NodeId>(i), local[w]});
      }
    }
  }
  std::sort(edges.begin(), edges.end());

  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.reserve(selected.size());
    for (const NodeId u : selected) labels.push_back(g.labels()[u]);
  }
  return {GraphAccess::make(selected.size(), std::move(edges), std::move(labels)),
          std::move(selected)};
}

Subgraph edge_neighborhood(const Graph& g, EdgeRef e) {
  if (!g.has_edge(e.u, e.v)) {
    throw Error("(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ") is not an edge");
  }
  std::vector<NodeId> nodes{e.u, e.v};
  const auto nu = g.neighbors(e.u);
  const auto nv = g.neighbors(e.v);
  nodes.insert(nodes.end(), nu.begin(), nu.end());
  nodes.insert(nodes.end(), nv.begin(), nv.end());
  return induced_subgraph(g, nodes);
}

}  // namespace netdensity
