#include "netdensity/measures.hpp"

#include <array>
#include <string>

#include "netdensity/error.hpp"

namespace netdensity {
namespace {

constexpr std::array kAllMeasures{
    MeasureId::t_raw,         MeasureId::t_over_n2,          MeasureId::t_over_mu,
    MeasureId::overlap,       MeasureId::overlap_corrected,  MeasureId::overlap_delta,
    MeasureId::overlap_index, MeasureId::jaccard,            MeasureId::hamming,
    MeasureId::overlap_transitive, MeasureId::overlap_cyclic, MeasureId::cc,
    MeasureId::cc_corrected,  MeasureId::cc_delta,
};

double ratio(double num, double den) { return num == 0.0 || den == 0.0 ? 0.0 : num / den; }

MeasureTable make_table(MeasureId id, std::size_t size, Provenance provenance) {
  MeasureTable table{.id = id, .kind = measure_kind(id), .values = {}, .provenance = provenance};
  table.values.reserve(size);
  return table;
}

Provenance provenance_of(const Graph& g, const EdgeTriangleTable& table) {
  return {.n = g.node_count(), .mu = table.mu, .delta = table.delta};
}

void check_rows(const Graph& g, const EdgeTriangleTable& table) {
  if (table.rows.size() != g.edge_count()) {
    throw Error("triangle table has " + std::to_string(table.rows.size()) + " rows for " +
                std::to_string(g.edge_count()) + " edges");
  }
}

void check_nodes(const Graph& g, std::span<const std::uint64_t> neighborhood_edges) {
  if (neighborhood_edges.size() != g.node_count()) {
    throw Error("E(u) vector has " + std::to_string(neighborhood_edges.size()) + " entries for " +
                std::to_string(g.node_count()) + " nodes");
  }
}

/// t / (k + M - t) for every edge, with the first term k held constant.
MeasureTable corrected_overlap(MeasureId id, const Graph& g, const EdgeTriangleTable& table,
                               std::size_t k) {
  check_rows(g, table);
  auto out = make_table(id, table.rows.size(), provenance_of(g, table));
  for (const auto& r : table.rows) {
    const auto den = static_cast<double>(k + r.M) - static_cast<double>(r.t);
    out.values.push_back(ratio(static_cast<double>(r.t), den));
  }
  return out;
}

/// 2 E(u) / (k deg u) for every node.
MeasureTable corrected_cc(MeasureId id, const Graph& g, std::span<const std::uint64_t> neighborhood_edges,
                          Provenance provenance, std::size_t k) {
  check_nodes(g, neighborhood_edges);
  auto out = make_table(id, g.node_count(), provenance);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto num = 2.0 * static_cast<double>(neighborhood_edges[u]);
    out.values.push_back(ratio(num, static_cast<double>(k) * static_cast<double>(g.degree(u))));
  }
  return out;
}

}  // namespace

std::span<const MeasureId> all_measures() { return kAllMeasures; }

std::string_view measure_name(MeasureId id) {
  switch (id) {
    case MeasureId::t_raw: return "t_raw";
    case MeasureId::t_over_n2: return "t_over_n2";
    case MeasureId::t_over_mu: return "t_over_mu";
    case MeasureId::overlap: return "overlap";
    case MeasureId::overlap_corrected: return "overlap_corrected";
    case MeasureId::overlap_delta: return "overlap_delta";
    case MeasureId::overlap_index: return "overlap_index";
    case MeasureId::jaccard: return "jaccard";
    case MeasureId::hamming: return "hamming";
    case MeasureId::overlap_transitive: return "overlap_transitive";
    case MeasureId::overlap_cyclic: return "overlap_cyclic";
    case MeasureId::cc: return "cc";
    case MeasureId::cc_corrected: return "cc_corrected";
    case MeasureId::cc_delta: return "cc_delta";
  }
  return "?";
}

std::optional<MeasureId> parse_measure(std::string_view name) {
  for (const auto id : kAllMeasures) {
    if (measure_name(id) == name) return id;
  }
  return std::nullopt;
}

ElementKind measure_kind(MeasureId id) {
  switch (id) {
    case MeasureId::overlap_transitive:
    case MeasureId::overlap_cyclic:
      return ElementKind::arc;
    case MeasureId::cc:
    case MeasureId::cc_corrected:
    case MeasureId::cc_delta:
      return ElementKind::node;
    default:
      return ElementKind::edge;
  }
}

bool is_normalized(MeasureId id) { return id != MeasureId::t_raw; }

MeasureTable triangle_counts(const Graph& g, const EdgeTriangleTable& table) {
  check_rows(g, table);
  auto out = make_table(MeasureId::t_raw, table.rows.size(), provenance_of(g, table));
  for (const auto& r : table.rows) out.values.push_back(static_cast<double>(r.t));
  return out;
}

SimpleNormalizations simple_normalizations(const EdgeTriangleTable& table, std::size_t n) {
  const Provenance prov{.n = n, .mu = table.mu, .delta = table.delta};
  SimpleNormalizations out{make_table(MeasureId::t_over_n2, table.rows.size(), prov),
                           make_table(MeasureId::t_over_mu, table.rows.size(), prov)};
  const double n2 = n >= 3 ? static_cast<double>(n - 2) : 0.0;
  for (const auto& r : table.rows) {
    const auto t = static_cast<double>(r.t);
    out.over_n2.values.push_back(ratio(t, n2));
    out.over_mu.values.push_back(ratio(t, static_cast<double>(table.mu)));
  }
  return out;
}

MeasureTable overlap(const Graph& g, const EdgeTriangleTable& table) {
  check_rows(g, table);
  auto out = make_table(MeasureId::overlap, table.rows.size(), provenance_of(g, table));
  for (const auto& r : table.rows) {
    const auto den = static_cast<double>(r.m + r.M) - static_cast<double>(r.t);
    out.values.push_back(ratio(static_cast<double>(r.t), den));
  }
  return out;
}

MeasureTable overlap_corrected(const Graph& g, const EdgeTriangleTable& table) {
  return corrected_overlap(MeasureId::overlap_corrected, g, table, table.mu);
}

MeasureTable overlap_corrected_at(const Graph& g, const EdgeTriangleTable& table, std::size_t mu) {
  auto out = corrected_overlap(MeasureId::overlap_corrected, g, table, mu);
  out.provenance.mu = mu;
  return out;
}

MeasureTable overlap_index(const Graph& g, const EdgeTriangleTable& table) {
  check_rows(g, table);
  auto out = make_table(MeasureId::overlap_index, table.rows.size(), provenance_of(g, table));
  for (const auto& r : table.rows) {
    out.values.push_back(ratio(static_cast<double>(r.t), static_cast<double>(r.M)));
  }
  return out;
}

JaccardHamming jaccard_and_hamming(const Graph& g, const EdgeTriangleTable& table) {
  check_rows(g, table);
  const auto prov = provenance_of(g, table);
  JaccardHamming out{make_table(MeasureId::jaccard, table.rows.size(), prov),
                     make_table(MeasureId::hamming, table.rows.size(), prov)};
  for (const auto& r : table.rows) {
    // |X| = m, |Y| = M (in some order), |X & Y| = t
    const auto union_size = r.m + r.M - r.t;
    const double j = ratio(static_cast<double>(r.t), static_cast<double>(union_size));
    out.jaccard.values.push_back(j);
    out.hamming.values.push_back(union_size == 0 ? 0.0 : 1.0 - j);
  }
  return out;
}

DirectedOverlaps overlap_directed(const DiGraph& d, const DirectedTriangleTable& table) {
  if (table.rows.size() != d.arc_count()) {
    throw Error("directed triangle table has " + std::to_string(table.rows.size()) + " rows for " +
                std::to_string(d.arc_count()) + " arcs");
  }
  const Provenance prov{.n = d.node_count()};
  DirectedOverlaps out{make_table(MeasureId::overlap_transitive, d.arc_count(), prov),
                       make_table(MeasureId::overlap_cyclic, d.arc_count(), prov)};
  for (EdgeId a = 0; a < d.arc_count(); ++a) {
    const auto [u, v] = d.arcs()[a];
    const auto& r = table.rows[a];
    // outdeg(u) >= 1 and indeg(v) >= 1 because of the arc itself
    const auto tt_den = static_cast<double>((d.outdeg(u) - 1) + (d.indeg(v) - 1)) -
                        static_cast<double>(r.transitive);
    const auto tc_den = static_cast<double>(d.indeg(u) + d.outdeg(v)) - static_cast<double>(r.cyclic);
    out.transitive.values.push_back(ratio(static_cast<double>(r.transitive), tt_den));
    out.cyclic.values.push_back(ratio(static_cast<double>(r.cyclic), tc_den));
  }
  return out;
}

MeasureTable clustering_coefficient(const Graph& g, std::span<const std::uint64_t> neighborhood_edges) {
  check_nodes(g, neighborhood_edges);
  auto out = make_table(MeasureId::cc, g.node_count(), {.n = g.node_count(), .delta = g.max_degree()});
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto d = static_cast<double>(g.degree(u));
    const double den = g.degree(u) <= 1 ? 0.0 : d * (d - 1.0);
    out.values.push_back(ratio(2.0 * static_cast<double>(neighborhood_edges[u]), den));
  }
  return out;
}

MeasureTable clustering_coefficient_corrected(const Graph& g,
                                              std::span<const std::uint64_t> neighborhood_edges,
                                              std::size_t mu) {
  return corrected_cc(MeasureId::cc_corrected, g, neighborhood_edges,
                      {.n = g.node_count(), .mu = mu, .delta = g.max_degree()}, mu);
}

DeltaVariants delta_variants(const Graph& g, const EdgeTriangleTable& table,
                             std::span<const std::uint64_t> neighborhood_edges) {
  return {corrected_overlap(MeasureId::overlap_delta, g, table, table.delta),
          corrected_cc(MeasureId::cc_delta, g, neighborhood_edges, provenance_of(g, table), table.delta)};
}

GraphContext::GraphContext(const Graph& g)
    : graph(&g), triangles(count_edge_triangles(g)), neighborhood_edges(node_neighborhood_edges(g, triangles)) {}

MeasureTable compute_measure(const GraphContext& ctx, MeasureId id) {
  const Graph& g = *ctx.graph;
  const auto& tri = ctx.triangles;
  const auto& e = ctx.neighborhood_edges;
  switch (id) {
    case MeasureId::t_raw: return triangle_counts(g, tri);
    case MeasureId::t_over_n2: return simple_normalizations(tri, g.node_count()).over_n2;
    case MeasureId::t_over_mu: return simple_normalizations(tri, g.node_count()).over_mu;
    case MeasureId::overlap: return overlap(g, tri);
    case MeasureId::overlap_corrected: return overlap_corrected(g, tri);
    case MeasureId::overlap_delta: return delta_variants(g, tri, e).overlap;
    case MeasureId::overlap_index: return overlap_index(g, tri);
    case MeasureId::jaccard: return jaccard_and_hamming(g, tri).jaccard;
    case MeasureId::hamming: return jaccard_and_hamming(g, tri).hamming;
    case MeasureId::cc: return clustering_coefficient(g, e);
    case MeasureId::cc_corrected: return clustering_coefficient_corrected(g, e, tri.mu);
    case MeasureId::cc_delta: return delta_variants(g, tri, e).cc;
    case MeasureId::overlap_transitive:
    case MeasureId::overlap_cyclic:
      break;
  }
  throw Error(std::string(measure_name(id)) + " is an arc measure and needs a directed network");
}

MeasureTable compute_measure(const DiGraph& d, const DirectedTriangleTable& table, MeasureId id) {
  switch (id) {
    case MeasureId::overlap_transitive: return overlap_directed(d, table).transitive;
    case MeasureId::overlap_cyclic: return overlap_directed(d, table).cyclic;
    default:
      throw Error(std::string(measure_name(id)) + " is not defined on directed networks");
  }
}

}  // namespace netdensity
