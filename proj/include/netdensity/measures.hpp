#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "netdensity/graph.hpp"
#include "netdensity/triangles.hpp"

namespace netdensity {

/// What a measure table is keyed by.
enum class ElementKind { edge, node, arc };

enum class MeasureId {
  t_raw,
  t_over_n2,
  t_over_mu,
  overlap,
  overlap_corrected,
  overlap_delta,
  overlap_index,
  jaccard,
  hamming,
  overlap_transitive,
  overlap_cyclic,
  cc,
  cc_corrected,
  cc_delta,
};

/// Every measure, in declaration order.
std::span<const MeasureId> all_measures();

/// Stable CLI/CSV token, e.g. "overlap_corrected".
std::string_view measure_name(MeasureId id);
std::optional<MeasureId> parse_measure(std::string_view name);
ElementKind measure_kind(MeasureId id);
/// True for every measure except t_raw.
bool is_normalized(MeasureId id);

/// Graph-level constants a table was computed with.
struct Provenance {
  std::size_t n = 0;
  std::size_t mu = 0;
  std::size_t delta = 0;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

/// One value per edge (in `Graph::edges()` order), node (by id) or arc (in
/// `DiGraph::arcs()` order).
struct MeasureTable {
  MeasureId id = MeasureId::t_raw;
  ElementKind kind = ElementKind::edge;
  std::vector<double> values;
  Provenance provenance;

  std::size_t size() const noexcept { return values.size(); }
};

// Every 0/0 and x/0 case below yields 0.

/// t(e) as a real number.
MeasureTable triangle_counts(const Graph& g, const EdgeTriangleTable& table);

/// t(e) / (n - 2) and t(e) / mu.
struct SimpleNormalizations {
  MeasureTable over_n2;
  MeasureTable over_mu;
};
SimpleNormalizations simple_normalizations(const EdgeTriangleTable& table, std::size_t n);

/// o(e) = t / (m + M - t).
MeasureTable overlap(const Graph& g, const EdgeTriangleTable& table);

/// o'(e) = t / (mu + M - t).
MeasureTable overlap_corrected(const Graph& g, const EdgeTriangleTable& table);

/// Same as `overlap_corrected` with mu replaced by an arbitrary constant.
/// Used to evaluate the measure at a pinned mu.
MeasureTable overlap_corrected_at(const Graph& g, const EdgeTriangleTable& table, std::size_t mu);

/// O(e) = t / M.
MeasureTable overlap_index(const Graph& g, const EdgeTriangleTable& table);

/// Jaccard similarity of N(u)\{v} and N(v)\{u}, and the normalized Hamming
/// distance 1 - J. For an isolated edge both sets are empty and h is 0.
struct JaccardHamming {
  MeasureTable jaccard;
  MeasureTable hamming;
};
JaccardHamming jaccard_and_hamming(const Graph& g, const EdgeTriangleTable& table);

/// o_t(a) = t_t / ((outdeg u - 1) + (indeg v - 1) - t_t) and
/// o_c(a) = t_c / (indeg u + outdeg v - t_c).
struct DirectedOverlaps {
  MeasureTable transitive;
  MeasureTable cyclic;
};
DirectedOverlaps overlap_directed(const DiGraph& d, const DirectedTriangleTable& table);

/// cc(u) = 2 E(u) / (deg u (deg u - 1)); 0 when deg u <= 1.
MeasureTable clustering_coefficient(const Graph& g, std::span<const std::uint64_t> neighborhood_edges);

/// cc'(u) = 2 E(u) / (mu deg u).
MeasureTable clustering_coefficient_corrected(const Graph& g,
                                              std::span<const std::uint64_t> neighborhood_edges,
                                              std::size_t mu);

/// The corrected measures with mu replaced by the maximum degree:
/// t / (delta + M - t) per edge and 2 E(u) / (delta deg u) per node.
struct DeltaVariants {
  MeasureTable overlap;
  MeasureTable cc;
};
DeltaVariants delta_variants(const Graph& g, const EdgeTriangleTable& table,
                             std::span<const std::uint64_t> neighborhood_edges);

/// Everything needed to evaluate any undirected measure on one graph.
struct GraphContext {
  const Graph* graph = nullptr;
  EdgeTriangleTable triangles;
  std::vector<std::uint64_t> neighborhood_edges;

  explicit GraphContext(const Graph& g);
};

/// Computes an edge or node measure by id. Throws `Error` for arc measures.
MeasureTable compute_measure(const GraphContext& ctx, MeasureId id);

/// Computes an arc measure by id. Throws `Error` for edge or node measures.
MeasureTable compute_measure(const DiGraph& d, const DirectedTriangleTable& table, MeasureId id);

}  // namespace netdensity
