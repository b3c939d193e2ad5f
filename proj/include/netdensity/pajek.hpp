#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "netdensity/graph.hpp"
#include "netdensity/measures.hpp"
#include "netdensity/triangles.hpp"

namespace netdensity::pajek {

/// What the parser saw and normalized away.
struct NetDiagnostics {
  std::size_t declared_vertices = 0;
  std::size_t vertex_records = 0;
  std::size_t edge_records = 0;
  std::size_t arc_records = 0;
  std::size_t weights_discarded = 0;
  std::size_t comment_lines = 0;
  BuildReport normalization;
  /// Keyword of the section that ended parsing, e.g. "*Partition"; empty when
  /// parsing ran to the end of the text.
  std::string stopped_at;
};

struct ParsedNet {
  std::variant<Graph, DiGraph> network;
  NetDiagnostics diagnostics;

  bool is_directed() const noexcept { return std::holds_alternative<DiGraph>(network); }
  const Graph& graph() const { return std::get<Graph>(network); }
  const DiGraph& digraph() const { return std::get<DiGraph>(network); }
};

/// Parses the Pajek .net dialect described in docs/formats.md. A network with
/// at least one arc record becomes a DiGraph (edge records then contribute
/// both orientations); otherwise it is a Graph. Throws `ParseError` carrying
/// the offending line number.
ParsedNet parse_net(std::string_view text);

/// Reads and parses a file; I/O failures throw `Error`.
ParsedNet read_net_file(const std::filesystem::path& path);

/// Text that `parse_net` maps back to an equal graph. Labels containing a
/// double quote are written with the quote replaced by an apostrophe.
std::string write_net(const Graph& g);
std::string write_net(const DiGraph& d);

/// "*Vertices n" followed by one shortest round-trip decimal per node.
/// Throws `Error` if `values.size() != node_count`.
std::string write_vec(std::size_t node_count, std::span<const double> values);

/// Fixed notation with 5 decimals, as used in every CSV column of measures.
std::string format_fixed5(double value);
/// Shortest text that reads back to the same double.
std::string format_shortest(double value);
/// Double-quoted CSV field with embedded quotes doubled.
std::string csv_quote(std::string_view field);

/// Header `u,v,t,m,M,<measure...>`, one row per edge in canonical order.
std::string write_edge_csv(const Graph& g, const EdgeTriangleTable& triangles,
                           std::span<const MeasureTable> measures);

/// Header `label,deg,E,<measure...>`, one row per node.
std::string write_node_csv(const Graph& g, std::span<const std::uint64_t> neighborhood_edges,
                           std::span<const MeasureTable> measures);

/// Header `u,v,t_t,t_c,<measure...>`, one row per arc.
std::string write_arc_csv(const DiGraph& d, const DirectedTriangleTable& triangles,
                          std::span<const MeasureTable> measures);

}  // namespace netdensity::pajek
