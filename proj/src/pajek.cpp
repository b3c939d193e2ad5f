#include "netdensity/pajek.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "netdensity/error.hpp"

namespace netdensity::pajek {
namespace {

constexpr bool is_space(char c) { return c == ' ' || c == '\t' || c == '\f' || c == '\v'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (is_space(s.front()) || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (is_space(s.back()) || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

/// Splits off the next whitespace-delimited token.
std::string_view next_token(std::string_view& rest) {
  rest = trim(rest);
  std::size_t end = 0;
  while (end < rest.size() && !is_space(rest[end])) ++end;
  const auto token = rest.substr(0, end);
  rest.remove_prefix(end);
  return token;
}

std::optional<std::size_t> to_size(std::string_view token) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

bool is_number(std::string_view token) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

enum class Section { none, vertices, edges, arcs };

class NetParser {
 public:
  explicit NetParser(std::string_view text) : text_(text) {}

  ParsedNet run() {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      const auto nl = text_.find('\n', pos);
      const auto raw = text_.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      pos = nl == std::string_view::npos ? text_.size() + 1 : nl + 1;
      ++line_no;
      if (!handle_line(trim(raw), line_no)) break;
    }
    if (!header_seen_) throw ParseError(0, "missing *Vertices header");
    return finish();
  }

 private:
  /// Returns false when parsing should stop.
  bool handle_line(std::string_view line, std::size_t line_no) {
    if (line.empty()) return true;
    if (line.front() == '%') {
      ++diag_.comment_lines;
      return true;
    }
    if (line.front() == '*') return handle_keyword(line, line_no);
    switch (section_) {
      case Section::none:
        throw ParseError(line_no, "data line before *Vertices header");
      case Section::vertices:
        vertex_line(line, line_no);
        break;
      case Section::edges:
      case Section::arcs:
        link_line(line, line_no);
        break;
    }
    return true;
  }

  bool handle_keyword(std::string_view line, std::size_t line_no) {
    auto rest = line;
    const auto keyword = next_token(rest);
    const auto key = lower(keyword);
    if (key == "*vertices" && !header_seen_) {
      const auto count = to_size(next_token(rest));
      if (!count) throw ParseError(line_no, "*Vertices needs a non-negative node count");
      const auto second = next_token(rest);  // two-mode networks: ignored
      if ((!second.empty() && !to_size(second)) || !trim(rest).empty()) {
        throw ParseError(line_no, "malformed *Vertices header");
      }
      n_ = *count;
      diag_.declared_vertices = n_;
      labels_.assign(n_, std::string{});
      header_seen_ = true;
      section_ = Section::vertices;
      return true;
    }
    if (key == "*network" && !header_seen_) return true;
    if (!header_seen_) throw ParseError(line_no, "expected *Vertices header, found " + std::string(keyword));
    if (key == "*edges") {
      section_ = Section::edges;
      return true;
    }
    if (key == "*arcs") {
      section_ = Section::arcs;
      return true;
    }
    diag_.stopped_at = std::string(keyword);
    return false;
  }

  NodeId node_id(std::string_view token, std::size_t line_no) const {
    const auto id = to_size(token);
    if (!id) throw ParseError(line_no, "expected a vertex id, found '" + std::string(token) + "'");
    if (*id < 1 || *id > n_) {
      throw ParseError(line_no, "vertex id " + std::string(token) + " outside [1, " + std::to_string(n_) + "]");
    }
    return static_cast<NodeId>(*id - 1);
  }

  void vertex_line(std::string_view line, std::size_t line_no) {
    auto rest = line;
    const auto u = node_id(next_token(rest), line_no);
    if (seen_vertex_.empty()) seen_vertex_.assign(n_, false);
    if (seen_vertex_[u]) throw ParseError(line_no, "duplicate record for vertex " + std::to_string(u + 1));
    seen_vertex_[u] = true;
    ++diag_.vertex_records;

    rest = trim(rest);
    if (rest.empty()) return;
    if (rest.front() == '"') {
      const auto close = rest.find('"', 1);
      if (close == std::string_view::npos) throw ParseError(line_no, "unterminated vertex label");
      labels_[u] = std::string(rest.substr(1, close - 1));
    } else {
      labels_[u] = std::string(next_token(rest));
    }
    // coordinates and drawing attributes are ignored
  }

  void link_line(std::string_view line, std::size_t line_no) {
    auto rest = line;
    const auto first = next_token(rest);
    const auto second = next_token(rest);
    if (second.empty()) throw ParseError(line_no, "expected 'u v [weight]'");
    const auto u = node_id(first, line_no);
    const auto v = node_id(second, line_no);
    const auto weight = next_token(rest);
    if (!weight.empty()) {
      if (!is_number(weight)) throw ParseError(line_no, "malformed weight '" + std::string(weight) + "'");
      ++diag_.weights_discarded;
    }
    if (section_ == Section::edges) {
      ++diag_.edge_records;
      edges_.emplace_back(u, v);
    } else {
      ++diag_.arc_records;
      arcs_.emplace_back(u, v);
    }
  }

  ParsedNet finish() {
    for (NodeId u = 0; u < n_; ++u) {
      if (labels_[u].empty()) labels_[u] = default_label(u);
    }
    if (arcs_.empty()) {
      auto built = build_graph(n_, edges_, std::move(labels_));
      diag_.normalization = built.report;
      return {std::move(built.graph), std::move(diag_)};
    }
    std::vector<NodePair> pairs = std::move(arcs_);
    for (const auto& [u, v] : edges_) {
      pairs.emplace_back(u, v);
      pairs.emplace_back(v, u);
    }
    auto built = build_digraph(n_, pairs, std::move(labels_));
    diag_.normalization = built.report;
    return {std::move(built.graph), std::move(diag_)};
  }

  std::string_view text_;
  Section section_ = Section::none;
  bool header_seen_ = false;
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<bool> seen_vertex_;
  std::vector<NodePair> edges_;
  std::vector<NodePair> arcs_;
  NetDiagnostics diag_;
};

std::string quoted_label(std::string label) {
  std::replace(label.begin(), label.end(), '"', '\'');
  return '"' + label + '"';
}

template <typename G>
void write_vertices(std::ostringstream& out, const G& g) {
  out << "*Vertices " << g.node_count() << '\n';
  for (NodeId u = 0; u < g.node_count(); ++u) out << (u + 1) << ' ' << quoted_label(g.label(u)) << '\n';
}

void write_links(std::ostringstream& out, std::string_view header, const std::vector<EdgeRef>& links) {
  out << header << '\n';
  for (const auto& [u, v] : links) out << (u + 1) << ' ' << (v + 1) << '\n';
}

void check_measures(std::span<const MeasureTable> measures, ElementKind kind, std::size_t count) {
  for (const auto& m : measures) {
    if (m.kind != kind || m.size() != count) {
      throw Error("measure " + std::string(measure_name(m.id)) + " does not match the table's elements");
    }
  }
}

void append_header(std::string& out, std::span<const MeasureTable> measures) {
  for (const auto& m : measures) {
    out += ',';
    out += measure_name(m.id);
  }
  out += '\n';
}

void append_values(std::string& out, std::span<const MeasureTable> measures, std::size_t row) {
  for (const auto& m : measures) {
    out += ',';
    out += format_fixed5(m.values[row]);
  }
  out += '\n';
}

}  // namespace

ParsedNet parse_net(std::string_view text) { return NetParser(text).run(); }

ParsedNet read_net_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_net(buffer.str());
}

std::string write_net(const Graph& g) {
  std::ostringstream out;
  write_vertices(out, g);
  if (g.node_count() > 0) write_links(out, "*Edges", g.edges());
  return out.str();
}

std::string write_net(const DiGraph& d) {
  std::ostringstream out;
  write_vertices(out, d);
  if (d.node_count() > 0) write_links(out, "*Arcs", d.arcs());
  return out.str();
}

std::string format_fixed5(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, 5);
  return {buf.data(), ptr};
}

std::string format_shortest(double value) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return {buf.data(), ptr};
}

std::string csv_quote(std::string_view field) {
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string write_vec(std::size_t node_count, std::span<const double> values) {
  if (values.size() != node_count) {
    throw Error("vector has " + std::to_string(values.size()) + " values for " + std::to_string(node_count) +
                " nodes");
  }
  std::string out = "*Vertices " + std::to_string(node_count) + "\n";
  for (const double v : values) {
    out += format_shortest(v);
    out += '\n';
  }
  return out;
}

std::string write_edge_csv(const Graph& g, const EdgeTriangleTable& triangles,
                           std::span<const MeasureTable> measures) {
  if (triangles.rows.size() != g.edge_count()) throw Error("triangle table does not match the graph");
  check_measures(measures, ElementKind::edge, g.edge_count());
  std::string out = "u,v,t,m,M";
  append_header(out, measures);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    const auto& r = triangles.rows[e];
    out += csv_quote(g.label(u)) + ',' + csv_quote(g.label(v)) + ',' + std::to_string(r.t) + ',' +
           std::to_string(r.m) + ',' + std::to_string(r.M);
    append_values(out, measures, e);
  }
  return out;
}

std::string write_node_csv(const Graph& g, std::span<const std::uint64_t> neighborhood_edges,
                           std::span<const MeasureTable> measures) {
  if (neighborhood_edges.size() != g.node_count()) throw Error("E(u) vector does not match the graph");
  check_measures(measures, ElementKind::node, g.node_count());
  std::string out = "label,deg,E";
  append_header(out, measures);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    out += csv_quote(g.label(u)) + ',' + std::to_string(g.degree(u)) + ',' + std::to_string(neighborhood_edges[u]);
    append_values(out, measures, u);
  }
  return out;
}

std::string write_arc_csv(const DiGraph& d, const DirectedTriangleTable& triangles,
                          std::span<const MeasureTable> measures) {
  if (triangles.rows.size() != d.arc_count()) throw Error("directed triangle table does not match the graph");
  check_measures(measures, ElementKind::arc, d.arc_count());
  std::string out = "u,v,t_t,t_c";
  append_header(out, measures);
  for (EdgeId a = 0; a < d.arc_count(); ++a) {
    const auto [u, v] = d.arcs()[a];
    const auto& r = triangles.rows[a];
    out += csv_quote(d.label(u)) + ',' + csv_quote(d.label(v)) + ',' + std::to_string(r.transitive) + ',' +
           std::to_string(r.cyclic);
    append_values(out, measures, a);
  }
  return out;
}

}  // namespace netdensity::pajek
