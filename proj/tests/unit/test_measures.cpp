#include <cmath>

#include "doctest.h"
#include "netdensity/error.hpp"
#include "netdensity/genkit.hpp"
#include "netdensity/measures.hpp"
#include "support/fleet.hpp"

using namespace netdensity;
using namespace netdensity::testing;

namespace {

constexpr double kTol = 1e-9;

double edge_value(const Graph& g, const MeasureTable& t, NodeId u, NodeId v) { return t.values.at(*g.find_edge(u, v)); }

}  // namespace

TEST_SUITE("measures") {
  TEST_CASE("measure names round trip") {
    for (const auto id : all_measures()) CHECK(parse_measure(measure_name(id)) == id);
    CHECK_FALSE(parse_measure("overlapp").has_value());
    CHECK(all_measures().size() == 14);
    CHECK(measure_kind(MeasureId::cc_delta) == ElementKind::node);
    CHECK(measure_kind(MeasureId::overlap_cyclic) == ElementKind::arc);
    CHECK(measure_kind(MeasureId::hamming) == ElementKind::edge);
  }

  TEST_CASE("simple normalizations") {
    const auto k3 = gen::complete(3);
    const auto table = count_edge_triangles(k3);
    const auto s = simple_normalizations(table, 3);
    for (const double v : s.over_n2.values) CHECK(v == 1.0);
    for (const double v : s.over_mu.values) CHECK(v == 1.0);

    // degenerate cases give zero
    const auto p2 = gen::path(2);
    const auto zero = simple_normalizations(count_edge_triangles(p2), 2);
    CHECK(zero.over_n2.values == std::vector<double>{0.0});
    CHECK(zero.over_mu.values == std::vector<double>{0.0});
  }

  TEST_CASE("overlap examples") {
    const auto k3 = gen::complete(3);
    for (const double v : overlap(k3, count_edge_triangles(k3)).values) CHECK(v == 1.0);
    const auto p3 = gen::path(3);
    for (const double v : overlap(p3, count_edge_triangles(p3)).values) CHECK(v == 0.0);
    const auto p2 = gen::path(2);
    CHECK(overlap(p2, count_edge_triangles(p2)).values == std::vector<double>{0.0});

    // T(4,5,3): X = 9 nodes, Y = 8 nodes, 5 shared, union 12
    const auto t = gen::t_pattern(4, 5, 3);
    const double expected = oracle_jaccard(t, 0, 1);
    CHECK(expected == doctest::Approx(5.0 / 12.0).epsilon(1e-12));
    CHECK(std::abs(edge_value(t, overlap(t, count_edge_triangles(t)), 0, 1) - expected) < kTol);
  }

  TEST_CASE("overlap index examples") {
    const auto k3 = gen::complete(3);
    for (const double v : overlap_index(k3, count_edge_triangles(k3)).values) CHECK(v == 1.0);
    const auto t = gen::t_pattern(4, 5, 3);
    CHECK(std::abs(edge_value(t, overlap_index(t, count_edge_triangles(t)), 0, 1) - 5.0 / 9.0) < kTol);
    const auto p2 = gen::path(2);
    CHECK(overlap_index(p2, count_edge_triangles(p2)).values == std::vector<double>{0.0});
  }

  TEST_CASE("corrected overlap on complete graphs") {
    const auto k4 = gen::complete(4);
    const auto table = count_edge_triangles(k4);
    for (const double v : overlap_corrected(k4, table).values) CHECK(v == 1.0);
    CHECK(overlap_corrected(k4, table).provenance.mu == 2);
    // pinned mu
    for (const double v : overlap_corrected_at(k4, table, 4).values) CHECK(v == doctest::Approx(2.0 / 4.0));
  }

  TEST_CASE("jaccard and hamming") {
    const auto k3 = gen::complete(3);
    const auto jh = jaccard_and_hamming(k3, count_edge_triangles(k3));
    for (const double v : jh.hamming.values) CHECK(v == 0.0);

    const auto p3 = gen::path(3);
    const auto p = jaccard_and_hamming(p3, count_edge_triangles(p3));
    const auto e01 = *p3.find_edge(0, 1);
    CHECK(p.jaccard.values[e01] == 0.0);
    CHECK(p.hamming.values[e01] == 1.0);

    // isolated edge: identical empty neighborhoods
    const auto p2 = gen::path(2);
    const auto iso = jaccard_and_hamming(p2, count_edge_triangles(p2));
    CHECK(iso.jaccard.values[0] == 0.0);
    CHECK(iso.hamming.values[0] == 0.0);
  }

  TEST_CASE("jaccard equals overlap and the set oracle") {
    for (const auto& [name, g] : full_fleet()) {
      CAPTURE(name);
      const auto table = count_edge_triangles(g);
      const auto o = overlap(g, table);
      const auto jh = jaccard_and_hamming(g, table);
      CHECK(jh.jaccard.values == o.values);
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        CHECK(std::abs(o.values[e] - oracle_jaccard(g, g.edge(e).u, g.edge(e).v)) < kTol);
        if (table.rows[e].M > 0) CHECK(jh.hamming.values[e] == 1.0 - jh.jaccard.values[e]);
      }
    }
  }

  TEST_CASE("directed overlaps") {
    const auto transitive = build_digraph(3, std::vector<NodePair>{{0, 1}, {0, 2}, {2, 1}}).graph;
    const auto t = overlap_directed(transitive, count_directed_triangles(transitive));
    CHECK(t.transitive.values[*transitive.find_arc(0, 1)] == 1.0);
    CHECK(t.cyclic.values[*transitive.find_arc(0, 1)] == 0.0);

    const auto cyc = build_digraph(3, std::vector<NodePair>{{0, 1}, {1, 2}, {2, 0}}).graph;
    for (const double v : overlap_directed(cyc, count_directed_triangles(cyc)).cyclic.values) CHECK(v == 1.0);

    const auto single = build_digraph(2, std::vector<NodePair>{{0, 1}}).graph;
    const auto s = overlap_directed(single, count_directed_triangles(single));
    CHECK(s.transitive.values == std::vector<double>{0.0});
    CHECK(s.cyclic.values == std::vector<double>{0.0});
  }

  TEST_CASE("clustering coefficient examples") {
    const auto k4 = gen::complete(4);
    const GraphContext k4ctx(k4);
    for (const double v : clustering_coefficient(k4, k4ctx.neighborhood_edges).values) CHECK(v == 1.0);

    const auto s = gen::star(3);
    const GraphContext sctx(s);
    for (const double v : clustering_coefficient(s, sctx.neighborhood_edges).values) CHECK(v == 0.0);
    for (const double v : clustering_coefficient_corrected(s, sctx.neighborhood_edges, 0).values) CHECK(v == 0.0);
  }

  TEST_CASE("corrected cc is 1 on a standalone K(mu+1)") {
    for (std::size_t n = 3; n <= 12; ++n) {
      const auto k = gen::complete(n);
      const GraphContext ctx(k);
      CHECK(ctx.triangles.mu == n - 2);
      for (const double v : compute_measure(ctx, MeasureId::cc_corrected).values) CHECK(v == 1.0);
    }
  }

  TEST_CASE("cc = 1 iff the neighborhood is complete") {
    for (const auto& [name, g] : full_fleet()) {
      CAPTURE(name);
      const GraphContext ctx(g);
      const auto cc = compute_measure(ctx, MeasureId::cc);
      for (NodeId u = 0; u < g.node_count(); ++u) {
        const auto d = g.degree(u);
        const bool complete = d >= 2 && oracle_edges_among(g, neighbor_set(g, u)) == d * (d - 1) / 2;
        CHECK((cc.values[u] == 1.0) == complete);
      }
    }
  }

  TEST_CASE("delta variants on K4") {
    const auto k4 = gen::complete(4);
    const GraphContext ctx(k4);
    const auto dv = delta_variants(k4, ctx.triangles, ctx.neighborhood_edges);
    for (const double v : dv.overlap.values) CHECK(v == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    for (const double v : dv.cc.values) CHECK(v == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(dv.overlap.id == MeasureId::overlap_delta);
    CHECK(dv.cc.id == MeasureId::cc_delta);
  }

  TEST_CASE("extremal characterizations") {
    for (const auto& [name, g] : full_fleet()) {
      CAPTURE(name);
      const GraphContext ctx(g);
      const auto o = compute_measure(ctx, MeasureId::overlap);
      const auto oc = compute_measure(ctx, MeasureId::overlap_corrected);
      const auto mu = ctx.triangles.mu;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& r = ctx.triangles.rows[e];
        if (r.M > 0) {
          CHECK((o.values[e] == 1.0) == (r.M == r.t));
          CHECK((o.values[e] == 0.0) == (r.t == 0));
        }
        CHECK((oc.values[e] == 1.0) == (r.t > 0 && mu == r.M && r.M == r.t));
        CHECK((oc.values[e] == 0.0) == (r.t == 0));
      }
    }
  }

  TEST_CASE("structurally equivalent end nodes give J = O = 1") {
    // u and v share all other neighbors in T(0, t, 0)
    for (std::size_t t = 1; t <= 6; ++t) {
      const auto g = gen::t_pattern(0, t, 0);
      const GraphContext ctx(g);
      const auto e = *g.find_edge(0, 1);
      CHECK(compute_measure(ctx, MeasureId::jaccard).values[e] == 1.0);
      CHECK(compute_measure(ctx, MeasureId::overlap_index).values[e] == 1.0);
    }
  }

  TEST_CASE("compute_measure dispatch") {
    const auto k4 = gen::complete(4);
    const GraphContext ctx(k4);
    for (const auto id : all_measures()) {
      CAPTURE(measure_name(id));
      if (measure_kind(id) == ElementKind::arc) {
        CHECK_THROWS_AS(compute_measure(ctx, id), Error);
        continue;
      }
      const auto table = compute_measure(ctx, id);
      CHECK(table.id == id);
      CHECK(table.kind == measure_kind(id));
      CHECK(table.size() == (table.kind == ElementKind::node ? 4u : 6u));
    }
    const auto d = build_digraph(2, std::vector<NodePair>{{0, 1}}).graph;
    CHECK_THROWS_AS(compute_measure(d, count_directed_triangles(d), MeasureId::cc), Error);
    CHECK(compute_measure(d, count_directed_triangles(d), MeasureId::overlap_cyclic).size() == 1);
  }
}
