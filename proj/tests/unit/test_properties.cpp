#include "doctest.h"
#include "support/properties.hpp"

using namespace netdensity;
using namespace netdensity::testing;

TEST_SUITE("local density properties") {
  TEST_CASE("normalized measures stay in [0, 1]") {
    const auto report = check_normalization(full_fleet());
    INFO(report.summary());
    CHECK(report.ok());
  }

  TEST_CASE("corrected overlap is monotone under each kind of added edge") {
    for (const auto kind : {AddedEdge::existing, AddedEdge::from_u, AddedEdge::from_v, AddedEdge::between_nbrs}) {
      CAPTURE(added_edge_name(kind));
      const auto report = check_overlap_monotone(kind, 40, 17);
      INFO(report.summary());
      CHECK(report.checked == 40);
      CHECK(report.ok());
    }
  }

  TEST_CASE("corrected clustering coefficient rises with a neighbor edge") {
    const auto report = check_cc_monotone(40, 23);
    INFO(report.summary());
    CHECK(report.checked == 40);
    CHECK(report.ok());
  }

  TEST_CASE("complete graphs attain 1") {
    const auto report = check_complete_graph_witnesses();
    INFO(report.summary());
    CHECK(report.ok());
  }

  TEST_CASE("o < o' exactly when mu < m") {
    const auto report = check_overlap_order(full_fleet());
    INFO(report.summary());
    CHECK(report.ok());
  }

  TEST_CASE("the plain overlap is not monotone under pinned-mu additions") {
    // The uncorrected overlap drops when u gains a neighbor outside N(v):
    // T(0,1,0) is a triangle (o = 1); adding a private neighbor of u gives
    // T(1,1,0) with o = 1/2.
    const auto before = gen::t_pattern(0, 1, 0);
    const auto after = gen::t_pattern(1, 1, 0);
    const auto o_before = overlap(before, count_edge_triangles(before)).values[*before.find_edge(0, 1)];
    const auto o_after = overlap(after, count_edge_triangles(after)).values[*after.find_edge(0, 1)];
    CHECK(o_before == 1.0);
    CHECK(o_after == 0.5);
  }

  TEST_CASE("identities hold on the whole fleet") {
    const auto report = check_identities(full_fleet());
    INFO(report.summary());
    CHECK(report.ok());
  }
}
