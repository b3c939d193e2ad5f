#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "netdensity/graph.hpp"

namespace netdensity::gen {

enum class Family { complete, path, cycle, star, t_pattern, erdos_renyi };

/// Parameters of a generated graph. Integer parameters are signed so that
/// negative values coming from user input can be rejected with a message.
struct GenSpec {
  Family family = Family::complete;
  std::int64_t n = 0;  ///< node count; number of leaves for a star
  std::int64_t a = 0;  ///< T pattern: private neighbors of u
  std::int64_t t = 0;  ///< T pattern: common neighbors
  std::int64_t b = 0;  ///< T pattern: private neighbors of v
  double p = 0.0;
  std::uint64_t seed = 0;
};

/// Throws `Error` on negative sizes, p outside [0, 1] or a cycle shorter
/// than 3.
Graph make(const GenSpec& spec);

Graph complete(std::size_t n);
Graph path(std::size_t n);
/// n >= 3.
Graph cycle(std::size_t n);
/// Star with a center (node 0) and `leaves` leaves.
Graph star(std::size_t leaves);

/// Edge neighborhood pattern T(a, t, b): an edge (u:v) = (0:1), `t` common
/// neighbors of both ends, `a` further neighbors of u only and `b` further
/// neighbors of v only. deg u = a + t + 1, deg v = b + t + 1, t(uv) = t.
/// Nodes are labeled u, v, c1.., a1.., b1.. in that id order.
Graph t_pattern(std::size_t a, std::size_t t, std::size_t b);

/// G(n, p) graph. Pairs (i, j), i < j, are visited with i outer and j inner,
/// both ascending; each draws one 64-bit word x from std::mt19937_64 seeded
/// with `seed`, and the pair is an edge iff (x >> 11) * 2^-53 < p.
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

std::string_view family_name(Family f);

}  // namespace netdensity::gen
