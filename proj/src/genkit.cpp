#include "netdensity/genkit.hpp"

#include <random>
#include <string>

#include "netdensity/error.hpp"

namespace netdensity::gen {
namespace {

Graph from_pairs(std::size_t n, const std::vector<NodePair>& pairs, std::vector<std::string> labels = {}) {
  return build_graph(n, pairs, std::move(labels)).graph;
}

std::size_t non_negative(std::int64_t value, std::string_view what) {
  if (value < 0) throw Error(std::string(what) + " must be non-negative, got " + std::to_string(value));
  return static_cast<std::size_t>(value);
}

}  // namespace

Graph complete(std::size_t n) {
  std::vector<NodePair> pairs;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return from_pairs(n, pairs);
}

Graph path(std::size_t n) {
  std::vector<NodePair> pairs;
  for (NodeId i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_pairs(n, pairs);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw Error("a cycle needs at least 3 nodes, got " + std::to_string(n));
  std::vector<NodePair> pairs;
  for (NodeId i = 0; i < n; ++i) pairs.emplace_back(i, static_cast<NodeId>((i + 1) % n));
  return from_pairs(n, pairs);
}

Graph star(std::size_t leaves) {
  std::vector<NodePair> pairs;
  for (NodeId i = 1; i <= leaves; ++i) pairs.emplace_back(0, i);
  return from_pairs(leaves + 1, pairs);
}

Graph t_pattern(std::size_t a, std::size_t t, std::size_t b) {
  const std::size_t n = 2 + t + a + b;
  std::vector<std::string> labels{"u", "v"};
  std::vector<NodePair> pairs{{0, 1}};
  NodeId next = 2;
  for (std::size_t i = 1; i <= t; ++i, ++next) {
    labels.push_back("c" + std::to_string(i));
    pairs.emplace_back(0, next);
    pairs.emplace_back(1, next);
  }
  for (std::size_t i = 1; i <= a; ++i, ++next) {
    labels.push_back("a" + std::to_string(i));
    pairs.emplace_back(0, next);
  }
  for (std::size_t i = 1; i <= b; ++i, ++next) {
    labels.push_back("b" + std::to_string(i));
    pairs.emplace_back(1, next);
  }
  return from_pairs(n, pairs, std::move(labels));
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error("edge probability must lie in [0, 1], got " + std::to_string(p));
  std::mt19937_64 engine(seed);
  std::vector<NodePair> pairs;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const double draw = static_cast<double>(engine() >> 11) * 0x1.0p-53;
      if (draw < p) pairs.emplace_back(i, j);
    }
  }
  return from_pairs(n, pairs);
}

Graph make(const GenSpec& spec) {
  switch (spec.family) {
    case Family::complete: return complete(non_negative(spec.n, "n"));
    case Family::path: return path(non_negative(spec.n, "n"));
    case Family::cycle: return cycle(non_negative(spec.n, "n"));
    case Family::star: return star(non_negative(spec.n, "leaf count"));
    case Family::t_pattern:
      return t_pattern(non_negative(spec.a, "a"), non_negative(spec.t, "t"), non_negative(spec.b, "b"));
    case Family::erdos_renyi: return random_graph(non_negative(spec.n, "n"), spec.p, spec.seed);
  }
  throw Error("unknown graph family");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::t_pattern: return "T";
    case Family::erdos_renyi: return "er";
  }
  return "?";
}

}  // namespace netdensity::gen
