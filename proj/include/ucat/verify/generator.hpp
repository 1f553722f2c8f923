#pragma once

// Seeded random instances for property tests. Output depends only on the
// arguments (mt19937_64 is fully specified by the standard, and draws are
// reduced with plain modulo rather than library distributions).

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ucat/density.hpp"

namespace ucat::verify {

struct Instance {
  TreePtr tree;
  EdgeLinearDensity density;
};

namespace detail {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return bound == 0 ? 0 : rng() % bound;
}

inline VertexId numbered(std::size_t i) { return VertexId("v" + std::to_string(i)); }

}  // namespace detail

// Random attachment tree on 1..max_vertices vertices "v1".."vn", unit edge
// lengths, integer values uniform in [0, max_value].
inline Instance gen_instance(std::uint64_t seed, std::size_t max_vertices,
                             std::uint64_t max_value) {
  std::mt19937_64 rng(seed);
  const std::size_t n = 1 + detail::draw(rng, max_vertices == 0 ? 1 : max_vertices);
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  ValueMap values;
  for (std::size_t i = 1; i <= n; ++i) {
    vertices.push_back(detail::numbered(i));
    if (i > 1) {
      std::size_t parent = 1 + detail::draw(rng, i - 1);
      edges.push_back({detail::numbered(parent), detail::numbered(i), Rational(1)});
    }
  }
  for (const auto& v : vertices) {
    values.emplace(v, Rational(static_cast<unsigned long>(detail::draw(rng, max_value + 1))));
  }
  auto tree = share(MetricTree::make(std::move(vertices), std::move(edges)));
  return {tree, EdgeLinearDensity(tree, std::move(values))};
}

// Path v1 - v2 - ... - vn with the given values.
inline Instance path_instance(const std::vector<Rational>& values) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  ValueMap map;
  for (std::size_t i = 1; i <= values.size(); ++i) {
    vertices.push_back(detail::numbered(i));
    map.emplace(detail::numbered(i), values[i - 1]);
    if (i > 1) edges.push_back({detail::numbered(i - 1), detail::numbered(i), Rational(1)});
  }
  auto tree = share(MetricTree::make(std::move(vertices), std::move(edges)));
  return {tree, EdgeLinearDensity(tree, std::move(map))};
}

// Random path of 1..max_length vertices; also returns values in path order.
inline std::pair<Instance, std::vector<Rational>> gen_path(std::uint64_t seed,
                                                           std::size_t max_length,
                                                           std::uint64_t max_value) {
  std::mt19937_64 rng(seed);
  const std::size_t n = 1 + detail::draw(rng, max_length == 0 ? 1 : max_length);
  std::vector<Rational> values;
  for (std::size_t i = 0; i < n; ++i) {
    values.emplace_back(static_cast<unsigned long>(detail::draw(rng, max_value + 1)));
  }
  return {path_instance(values), values};
}

}  // namespace ucat::verify
