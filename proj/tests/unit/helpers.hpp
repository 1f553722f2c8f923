#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "ucat/density.hpp"

namespace ucat::testing {

inline Rational q(const char* text) { return rational_from_string(text); }

// Path over the given names with unit lengths.
inline EdgeLinearDensity path(std::initializer_list<std::pair<const char*, int>> points) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  ValueMap values;
  const char* prev = nullptr;
  for (const auto& [name, value] : points) {
    vertices.emplace_back(name);
    values.emplace(VertexId(name), Rational(value));
    if (prev != nullptr) edges.push_back({VertexId(prev), VertexId(name), Rational(1)});
    prev = name;
  }
  auto tree = share(MetricTree::make(std::move(vertices), std::move(edges)));
  return EdgeLinearDensity(tree, std::move(values));
}

// Path v1..vn with unit lengths.
inline EdgeLinearDensity numbered_path(std::initializer_list<int> values) {
  std::vector<VertexId> vertices;
  std::vector<Edge> edges;
  ValueMap map;
  int i = 0;
  for (int value : values) {
    ++i;
    VertexId v("v" + std::to_string(i));
    vertices.push_back(v);
    map.emplace(v, Rational(value));
    if (i > 1) edges.push_back({VertexId("v" + std::to_string(i - 1)), v, Rational(1)});
  }
  auto tree = share(MetricTree::make(std::move(vertices), std::move(edges)));
  return EdgeLinearDensity(tree, std::move(map));
}

inline EdgeLinearDensity star(const char* center, int center_value,
                              std::initializer_list<std::pair<const char*, int>> leaves) {
  std::vector<VertexId> vertices{VertexId(center)};
  std::vector<Edge> edges;
  ValueMap values{{VertexId(center), Rational(center_value)}};
  for (const auto& [name, value] : leaves) {
    vertices.emplace_back(name);
    edges.push_back({VertexId(center), VertexId(name), Rational(1)});
    values.emplace(VertexId(name), Rational(value));
  }
  auto tree = share(MetricTree::make(std::move(vertices), std::move(edges)));
  return EdgeLinearDensity(tree, std::move(values));
}

}  // namespace ucat::testing
