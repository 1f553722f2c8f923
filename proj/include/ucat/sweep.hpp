#pragma once

// The sweeping operation: starting from a vertex v, propagate the largest
// component with mode v that f can carry, and split off the remainder.

#include <utility>
#include <vector>

#include "ucat/density.hpp"
#include "ucat/tree.hpp"

namespace ucat {

// A zero crossing inserted on edge (u, w) at fraction t from u.
struct Subdivision {
  EdgePoint at;
  VertexId created;
};

struct SweepResult {
  TreePtr refined_tree;
  EdgeLinearDensity f_refined;
  EdgeLinearDensity h;
  EdgeLinearDensity remainder;
  VertexId origin;
  std::vector<Subdivision> subdivisions;
};

inline SweepResult sweep(const EdgeLinearDensity& f, const VertexId& v) {
  const MetricTree& tree = f.tree();
  Orientation o = root_at(tree, v);

  ValueMap h;
  h.emplace(v, f.at(v));

  struct Crossing {
    VertexId u, w;
    Rational t, f_value;
  };
  std::vector<Crossing> crossings;

  for (const auto& w : o.order) {
    const VertexId* u = o.parent_of(w);
    if (u == nullptr) continue;
    const Rational& fu = f.at(*u);
    const Rational& fw = f.at(w);
    const Rational& hu = h.at(*u);
    if (fu < fw) {
      h.emplace(w, hu);
      continue;
    }
    Rational drop = fu - fw;
    if (hu > drop) {
      h.emplace(w, Rational(hu - drop));
      continue;
    }
    h.emplace(w, Rational(0));
    // h reaches zero strictly inside the edge.
    if (hu > 0 && hu < drop) {
      crossings.push_back({*u, w, Rational(hu / drop), Rational(fu - hu)});
    }
  }

  TreePtr refined = f.shared_tree();
  ValueMap f_values = f.values();
  std::vector<Subdivision> subdivisions;
  subdivisions.reserve(crossings.size());
  if (!crossings.empty()) {
    MetricTree current = tree;
    for (auto& c : crossings) {
      EdgePoint at{c.u, c.w, c.t};
      auto [next, created] = subdivide(current, at);
      current = std::move(next);
      f_values.emplace(created, c.f_value);
      h.emplace(created, Rational(0));
      subdivisions.push_back({std::move(at), std::move(created)});
    }
    refined = share(std::move(current));
  }

  ValueMap r_values;
  for (const auto& [x, fx] : f_values) r_values.emplace(x, Rational(fx - h.at(x)));

  EdgeLinearDensity f_refined(refined, std::move(f_values));
  EdgeLinearDensity h_density(refined, std::move(h));
  EdgeLinearDensity r_density(refined, std::move(r_values));
  return SweepResult{refined,   std::move(f_refined), std::move(h_density),
                     std::move(r_density), v, std::move(subdivisions)};
}

// Same computation; named for callers that only want R_v f.
inline SweepResult remainder(const EdgeLinearDensity& f, const VertexId& v) {
  return sweep(f, v);
}

}  // namespace ucat
