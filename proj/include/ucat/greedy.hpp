#pragma once

// Greedy minimal unimodal decomposition: repeatedly sweep from a mode-forced
// vertex and continue on the remainder until nothing is left.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ucat/density.hpp"
#include "ucat/forced.hpp"
#include "ucat/sweep.hpp"

namespace ucat {

// `mode` is the smallest id on the component's maximum plateau; that plateau
// always contains the vertex the component was swept from.
struct Component {
  VertexId mode;
  EdgeLinearDensity values;
};

// All components and the input live on one common refined tree.
struct Decomposition {
  TreePtr refined_tree;
  std::vector<Component> components;
  EdgeLinearDensity input_on_refined;

  std::size_t ucat() const noexcept { return components.size(); }
};

struct TraceEvent {
  std::size_t iteration;
  VertexId forced;
  std::vector<VertexId> subdivided;
  Rational remaining_mass;
};

struct DecomposeOutput {
  Decomposition decomposition;
  std::vector<TraceEvent> trace;
};

namespace detail {

inline void interpolate_new_vertices(ValueMap& values,
                                     const std::vector<Subdivision>& subdivisions) {
  for (const auto& s : subdivisions) {
    const Rational& a = values.at(s.at.u);
    const Rational& b = values.at(s.at.w);
    Rational one_minus_t = 1 - s.at.t;
    Rational value = one_minus_t * a + s.at.t * b;
    values.emplace(s.created, std::move(value));
  }
}

}  // namespace detail

inline DecomposeOutput decompose(const EdgeLinearDensity& f) {
  DecomposeOutput out{{f.shared_tree(), {}, f}, {}};
  if (support_is_empty(f)) return out;

  struct Pending {
    VertexId mode;
    ValueMap values;
  };
  std::vector<Pending> pending;
  ValueMap input = f.values();
  EdgeLinearDensity current = f;

  for (std::size_t iteration = 0; !support_is_empty(current); ++iteration) {
    if (iteration > current.tree().vertex_count()) {
      throw Error(ErrorKind::NonTermination,
                  "greedy loop exceeded " + std::to_string(current.tree().vertex_count()) +
                      " iterations");
    }
    VertexId v = find_forced_vertex(current);
    SweepResult step = sweep(current, v);

    detail::interpolate_new_vertices(input, step.subdivisions);
    for (auto& p : pending) detail::interpolate_new_vertices(p.values, step.subdivisions);
    pending.push_back({std::get<ModeWitness>(is_unimodal(step.h)).mode, step.h.values()});

    TraceEvent event{iteration, v, {}, step.remainder.mass()};
    for (const auto& s : step.subdivisions) event.subdivided.push_back(s.created);
    out.trace.push_back(std::move(event));

    current = std::move(step.remainder);
  }

  TreePtr refined = current.shared_tree();
  out.decomposition.refined_tree = refined;
  out.decomposition.input_on_refined = EdgeLinearDensity(refined, std::move(input));
  out.decomposition.components.reserve(pending.size());
  for (auto& p : pending) {
    out.decomposition.components.push_back(
        {std::move(p.mode), EdgeLinearDensity(refined, std::move(p.values))});
  }
  return out;
}

inline std::size_t ucat(const EdgeLinearDensity& f) {
  std::size_t count = 0;
  EdgeLinearDensity current = f;
  while (!support_is_empty(current)) {
    if (count > current.tree().vertex_count()) {
      throw Error(ErrorKind::NonTermination, "greedy loop did not terminate");
    }
    current = sweep(current, find_forced_vertex(current)).remainder;
    ++count;
  }
  return count;
}

}  // namespace ucat
