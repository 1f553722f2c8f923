#pragma once

// Independent validity check of a decomposition: exact pointwise sum and
// unimodality of every component, on the refined tree.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ucat/density.hpp"
#include "ucat/greedy.hpp"

namespace ucat::verify {

// Re-expresses f on `refined`, which must be the tree of f with some edges
// subdivided by extra degree-2 vertices (lengths adding up exactly). Values at
// the extra vertices are interpolated by arc length.
inline EdgeLinearDensity project_onto_refinement(const EdgeLinearDensity& f,
                                                 const TreePtr& refined) {
  const MetricTree& original = f.tree();
  auto mismatch = [](const std::string& what) {
    return Error(ErrorKind::TreeMismatch, what);
  };
  for (const auto& v : original.vertices()) {
    if (!refined->contains(v)) throw mismatch("refined tree lacks vertex '" + v.str() + "'");
  }

  ValueMap values;
  std::set<VertexId> covered;
  std::size_t chains = 0;
  for (const auto& u : original.vertices()) {
    values.emplace(u, f.at(u));
    for (const auto& first : refined->neighbors(u)) {
      struct Step {
        VertexId id;
        Rational offset;
      };
      std::vector<Step> interior;
      VertexId prev = u;
      VertexId cur = first.id;
      Rational offset = first.length;
      while (!original.contains(cur)) {
        const auto& ns = refined->neighbors(cur);
        if (ns.size() != 2) {
          throw mismatch("extra vertex '" + cur.str() + "' does not lie inside an edge");
        }
        interior.push_back({cur, offset});
        const Neighbor& next = ns[0].id == prev ? ns[1] : ns[0];
        prev = cur;
        cur = next.id;
        offset += next.length;
      }
      if (cur < u) continue;  // each chain is handled from its smaller end
      auto length = original.edge_length(u, cur);
      if (!length) {
        throw mismatch("refined path " + u.str() + ".." + cur.str() +
                       " is not an edge of the input tree");
      }
      if (offset != *length) {
        throw mismatch("edge " + u.str() + "-" + cur.str() + " has length " +
                       to_display_string(*length) + " but its refinement sums to " +
                       to_display_string(offset));
      }
      ++chains;
      for (auto& step : interior) {
        Rational t = step.offset / *length;
        Rational one_minus_t = 1 - t;
        Rational value = one_minus_t * f.at(u) + t * f.at(cur);
        values.emplace(step.id, std::move(value));
        covered.insert(step.id);
      }
    }
  }
  if (chains != original.edge_count()) {
    throw mismatch("refined tree does not subdivide every input edge exactly once");
  }
  if (values.size() != refined->vertex_count()) {
    throw mismatch("refined tree has vertices outside the input edges");
  }
  return EdgeLinearDensity(refined, std::move(values));
}

struct ComponentCheck {
  std::size_t index;
  bool ok;
  // Set when the component is not unimodal: parent -> child edge that rises.
  std::optional<std::pair<VertexId, VertexId>> violating_edge;
  bool zero_component = false;
  bool mode_attains_max = true;
};

struct CheckReport {
  bool sum_ok = true;
  std::vector<VertexId> sum_failures;
  std::vector<ComponentCheck> components;
  std::size_t count = 0;
  bool overall = false;
};

inline CheckReport check_decomposition(const EdgeLinearDensity& f, const Decomposition& d) {
  EdgeLinearDensity target = project_onto_refinement(f, d.refined_tree);
  CheckReport report;
  report.count = d.components.size();

  for (const auto& v : d.refined_tree->vertices()) {
    Rational sum = 0;
    for (const auto& c : d.components) {
      if (!c.values.same_tree(target)) {
        throw Error(ErrorKind::TreeMismatch, "component on a different tree");
      }
      sum += c.values.at(v);
    }
    if (sum != target.at(v)) report.sum_failures.push_back(v);
  }
  report.sum_ok = report.sum_failures.empty();

  bool all_ok = true;
  for (std::size_t i = 0; i < d.components.size(); ++i) {
    const auto& c = d.components[i];
    ComponentCheck check{i, true, std::nullopt};
    auto verdict = is_unimodal(c.values);
    if (const auto* bad = std::get_if<NotUnimodal>(&verdict)) {
      check.ok = false;
      if (bad->zero_density) {
        check.zero_component = true;
      } else {
        check.violating_edge = std::make_pair(bad->parent, bad->child);
      }
    } else {
      const auto& witness = std::get<ModeWitness>(verdict);
      if (!c.values.tree().contains(c.mode) || c.values.at(c.mode) != witness.max_value) {
        check.ok = false;
        check.mode_attains_max = false;
      }
    }
    all_ok = all_ok && check.ok;
    report.components.push_back(std::move(check));
  }
  report.overall = report.sum_ok && all_ok;
  return report;
}

}  // namespace ucat::verify
