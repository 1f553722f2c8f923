#pragma once

// Mode-forced vertices. Leaves that do not rise above their neighbor are
// stripped until a fixpoint; every surviving leaf of a multi-vertex core is a
// mode of every minimal decomposition.

#include <functional>
#include <map>
#include <set>
#include <span>
#include <variant>
#include <vector>

#include "ucat/density.hpp"

namespace ucat {

struct UnimodalCore {
  VertexId mode;
};

struct ForcedCore {
  VertexId chosen;
};

struct PruneReport {
  std::set<VertexId> surviving;
  std::vector<VertexId> forced_leaves;
  std::variant<UnimodalCore, ForcedCore> verdict;

  bool is_unimodal() const { return std::holds_alternative<UnimodalCore>(verdict); }
  const VertexId& chosen() const {
    if (auto* u = std::get_if<UnimodalCore>(&verdict)) return u->mode;
    return std::get<ForcedCore>(verdict).chosen;
  }
};

// Picks which removable leaf goes next; receives the candidates in
// lexicographic order and returns an index into them.
using PruneOrder = std::function<std::size_t(std::span<const VertexId>)>;

namespace detail {

inline PruneReport prune(const EdgeLinearDensity& f, const PruneOrder& pick) {
  if (support_is_empty(f)) {
    throw Error(ErrorKind::ZeroDensity, "cannot locate a mode of the zero density");
  }
  const MetricTree& tree = f.tree();
  std::set<VertexId> alive(tree.vertices().begin(), tree.vertices().end());
  std::map<VertexId, std::size_t> degree;
  for (const auto& v : tree.vertices()) degree[v] = tree.degree(v);

  auto live_neighbor = [&](const VertexId& leaf) -> const VertexId& {
    for (const auto& n : tree.neighbors(leaf)) {
      if (alive.count(n.id)) return n.id;
    }
    throw Error(ErrorKind::Disconnected, "leaf '" + leaf.str() + "' has no neighbor");
  };
  auto removable = [&](const VertexId& v) {
    return alive.size() > 1 && degree.at(v) == 1 && f.at(v) <= f.at(live_neighbor(v));
  };

  std::set<VertexId> candidates;
  for (const auto& v : tree.vertices()) {
    if (removable(v)) candidates.insert(v);
  }
  std::vector<VertexId> scratch;
  while (!candidates.empty() && alive.size() > 1) {
    auto it = candidates.begin();
    if (pick) {
      scratch.assign(candidates.begin(), candidates.end());
      it = candidates.find(scratch.at(pick(scratch)));
    }
    VertexId leaf = *it;
    candidates.erase(it);
    if (!removable(leaf)) continue;
    const VertexId neighbor = live_neighbor(leaf);
    alive.erase(leaf);
    --degree.at(neighbor);
    // Only the neighbor's status can change.
    if (removable(neighbor)) candidates.insert(neighbor);
  }

  PruneReport report;
  report.surviving = alive;
  if (alive.size() == 1) {
    report.verdict = UnimodalCore{*alive.begin()};
    return report;
  }
  for (const auto& v : alive) {
    if (degree.at(v) == 1) report.forced_leaves.push_back(v);
  }
  const VertexId* best = nullptr;
  for (const auto& v : report.forced_leaves) {
    if (best == nullptr || f.at(v) > f.at(*best)) best = &v;
  }
  report.verdict = ForcedCore{*best};
  return report;
}

}  // namespace detail

inline PruneReport prune_insignificant(const EdgeLinearDensity& f) {
  return detail::prune(f, nullptr);
}

// Same fixpoint with a caller-chosen removal order.
inline PruneReport prune_insignificant(const EdgeLinearDensity& f,
                                       const PruneOrder& pick) {
  return detail::prune(f, pick);
}

// Tallest forced leaf first; ties go to the smallest id.
inline VertexId find_forced_vertex(const EdgeLinearDensity& f) {
  return prune_insignificant(f).chosen();
}

}  // namespace ucat
