#pragma once

// Edge-linear densities: nonnegative vertex values on a metric tree,
// interpolated linearly along every edge.

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ucat/error.hpp"
#include "ucat/rational.hpp"
#include "ucat/tree.hpp"

namespace ucat {

using TreePtr = std::shared_ptr<const MetricTree>;
using ValueMap = std::map<VertexId, Rational>;

inline TreePtr share(MetricTree tree) {
  return std::make_shared<const MetricTree>(std::move(tree));
}

class EdgeLinearDensity {
 public:
  // Requires exactly one nonnegative value per tree vertex.
  EdgeLinearDensity(TreePtr tree, ValueMap values)
      : tree_(std::move(tree)), values_(std::move(values)) {
    if (!tree_) throw Error(ErrorKind::InvalidDensity, "density without a tree");
    for (const auto& v : tree_->vertices()) {
      auto it = values_.find(v);
      if (it == values_.end()) {
        throw Error(ErrorKind::InvalidDensity, "no value for vertex '" + v.str() + "'");
      }
      if (it->second < 0) {
        throw Error(ErrorKind::InvalidDensity,
                    "negative value at vertex '" + v.str() + "'");
      }
    }
    if (values_.size() != tree_->vertex_count()) {
      for (const auto& [v, value] : values_) {
        if (!tree_->contains(v)) {
          throw Error(ErrorKind::InvalidDensity,
                      "value for vertex '" + v.str() + "' not in the tree");
        }
      }
    }
  }

  const MetricTree& tree() const noexcept { return *tree_; }
  const TreePtr& shared_tree() const noexcept { return tree_; }
  const ValueMap& values() const noexcept { return values_; }

  const Rational& at(const VertexId& v) const {
    auto it = values_.find(v);
    if (it == values_.end()) {
      throw Error(ErrorKind::UnknownVertex, "vertex '" + v.str() + "'");
    }
    return it->second;
  }

  Rational max_value() const {
    Rational best = 0;
    for (const auto& [v, value] : values_) best = std::max(best, value);
    return best;
  }

  Rational mass() const {
    Rational sum = 0;
    for (const auto& [v, value] : values_) sum += value;
    return sum;
  }

  bool same_tree(const EdgeLinearDensity& other) const {
    return tree_ == other.tree_ || *tree_ == *other.tree_;
  }

  friend bool operator==(const EdgeLinearDensity& a, const EdgeLinearDensity& b) {
    return a.same_tree(b) && a.values_ == b.values_;
  }

 private:
  TreePtr tree_;
  ValueMap values_;
};

inline void require_same_tree(const EdgeLinearDensity& a, const EdgeLinearDensity& b) {
  if (!a.same_tree(b)) {
    throw Error(ErrorKind::TreeMismatch, "densities are bound to different trees");
  }
}

inline Rational value_at(const EdgeLinearDensity& f, const EdgePoint& p) {
  if (!f.tree().edge_length(p.u, p.w)) {
    throw Error(ErrorKind::UnknownEdge, "edge " + p.u.str() + "-" + p.w.str());
  }
  Rational one_minus_t = 1 - p.t;
  Rational value = one_minus_t * f.at(p.u) + p.t * f.at(p.w);
  return value;
}

inline bool support_is_empty(const EdgeLinearDensity& f) {
  for (const auto& [v, value] : f.values()) {
    if (value != 0) return false;
  }
  return true;
}

struct ModeWitness {
  VertexId mode;
  Rational max_value;
};

// An oriented edge (parent -> child) along which the density increases away
// from the chosen maximum. zero_density marks the all-zero case instead.
struct NotUnimodal {
  VertexId parent;
  VertexId child;
  bool zero_density = false;
};

using UnimodalVerdict = std::variant<ModeWitness, NotUnimodal>;

// Rooted at the lexicographically smallest global maximum, f must be
// non-increasing along every edge oriented away from the root.
inline UnimodalVerdict is_unimodal(const EdgeLinearDensity& f) {
  if (support_is_empty(f)) return NotUnimodal{{}, {}, true};
  const VertexId* mode = nullptr;
  const Rational* best = nullptr;
  for (const auto& [v, value] : f.values()) {
    if (best == nullptr || value > *best) {
      best = &value;
      mode = &v;
    }
  }
  Orientation o = root_at(f.tree(), *mode);
  for (const auto& w : o.order) {
    const VertexId* u = o.parent_of(w);
    if (u != nullptr && f.at(*u) < f.at(w)) return NotUnimodal{*u, w, false};
  }
  return ModeWitness{*mode, *best};
}

inline bool unimodal(const EdgeLinearDensity& f) {
  return std::holds_alternative<ModeWitness>(is_unimodal(f));
}

// Re-expresses f on a tree produced by subdividing `edge_point`'s edge.
inline EdgeLinearDensity extend_by_subdivision(const EdgeLinearDensity& f,
                                               const TreePtr& refined,
                                               const EdgePoint& p,
                                               const VertexId& created) {
  ValueMap values = f.values();
  values.emplace(created, value_at(f, p));
  return EdgeLinearDensity(refined, std::move(values));
}

struct NormalizeResult {
  EdgeLinearDensity density;
  std::vector<MergeRecord> merges;
};

// Contracts constant edges until none remain. Merges are recorded in the
// order they were applied.
inline NormalizeResult normalize(const EdgeLinearDensity& f) {
  TreePtr tree = f.shared_tree();
  ValueMap values = f.values();
  std::vector<MergeRecord> merges;
  for (;;) {
    const Edge* constant = nullptr;
    for (const auto& e : tree->edges()) {
      if (values.at(e.u) == values.at(e.w)) {
        constant = &e;
        break;
      }
    }
    if (constant == nullptr) break;
    auto [contracted, record] = contract_edge(*tree, constant->u, constant->w);
    values.erase(record.removed);
    merges.push_back(std::move(record));
    tree = share(std::move(contracted));
  }
  return {EdgeLinearDensity(tree, std::move(values)), std::move(merges)};
}

// Lifts a density on a normalized tree back through its merge records; each
// removed vertex takes its survivor's value.
inline EdgeLinearDensity lift_through_merges(const EdgeLinearDensity& g,
                                             const std::vector<MergeRecord>& merges) {
  TreePtr tree = g.shared_tree();
  ValueMap values = g.values();
  for (auto it = merges.rbegin(); it != merges.rend(); ++it) {
    tree = share(expand_edge(*tree, *it));
    values.emplace(it->removed, values.at(it->survivor));
  }
  return EdgeLinearDensity(tree, std::move(values));
}

}  // namespace ucat
