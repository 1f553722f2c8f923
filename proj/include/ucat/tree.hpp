#pragma once

// Immutable finite metric trees and the structural transforms built on them:
// validation, rooting, edge subdivision and edge contraction.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ucat/error.hpp"
#include "ucat/rational.hpp"

namespace ucat {

// Opaque vertex name. Ids starting with '_' are reserved for synthetic
// vertices created by subdivision ("_s<N>").
class VertexId {
 public:
  VertexId() = default;
  explicit VertexId(std::string name) : name_(std::move(name)) {}
  VertexId(const char* name) : name_(name) {}  // NOLINT: literal convenience

  const std::string& str() const noexcept { return name_; }
  bool is_synthetic() const noexcept {
    return !name_.empty() && name_.front() == '_';
  }

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend bool operator==(const VertexId&, const VertexId&) = default;

  friend std::ostream& operator<<(std::ostream& os, const VertexId& id) {
    return os << id.name_;
  }

 private:
  std::string name_;
};

inline constexpr std::string_view kSyntheticPrefix = "_s";

struct Edge {
  VertexId u;
  VertexId w;
  Rational length;

  friend bool operator==(const Edge& a, const Edge& b) {
    return a.u == b.u && a.w == b.w && a.length == b.length;
  }
};

// A point on edge (u, w) at fraction t of its length measured from u.
struct EdgePoint {
  VertexId u;
  VertexId w;
  Rational t;
};

struct Neighbor {
  VertexId id;
  Rational length;
};

class MetricTree {
 public:
  MetricTree() = default;

  // Stores the data as given; call validate() or use make() for a checked
  // tree. Edges are canonicalized to u < w and sorted.
  MetricTree(std::vector<VertexId> vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    for (auto& e : edges_) {
      if (e.w < e.u) std::swap(e.u, e.w);
    }
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
      return std::tie(a.u, a.w) < std::tie(b.u, b.w);
    });
    for (const auto& v : vertices_) adjacency_[v];
    for (const auto& e : edges_) {
      adjacency_[e.u].push_back({e.w, e.length});
      adjacency_[e.w].push_back({e.u, e.length});
    }
    for (auto& [v, list] : adjacency_) {
      std::sort(list.begin(), list.end(),
                [](const Neighbor& a, const Neighbor& b) { return a.id < b.id; });
    }
    for (const auto& v : vertices_) {
      const auto& name = v.str();
      if (name.rfind(kSyntheticPrefix, 0) != 0) continue;
      auto digits = name.substr(kSyntheticPrefix.size());
      if (digits.empty() ||
          !std::all_of(digits.begin(), digits.end(),
                       [](char c) { return c >= '0' && c <= '9'; }) ||
          digits.size() > 15) {
        continue;
      }
      next_synthetic_ = std::max(next_synthetic_, std::stoull(digits) + 1);
    }
  }

  static MetricTree make(std::vector<VertexId> vertices, std::vector<Edge> edges);

  static MetricTree single(VertexId v) { return MetricTree({std::move(v)}, {}); }

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  bool contains(const VertexId& v) const { return adjacency_.count(v) != 0; }

  // Sorted by neighbor id.
  const std::vector<Neighbor>& neighbors(const VertexId& v) const {
    auto it = adjacency_.find(v);
    if (it == adjacency_.end()) {
      throw Error(ErrorKind::UnknownVertex, "vertex '" + v.str() + "'");
    }
    return it->second;
  }

  std::size_t degree(const VertexId& v) const { return neighbors(v).size(); }

  std::optional<Rational> edge_length(const VertexId& a, const VertexId& b) const {
    auto it = adjacency_.find(a);
    if (it == adjacency_.end()) return std::nullopt;
    for (const auto& n : it->second) {
      if (n.id == b) return n.length;
    }
    return std::nullopt;
  }

  Rational total_length() const {
    Rational sum = 0;
    for (const auto& e : edges_) sum += e.length;
    return sum;
  }

  // Name the next subdivision will use.
  VertexId next_synthetic_id() const {
    return VertexId(std::string(kSyntheticPrefix) + std::to_string(next_synthetic_));
  }

  friend bool operator==(const MetricTree& a, const MetricTree& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  friend std::pair<MetricTree, VertexId> subdivide(const MetricTree&, const EdgePoint&);
  friend struct ContractionAccess;

  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::map<VertexId, std::vector<Neighbor>> adjacency_;
  unsigned long long next_synthetic_ = 1;
};

struct TreeViolation {
  ErrorKind kind;
  std::string detail;
};

// Returns nullopt when the data forms a finite metric tree; otherwise the
// first violated invariant.
inline std::optional<TreeViolation> validate(const MetricTree& tree) {
  const auto& vs = tree.vertices();
  if (vs.empty()) return TreeViolation{ErrorKind::EmptyTree, "tree has no vertices"};
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (vs[i] == vs[i - 1]) {
      return TreeViolation{ErrorKind::DuplicateVertexId,
                           "vertex '" + vs[i].str() + "' listed twice"};
    }
  }
  for (const auto& e : tree.edges()) {
    for (const auto* end : {&e.u, &e.w}) {
      if (!std::binary_search(vs.begin(), vs.end(), *end)) {
        return TreeViolation{ErrorKind::UnknownVertex,
                             "edge " + e.u.str() + "-" + e.w.str() +
                                 " references unknown vertex '" + end->str() + "'"};
      }
    }
  }
  for (const auto& e : tree.edges()) {
    if (e.length <= 0) {
      return TreeViolation{ErrorKind::NonPositiveLength,
                           "edge " + e.u.str() + "-" + e.w.str() + " has length " +
                               to_display_string(e.length)};
    }
  }

  // Union-find over vertex indices.
  std::vector<std::size_t> parent(vs.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto index_of = [&](const VertexId& v) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) -
                                    vs.begin());
  };
  std::size_t components = vs.size();
  for (const auto& e : tree.edges()) {
    auto a = find(index_of(e.u));
    auto b = find(index_of(e.w));
    if (a == b) {
      return TreeViolation{ErrorKind::CycleDetected,
                           "edge " + e.u.str() + "-" + e.w.str() + " closes a cycle"};
    }
    parent[a] = b;
    --components;
  }
  if (components != 1) {
    return TreeViolation{ErrorKind::Disconnected,
                         std::to_string(components) + " connected components"};
  }
  return std::nullopt;
}

inline MetricTree MetricTree::make(std::vector<VertexId> vertices,
                                   std::vector<Edge> edges) {
  MetricTree tree(std::move(vertices), std::move(edges));
  if (auto violation = validate(tree)) throw Error(violation->kind, violation->detail);
  return tree;
}

// Edges oriented away from root. Children are visited in lexicographic order,
// so `order` is a deterministic BFS order starting at the root.
struct Orientation {
  VertexId root;
  std::map<VertexId, VertexId> parent;
  std::vector<VertexId> order;

  const VertexId* parent_of(const VertexId& v) const {
    auto it = parent.find(v);
    return it == parent.end() ? nullptr : &it->second;
  }
};

inline Orientation root_at(const MetricTree& tree, const VertexId& root) {
  if (!tree.contains(root)) {
    throw Error(ErrorKind::UnknownVertex, "vertex '" + root.str() + "'");
  }
  Orientation o;
  o.root = root;
  o.order.reserve(tree.vertex_count());
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId u = std::move(queue.front());
    queue.pop_front();
    const VertexId* up = o.parent_of(u);
    for (const auto& n : tree.neighbors(u)) {
      if (up != nullptr && n.id == *up) continue;
      o.parent.emplace(n.id, u);
      queue.push_back(n.id);
    }
    o.order.push_back(std::move(u));
  }
  return o;
}

// Replaces edge (u, w) with (u, s) and (s, w), s a fresh synthetic vertex.
inline std::pair<MetricTree, VertexId> subdivide(const MetricTree& tree,
                                                 const EdgePoint& p) {
  auto length = tree.edge_length(p.u, p.w);
  if (!length) {
    throw Error(ErrorKind::UnknownEdge, "edge " + p.u.str() + "-" + p.w.str());
  }
  if (p.t <= 0 || p.t >= 1) {
    throw Error(ErrorKind::EndpointSubdivision,
                "t = " + to_display_string(p.t) + " is not strictly inside (0, 1)");
  }
  VertexId s = tree.next_synthetic_id();
  std::vector<VertexId> vertices = tree.vertices();
  vertices.push_back(s);
  std::vector<Edge> edges;
  edges.reserve(tree.edge_count() + 1);
  for (const auto& e : tree.edges()) {
    bool match = (e.u == p.u && e.w == p.w) || (e.u == p.w && e.w == p.u);
    if (!match) edges.push_back(e);
  }
  Rational near = p.t * *length;
  Rational far = *length - near;
  edges.push_back({p.u, s, near});
  edges.push_back({s, p.w, far});
  MetricTree out(std::move(vertices), std::move(edges));
  out.next_synthetic_ = std::max(out.next_synthetic_, tree.next_synthetic_ + 1);
  return {std::move(out), std::move(s)};
}

// Everything needed to undo a contraction: the removed vertex, the contracted
// edge length, and the edges that were re-attached to the survivor.
struct MergeRecord {
  VertexId survivor;
  VertexId removed;
  Rational length;
  std::vector<Neighbor> reattached;
};

struct ContractionAccess {
  static void carry_counter(MetricTree& out, const MetricTree& in) {
    out.next_synthetic_ = std::max(out.next_synthetic_, in.next_synthetic_);
  }
};

// Merges the endpoints of edge (a, b) into the lexicographically smaller one.
inline std::pair<MetricTree, MergeRecord> contract_edge(const MetricTree& tree,
                                                        const VertexId& a,
                                                        const VertexId& b) {
  auto length = tree.edge_length(a, b);
  if (!length) throw Error(ErrorKind::UnknownEdge, "edge " + a.str() + "-" + b.str());
  MergeRecord record{std::min(a, b), std::max(a, b), *length, {}};

  std::vector<VertexId> vertices;
  vertices.reserve(tree.vertex_count() - 1);
  for (const auto& v : tree.vertices()) {
    if (v != record.removed) vertices.push_back(v);
  }
  std::vector<Edge> edges;
  edges.reserve(tree.edge_count() - 1);
  for (const auto& e : tree.edges()) {
    bool touches_removed = e.u == record.removed || e.w == record.removed;
    if (!touches_removed) {
      edges.push_back(e);
      continue;
    }
    const VertexId& other = e.u == record.removed ? e.w : e.u;
    if (other == record.survivor) continue;
    record.reattached.push_back({other, e.length});
    edges.push_back({record.survivor, other, e.length});
  }
  MetricTree out(std::move(vertices), std::move(edges));
  ContractionAccess::carry_counter(out, tree);
  return {std::move(out), std::move(record)};
}

// Inverse of contract_edge.
inline MetricTree expand_edge(const MetricTree& tree, const MergeRecord& record) {
  if (!tree.contains(record.survivor)) {
    throw Error(ErrorKind::UnknownVertex, "vertex '" + record.survivor.str() + "'");
  }
  std::vector<VertexId> vertices = tree.vertices();
  vertices.push_back(record.removed);
  std::vector<Edge> edges;
  edges.reserve(tree.edge_count() + 1);
  for (const auto& e : tree.edges()) {
    bool moved = false;
    for (const auto& n : record.reattached) {
      if ((e.u == record.survivor && e.w == n.id) ||
          (e.w == record.survivor && e.u == n.id)) {
        moved = true;
        break;
      }
    }
    if (!moved) edges.push_back(e);
  }
  for (const auto& n : record.reattached) edges.push_back({record.removed, n.id, n.length});
  edges.push_back({record.survivor, record.removed, record.length});
  MetricTree out(std::move(vertices), std::move(edges));
  ContractionAccess::carry_counter(out, tree);
  return out;
}

}  // namespace ucat
