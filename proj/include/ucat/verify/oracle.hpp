#pragma once

// Brute-force minimality oracle. For a multiset of k mode vertices, decide by
// exact linear programming whether f splits into k components, each
// non-increasing away from its own mode (edge counts, not lengths, orient the
// constraints). The smallest feasible k is the unimodal category.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "ucat/density.hpp"
#include "ucat/verify/simplex.hpp"

namespace ucat::verify {

struct FeasibilityCertificate {
  std::vector<VertexId> modes;
  std::vector<ValueMap> components;  // components[i] anchored at modes[i]
};

namespace detail {

// Each component is parametrized by its value at the mode (top) and a
// nonnegative decrement on every edge oriented away from the mode; its value
// at v is top minus the decrements on the path. Nonnegativity only needs
// checking at leaves of the orientation.
struct ModeSystem {
  StandardLp lp;
  std::vector<std::size_t> top;                             // per component
  std::vector<std::map<VertexId, std::size_t>> decrement;  // per component, by child
  std::vector<Orientation> orientation;
  std::optional<std::size_t> epsilon;

  void add_path_terms(std::size_t row, std::size_t alpha, const VertexId& v,
                      const Rational& sign) {
    lp.a[row][top[alpha]] += sign;
    const Orientation& o = orientation[alpha];
    for (const VertexId* x = &v; *x != o.root; x = o.parent_of(*x)) {
      lp.a[row][decrement[alpha].at(*x)] -= sign;
    }
  }

  ValueMap values_of(std::size_t alpha, const std::vector<Rational>& x) const {
    ValueMap values;
    const Orientation& o = orientation[alpha];
    for (const auto& v : o.order) {
      const VertexId* p = o.parent_of(v);
      if (p == nullptr) {
        values.emplace(v, x[top[alpha]]);
      } else {
        values.emplace(v, Rational(values.at(*p) - x[decrement[alpha].at(v)]));
      }
    }
    return values;
  }
};

inline ModeSystem build_system(const EdgeLinearDensity& f,
                               const std::vector<VertexId>& modes) {
  const MetricTree& tree = f.tree();
  ModeSystem sys;
  for (const auto& mode : modes) {
    sys.orientation.push_back(root_at(tree, mode));
    sys.top.push_back(sys.lp.add_column());
    auto& dec = sys.decrement.emplace_back();
    for (const auto& v : sys.orientation.back().order) {
      if (v != mode) dec.emplace(v, sys.lp.add_column());
    }
  }
  // Component sums reproduce f.
  for (const auto& v : tree.vertices()) {
    std::size_t row = sys.lp.add_row(f.at(v));
    for (std::size_t alpha = 0; alpha < modes.size(); ++alpha) {
      sys.add_path_terms(row, alpha, v, Rational(1));
    }
  }
  // Values stay nonnegative at the far ends.
  for (std::size_t alpha = 0; alpha < modes.size(); ++alpha) {
    for (const auto& v : tree.vertices()) {
      if (v == modes[alpha] || tree.degree(v) != 1) continue;
      std::size_t slack = sys.lp.add_column();
      std::size_t row = sys.lp.add_row(Rational(0));
      sys.add_path_terms(row, alpha, v, Rational(1));
      sys.lp.a[row][slack] = -1;
    }
  }
  return sys;
}

}  // namespace detail

inline std::optional<FeasibilityCertificate> feasible_with_modes(
    const EdgeLinearDensity& f, const std::vector<VertexId>& modes) {
  if (modes.empty()) throw Error(ErrorKind::EmptyModeSet, "no modes given");
  auto sys = detail::build_system(f, modes);
  LpSolution sol = solve(sys.lp);
  if (sol.status != LpStatus::Optimal) return std::nullopt;
  FeasibilityCertificate cert{modes, {}};
  for (std::size_t alpha = 0; alpha < modes.size(); ++alpha) {
    cert.components.push_back(sys.values_of(alpha, sol.x));
  }
  return cert;
}

// True when f splits over `modes` with no component attaining its maximum at
// any vertex of `avoid`: maximize eps subject to
// value(mode) - value(a) >= eps for every component and every a in avoid.
inline bool feasible_avoiding(const EdgeLinearDensity& f,
                              const std::vector<VertexId>& modes,
                              const std::vector<VertexId>& avoid) {
  if (modes.empty()) throw Error(ErrorKind::EmptyModeSet, "no modes given");
  for (const auto& m : modes) {
    if (std::find(avoid.begin(), avoid.end(), m) != avoid.end()) return false;
  }
  auto sys = detail::build_system(f, modes);
  std::size_t eps = sys.lp.add_column();
  for (std::size_t alpha = 0; alpha < modes.size(); ++alpha) {
    const Orientation& o = sys.orientation[alpha];
    for (const auto& a : avoid) {
      // (sum of decrements from the mode down to a) - eps - slack = 0
      std::size_t slack = sys.lp.add_column();
      std::size_t row = sys.lp.add_row(Rational(0));
      for (const VertexId* x = &a; *x != o.root; x = o.parent_of(*x)) {
        sys.lp.a[row][sys.decrement[alpha].at(*x)] += 1;
      }
      sys.lp.a[row][eps] = -1;
      sys.lp.a[row][slack] = -1;
    }
  }
  sys.lp.c.assign(sys.lp.columns, Rational(0));
  sys.lp.c[eps] = 1;
  LpSolution sol = solve(sys.lp);
  return sol.status == LpStatus::Optimal && sgn(sol.objective) > 0;
}

// Calls visit(multiset) for every size-k multiset of `pool` (nondecreasing
// index sequences). Stops early when visit returns true; returns that.
template <typename Visit>
bool for_each_multiset(const std::vector<VertexId>& pool, std::size_t k, Visit&& visit) {
  if (k == 0 || pool.empty()) return false;
  std::vector<std::size_t> idx(k, 0);
  std::vector<VertexId> chosen(k);
  for (;;) {
    for (std::size_t i = 0; i < k; ++i) chosen[i] = pool[idx[i]];
    if (visit(chosen)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[i - 1];
  }
}

// Smallest k <= k_max for which some k-multiset of vertices is feasible;
// nullopt when none is.
inline std::optional<std::size_t> ucat_oracle(const EdgeLinearDensity& f,
                                              std::size_t k_max) {
  if (support_is_empty(f)) return 0;
  const auto& pool = f.tree().vertices();
  for (std::size_t k = 1; k <= k_max; ++k) {
    bool found = for_each_multiset(pool, k, [&](const std::vector<VertexId>& modes) {
      return feasible_with_modes(f, modes).has_value();
    });
    if (found) return k;
  }
  return std::nullopt;
}

}  // namespace ucat::verify
