#pragma once

// Dense two-phase simplex over exact rationals with Bland's rule.
// Sized for oracle use: a few dozen rows and columns.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ucat/rational.hpp"

namespace ucat::verify {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> x;
  Rational objective;
};

// maximize c.x  subject to  A x = b,  x >= 0.
struct StandardLp {
  std::size_t columns = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  std::vector<Rational> c;  // empty: pure feasibility

  std::size_t add_column() {
    for (auto& row : a) row.emplace_back(0);
    return columns++;
  }
  std::size_t add_row(Rational rhs) {
    a.emplace_back(columns, Rational(0));
    b.push_back(std::move(rhs));
    return a.size() - 1;
  }
};

class Simplex {
 public:
  explicit Simplex(const StandardLp& lp) : m_(lp.a.size()), n_(lp.columns) {
    width_ = n_ + m_ + 1;
    tab_.assign(m_ + 1, std::vector<Rational>(width_, Rational(0)));
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      bool flip = lp.b[i] < 0;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(lp.a[i][j]) != 0) tab_[i + 1][j] = flip ? Rational(-lp.a[i][j]) : lp.a[i][j];
      }
      tab_[i + 1][n_ + i] = 1;
      tab_[i + 1][rhs()] = flip ? Rational(-lp.b[i]) : lp.b[i];
      basis_[i] = n_ + i;
    }
    objective_ = lp.c;
  }

  LpSolution solve() {
    LpSolution out;
    // Phase 1: maximize -(sum of artificials).
    for (std::size_t i = 1; i <= m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) tab_[0][j] -= tab_[i][j];
      tab_[0][rhs()] -= tab_[i][rhs()];
    }
    if (!iterate(n_ + m_)) throw std::logic_error("phase 1 cannot be unbounded");
    if (sgn(tab_[0][rhs()]) != 0) {
      out.status = LpStatus::Infeasible;
      return out;
    }
    drive_out_artificials();

    if (!objective_.empty()) {
      for (auto& cell : tab_[0]) cell = 0;
      for (std::size_t j = 0; j < n_; ++j) tab_[0][j] = -objective_[j];
      for (std::size_t i = 1; i <= m_; ++i) {
        const std::size_t col = basis_[i - 1];
        if (col >= n_ || sgn(tab_[0][col]) == 0) continue;
        Rational factor = tab_[0][col];
        for (std::size_t j = 0; j < width_; ++j) {
          if (sgn(tab_[i][j]) != 0) tab_[0][j] -= factor * tab_[i][j];
        }
      }
      if (!iterate(n_)) {
        out.status = LpStatus::Unbounded;
        return out;
      }
    }

    out.status = LpStatus::Optimal;
    out.x.assign(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) out.x[basis_[i]] = tab_[i + 1][rhs()];
    }
    out.objective = 0;
    for (std::size_t j = 0; j < objective_.size(); ++j) out.objective += objective_[j] * out.x[j];
    return out;
  }

 private:
  std::size_t rhs() const { return width_ - 1; }

  // Pivots until optimal over columns [0, allowed). False when unbounded.
  bool iterate(std::size_t allowed) {
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (sgn(tab_[0][j]) < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed) return true;

      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& coef = tab_[i + 1][enter];
        if (sgn(coef) <= 0) continue;
        Rational ratio = tab_[i + 1][rhs()] / coef;
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave + 1, enter);
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    Rational inv = 1 / tab_[row][col];
    auto& pr = tab_[row];
    for (auto& cell : pr) {
      if (sgn(cell) != 0) cell *= inv;
    }
    nonzero_.clear();
    for (std::size_t j = 0; j < width_; ++j) {
      if (sgn(pr[j]) != 0) nonzero_.push_back(j);
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == row || sgn(tab_[i][col]) == 0) continue;
      Rational factor = tab_[i][col];
      auto& ri = tab_[i];
      for (std::size_t j : nonzero_) ri[j] -= factor * pr[j];
    }
    basis_[row - 1] = col;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(tab_[i + 1][j]) != 0) {
          pivot(i + 1, j);
          break;
        }
      }
      // Otherwise the row is redundant; its artificial stays basic at zero.
    }
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> objective_;
  std::vector<std::size_t> nonzero_;
};

inline LpSolution solve(const StandardLp& lp) { return Simplex(lp).solve(); }

}  // namespace ucat::verify
