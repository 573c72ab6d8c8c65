// Copyright 2026 The pigames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <vector>

#include "pigames/coalition.hpp"
#include "pigames/rational.hpp"
#include "pigames/situation.hpp"
#include "pigames/solver.hpp"

namespace pigames {

enum class Sense { Minimize, Maximize };
enum class Relation { LessEq, Equal, GreaterEq };

struct LinearConstraint {
  std::vector<Rat> coeffs;
  Relation relation = Relation::LessEq;
  Rat rhs;
};

struct LinearProgram {
  Sense sense = Sense::Minimize;
  std::vector<Rat> objective;
  std::vector<LinearConstraint> constraints;
  std::vector<bool> nonneg;  // per variable; false = free
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Optimal;
  Rat value;
  std::vector<Rat> point;  // original variables; empty unless Optimal
  int iterations = 0;      // total simplex pivots across both phases
};

namespace lp_detail {

// Dense tableau simplex, exact rational arithmetic, Bland's smallest-index
// rule for both the entering and the leaving variable, so it cannot cycle.
class Tableau {
 public:
  // rows: A|b with Ax = b, b >= 0 is NOT assumed here; caller ensures it.
  Tableau(std::vector<std::vector<Rat>> rows, std::vector<Rat> rhs, std::vector<int> basis)
      : rows_(std::move(rows)), rhs_(std::move(rhs)), basis_(std::move(basis)) {}

  int pivots = 0;

  // Minimizes cost over the current feasible basis. Returns false when the
  // problem is unbounded below.
  bool run(const std::vector<Rat>& cost, int usable_cols) {
    const int m = static_cast<int>(rows_.size());
    // reduced costs r_j = c_j - c_B . B^{-1} A_j, maintained by elimination
    red_ = cost;
    red_.resize(usable_cols);
    for (int i = 0; i < m; ++i) {
      const Rat& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j < usable_cols; ++j) red_[j] -= cb * rows_[i][j];
    }
    for (;;) {
      int enter = -1;
      for (int j = 0; j < usable_cols; ++j) {
        if (red_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;

      int leave = -1;
      Rat best_ratio;
      for (int i = 0; i < m; ++i) {
        if (rows_[i][enter] <= 0) continue;
        Rat ratio = rhs_[i] / rows_[i][enter];
        if (leave < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded

      pivot(leave, enter, usable_cols);
    }
  }

  const std::vector<int>& basis() const { return basis_; }
  const std::vector<Rat>& rhs() const { return rhs_; }
  std::vector<std::vector<Rat>>& rows() { return rows_; }

  void pivot(int row, int col, int usable_cols) {
    ++pivots;
    if (pivots > kMaxPivots) throw std::runtime_error("simplex pivot limit exceeded");
    const Rat inv = Rat(1) / rows_[row][col];
    for (int j = 0; j < usable_cols; ++j) rows_[row][j] *= inv;
    rhs_[row] *= inv;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (static_cast<int>(i) == row || rows_[i][col] == 0) continue;
      const Rat factor = rows_[i][col];
      for (int j = 0; j < usable_cols; ++j) rows_[i][j] -= factor * rows_[row][j];
      rhs_[i] -= factor * rhs_[row];
    }
    if (!red_.empty() && red_[col] != 0) {
      const Rat factor = red_[col];
      for (int j = 0; j < usable_cols; ++j) red_[j] -= factor * rows_[row][j];
    }
    basis_[row] = col;
  }

  void drop_row(int row) {
    rows_.erase(rows_.begin() + row);
    rhs_.erase(rhs_.begin() + row);
    basis_.erase(basis_.begin() + row);
  }

 private:
  static constexpr int kMaxPivots = 200000;
  std::vector<std::vector<Rat>> rows_;
  std::vector<Rat> rhs_;
  std::vector<int> basis_;
  std::vector<Rat> red_;
};

}  // namespace lp_detail

/// Two-phase primal simplex on exact rationals. Free variables are split
/// into differences of non-negatives; every row gets an artificial for
/// phase 1. Tiny and exact rather than fast: the instances this library
/// solves have a few dozen variables at most.
inline LpSolution solve_lp(const LinearProgram& lp) {
  const int nvars = static_cast<int>(lp.objective.size());
  if (static_cast<int>(lp.nonneg.size()) != nvars)
    throw std::invalid_argument("nonneg flags do not match variable count");
  for (const auto& row : lp.constraints)
    if (static_cast<int>(row.coeffs.size()) != nvars)
      throw std::invalid_argument("constraint width does not match variable count");

  // Standard-form columns: one per non-negative variable, two (plus, minus)
  // per free variable.
  std::vector<int> plus_col(nvars), minus_col(nvars, -1);
  int cols = 0;
  for (int v = 0; v < nvars; ++v) {
    plus_col[v] = cols++;
    if (!lp.nonneg[v]) minus_col[v] = cols++;
  }
  const int split_cols = cols;
  const int m = static_cast<int>(lp.constraints.size());
  cols += m;  // slack/surplus slots (Equal rows leave theirs unused, zero)
  const int art0 = cols;
  cols += m;  // artificials

  std::vector<std::vector<Rat>> rows(m, std::vector<Rat>(cols, Rat(0)));
  std::vector<Rat> rhs(m);
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    const LinearConstraint& con = lp.constraints[i];
    for (int v = 0; v < nvars; ++v) {
      rows[i][plus_col[v]] = con.coeffs[v];
      if (minus_col[v] >= 0) rows[i][minus_col[v]] = -con.coeffs[v];
    }
    if (con.relation == Relation::LessEq) rows[i][split_cols + i] = 1;
    if (con.relation == Relation::GreaterEq) rows[i][split_cols + i] = -1;
    rhs[i] = con.rhs;
    if (rhs[i] < 0) {
      for (Rat& x : rows[i]) x = -x;
      rhs[i] = -rhs[i];
    }
    rows[i][art0 + i] = 1;
    basis[i] = art0 + i;
  }

  lp_detail::Tableau tab(std::move(rows), std::move(rhs), std::move(basis));

  // Phase 1: drive the artificials to zero.
  std::vector<Rat> phase1(cols, Rat(0));
  for (int i = 0; i < m; ++i) phase1[art0 + i] = 1;
  tab.run(phase1, cols);  // bounded below by 0, cannot be unbounded
  {
    Rat infeas = 0;
    for (std::size_t i = 0; i < tab.basis().size(); ++i)
      if (tab.basis()[i] >= art0) infeas += tab.rhs()[i];
    if (infeas != 0) return {LpStatus::Infeasible, Rat(0), {}, tab.pivots};
  }
  // Pivot remaining artificials out of the basis; an all-zero row is
  // redundant and dropped.
  for (int i = static_cast<int>(tab.basis().size()) - 1; i >= 0; --i) {
    if (tab.basis()[i] < art0) continue;
    int col = -1;
    for (int j = 0; j < art0; ++j) {
      if (tab.rows()[i][j] != 0) {
        col = j;
        break;
      }
    }
    if (col < 0) {
      tab.drop_row(i);
    } else {
      tab.pivot(i, col, art0);
    }
  }

  // Phase 2 on the real columns only.
  std::vector<Rat> cost(art0, Rat(0));
  const bool maximize = lp.sense == Sense::Maximize;
  for (int v = 0; v < nvars; ++v) {
    const Rat c = maximize ? Rat(-lp.objective[v]) : lp.objective[v];
    cost[plus_col[v]] = c;
    if (minus_col[v] >= 0) cost[minus_col[v]] = -c;
  }
  if (!tab.run(cost, art0)) return {LpStatus::Unbounded, Rat(0), {}, tab.pivots};

  std::vector<Rat> split(art0, Rat(0));
  for (std::size_t i = 0; i < tab.basis().size(); ++i) split[tab.basis()[i]] = tab.rhs()[i];
  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.iterations = tab.pivots;
  sol.point.resize(nvars);
  for (int v = 0; v < nvars; ++v) {
    sol.point[v] = split[plus_col[v]];
    if (minus_col[v] >= 0) sol.point[v] -= split[minus_col[v]];
  }
  sol.value = 0;
  for (int v = 0; v < nvars; ++v) sol.value += lp.objective[v] * sol.point[v];
  return sol;
}

/// The dual of coalition S's lot-sizing LP: maximize d^S . y subject to
///   y_t <= p_t^S,   y_{t+1} - y_t <= h_t^S,   y_t - y_{t+1} <= b_t^S,
/// with y free. Its optimum equals c(S); used as an independent oracle.
inline LinearProgram build_dlpi(const PISituation& sit, const Coalition& s) {
  const CoalitionParams p = aggregate(sit, s);
  const int T = sit.periods;
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.nonneg.assign(T, false);
  lp.objective.reserve(T);
  for (int t = 0; t < T; ++t) lp.objective.emplace_back(p.demand[t]);
  auto row = [&](int a, int b) {
    LinearConstraint con;
    con.coeffs.assign(T, Rat(0));
    con.coeffs[a] = 1;
    if (b >= 0) con.coeffs[b] = -1;
    return con;
  };
  for (int t = 0; t < T; ++t) {
    LinearConstraint con = row(t, -1);
    con.rhs = p.production[t];
    lp.constraints.push_back(std::move(con));
  }
  for (int t = 0; t + 1 < T; ++t) {
    LinearConstraint con = row(t + 1, t);
    con.rhs = p.holding[t];
    lp.constraints.push_back(std::move(con));
  }
  for (int t = 0; t + 1 < T; ++t) {
    LinearConstraint con = row(t, t + 1);
    con.rhs = p.backlogging[t];
    lp.constraints.push_back(std::move(con));
  }
  return lp;
}

/// true iff x satisfies every constraint and sign restriction exactly.
inline bool lp_feasible(const LinearProgram& lp, const std::vector<Rat>& x) {
  if (x.size() != lp.objective.size()) return false;
  for (std::size_t v = 0; v < x.size(); ++v)
    if (lp.nonneg[v] && x[v] < 0) return false;
  for (const LinearConstraint& con : lp.constraints) {
    Rat lhs = 0;
    for (std::size_t v = 0; v < x.size(); ++v) lhs += con.coeffs[v] * x[v];
    switch (con.relation) {
      case Relation::LessEq:
        if (lhs > con.rhs) return false;
        break;
      case Relation::Equal:
        if (lhs != con.rhs) return false;
        break;
      case Relation::GreaterEq:
        if (lhs < con.rhs) return false;
        break;
    }
  }
  return true;
}

}  // namespace pigames
