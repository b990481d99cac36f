// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense two-phase simplex over exact rationals with Bland's rule.
//
//   maximize c.x  subject to  rows (<=, >=, =),  x >= 0.
//
// Meant for the few-dozen-variable programs that arise in share
// computations; no attempt is made to be fast.

#ifndef FAIRDUAL_EXACT_LP_HPP_
#define FAIRDUAL_EXACT_LP_HPP_

#include <cstddef>
#include <vector>

#include "fairdual/errors.hpp"
#include "fairdual/rational.hpp"

namespace fairdual {

enum class RowSense { kLessEqual, kGreaterEqual, kEqual };

struct LinearRow {
  std::vector<Rational> coefficients;
  RowSense sense = RowSense::kLessEqual;
  Rational rhs;
};

struct LinearProgram {
  std::size_t variable_count = 0;
  std::vector<Rational> objective;  // maximized
  std::vector<LinearRow> rows;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> x;
};

namespace internal {

class Tableau {
 public:
  // Columns: structural, then one slack/surplus per inequality row, then one
  // artificial per >= or = row. Right-hand sides are made nonnegative first.
  explicit Tableau(const LinearProgram& lp) : structural_(lp.variable_count) {
    std::size_t slack = 0;
    std::size_t artificial = 0;
    std::vector<RowSense> senses;
    for (const auto& row : lp.rows) {
      if (row.coefficients.size() != structural_) {
        throw PreconditionError("LP row width differs from variable count");
      }
      RowSense s = row.sense;
      if (row.rhs.sign() < 0) {
        if (s == RowSense::kLessEqual) {
          s = RowSense::kGreaterEqual;
        } else if (s == RowSense::kGreaterEqual) {
          s = RowSense::kLessEqual;
        }
      }
      senses.push_back(s);
      if (s != RowSense::kEqual) ++slack;
      if (s != RowSense::kLessEqual) ++artificial;
    }
    slack_begin_ = structural_;
    artificial_begin_ = slack_begin_ + slack;
    columns_ = artificial_begin_ + artificial;

    std::size_t next_slack = slack_begin_;
    std::size_t next_artificial = artificial_begin_;
    for (std::size_t r = 0; r < lp.rows.size(); ++r) {
      const auto& row = lp.rows[r];
      const bool flip = row.rhs.sign() < 0;
      std::vector<Rational> line(columns_ + 1);
      for (std::size_t j = 0; j < structural_; ++j) {
        line[j] = flip ? -row.coefficients[j] : row.coefficients[j];
      }
      line[columns_] = flip ? -row.rhs : row.rhs;
      std::size_t basic = 0;
      switch (senses[r]) {
        case RowSense::kLessEqual:
          line[next_slack] = 1;
          basic = next_slack++;
          break;
        case RowSense::kGreaterEqual:
          line[next_slack++] = -1;
          line[next_artificial] = 1;
          basic = next_artificial++;
          break;
        case RowSense::kEqual:
          line[next_artificial] = 1;
          basic = next_artificial++;
          break;
      }
      rows_.push_back(std::move(line));
      basis_.push_back(basic);
    }
  }

  LpSolution Solve(const std::vector<Rational>& objective) {
    // Phase 1: maximize -(sum of artificials).
    if (artificial_begin_ < columns_) {
      std::vector<Rational> phase1(columns_);
      for (std::size_t j = artificial_begin_; j < columns_; ++j) phase1[j] = -1;
      SetObjective(phase1);
      if (!Optimize(columns_)) {
        throw Error("phase 1 unbounded; simplex invariant broken");
      }
      if (cost_[columns_].sign() != 0) return {LpStatus::kInfeasible, {}, {}};
      DriveOutArtificials();
    }
    std::vector<Rational> phase2(columns_);
    for (std::size_t j = 0; j < structural_; ++j) phase2[j] = objective[j];
    SetObjective(phase2);
    if (!Optimize(artificial_begin_)) return {LpStatus::kUnbounded, {}, {}};
    LpSolution out;
    out.status = LpStatus::kOptimal;
    out.x.assign(structural_, Rational());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (basis_[r] < structural_) out.x[basis_[r]] = rows_[r][columns_];
    }
    for (std::size_t j = 0; j < structural_; ++j) {
      out.objective += objective[j] * out.x[j];
    }
    return out;
  }

 private:
  // cost_[j] holds the reduced cost z_j - c_j; cost_[columns_] the objective.
  void SetObjective(const std::vector<Rational>& c) {
    cost_.assign(columns_ + 1, Rational());
    for (std::size_t j = 0; j < columns_; ++j) cost_[j] = -c[j];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& cb = c[basis_[r]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (!rows_[r][j].is_zero()) cost_[j] += cb * rows_[r][j];
      }
    }
  }

  void Pivot(std::size_t row, std::size_t col) {
    const Rational inv = Rational(1) / rows_[row][col];
    for (auto& e : rows_[row]) {
      if (!e.is_zero()) e *= inv;
    }
    const auto& prow = rows_[row];
    auto eliminate = [&](std::vector<Rational>& line) {
      const Rational f = line[col];
      if (f.is_zero()) return;
      for (std::size_t j = 0; j <= columns_; ++j) {
        if (!prow[j].is_zero()) line[j] -= f * prow[j];
      }
    };
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r != row) eliminate(rows_[r]);
    }
    eliminate(cost_);
    basis_[row] = col;
  }

  // Bland's rule over columns [0, limit). Returns false when unbounded.
  bool Optimize(std::size_t limit) {
    while (true) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j) {
        if (cost_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == limit) return true;
      std::size_t leave = rows_.size();
      Rational best;
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Rational& a = rows_[r][enter];
        if (a.sign() <= 0) continue;
        const Rational ratio = rows_[r][columns_] / a;
        if (leave == rows_.size() || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave == rows_.size()) return false;
      Pivot(leave, enter);
    }
  }

  // After phase 1, basic artificials sit at zero. Pivot each onto any
  // non-artificial column with a nonzero entry, or drop the row as redundant.
  void DriveOutArtificials() {
    for (std::size_t r = 0; r < rows_.size();) {
      if (basis_[r] < artificial_begin_) {
        ++r;
        continue;
      }
      std::size_t col = artificial_begin_;
      for (std::size_t j = 0; j < artificial_begin_; ++j) {
        if (!rows_[r][j].is_zero()) {
          col = j;
          break;
        }
      }
      if (col == artificial_begin_) {
        rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(r));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        continue;
      }
      Pivot(r, col);
      ++r;
    }
  }

  std::size_t structural_;
  std::size_t slack_begin_ = 0;
  std::size_t artificial_begin_ = 0;
  std::size_t columns_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> cost_;
};

}  // namespace internal

inline LpSolution SolveLp(const LinearProgram& lp) {
  if (lp.objective.size() != lp.variable_count) {
    throw PreconditionError("LP objective width differs from variable count");
  }
  internal::Tableau tableau(lp);
  return tableau.Solve(lp.objective);
}

}  // namespace fairdual

#endif  // FAIRDUAL_EXACT_LP_HPP_
