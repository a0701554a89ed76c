// Copyright 2026 The HiPPP Authors
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

#include "hippp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "hippp/errors.hpp"

namespace hippp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPivotTolerance = 1e-9;
constexpr double kRatioTieTolerance = 1e-12;
constexpr double kDegenerateStep = 1e-12;
constexpr int kDegenerateRunBeforeBland = 50;

// Tableau form of the simplex. Columns 0..n-1 are the structural variables,
// columns n..n+m-1 one artificial per equality row.
class BoundedSimplex {
 public:
  explicit BoundedSimplex(const LinearProgram& lp)
      : lp_(lp),
        m_(lp.num_constraints()),
        n_(lp.num_variables()),
        total_(n_ + m_),
        tableau_(m_, total_),
        value_(total_),
        lower_(total_),
        upper_(total_),
        cost_(total_, 0.0),
        reduced_(total_, 0.0),
        basis_(m_),
        row_of_(total_, -1),
        art_sign_(m_, 1.0) {}

  LpSolution run() {
    initialize();

    std::fill(cost_.begin(), cost_.end(), 0.0);
    for (int i = 0; i < m_; ++i) cost_[n_ + i] = -1.0;
    if (infeasibility() > 0.0) {
      if (iterate() == Outcome::kUnbounded) {
        throw InternalError("phase one of the simplex reported unbounded");
      }
    }
    LpSolution solution;
    if (infeasibility() > kLpFeasibilityTolerance) {
      solution.status = LpStatus::kInfeasible;
      solution.values.assign(value_.begin(), value_.begin() + n_);
      solution.objective_value = std::numeric_limits<double>::quiet_NaN();
      solution.iterations = iterations_;
      return solution;
    }
    drive_out_artificials();
    for (int i = 0; i < m_; ++i) {
      upper_[n_ + i] = 0.0;
      if (row_of_[n_ + i] < 0) value_[n_ + i] = 0.0;
    }

    std::fill(cost_.begin(), cost_.end(), 0.0);
    std::copy(lp_.objective.begin(), lp_.objective.end(), cost_.begin());
    const Outcome outcome = iterate();

    solution.iterations = iterations_;
    if (outcome == Outcome::kUnbounded) {
      solution.status = LpStatus::kUnbounded;
      solution.values.assign(value_.begin(), value_.begin() + n_);
      solution.objective_value = kInf;
      return solution;
    }

    recompute_basic_values();
    solution.status = LpStatus::kOptimal;
    solution.values.assign(value_.begin(), value_.begin() + n_);
    solution.objective_value = 0.0;
    for (int j = 0; j < n_; ++j) {
      solution.objective_value += lp_.objective[j] * solution.values[j];
    }
    certify(solution.values);
    return solution;
  }

 private:
  enum class Outcome { kOptimal, kUnbounded };

  void initialize() {
    for (int j = 0; j < n_; ++j) {
      lower_[j] = lp_.lower[j];
      upper_[j] = lp_.upper[j];
      value_[j] = std::clamp(0.0, lower_[j], upper_[j]);
    }
    for (int i = 0; i < m_; ++i) {
      const auto a = lp_.equality_matrix.row(i);
      double residual = lp_.equality_rhs[i];
      for (int j = 0; j < n_; ++j) residual -= a[j] * value_[j];
      art_sign_[i] = residual >= 0.0 ? 1.0 : -1.0;

      auto t = tableau_.row(i);
      for (int j = 0; j < n_; ++j) t[j] = art_sign_[i] * a[j];
      t[n_ + i] = 1.0;

      const int art = n_ + i;
      lower_[art] = 0.0;
      upper_[art] = kInf;
      value_[art] = std::abs(residual);
      basis_[i] = art;
      row_of_[art] = i;
    }
  }

  double infeasibility() const {
    double sum = 0.0;
    for (int i = 0; i < m_; ++i) sum += value_[n_ + i];
    return sum;
  }

  void compute_reduced_costs() {
    for (int j = 0; j < total_; ++j) {
      if (row_of_[j] >= 0) {
        reduced_[j] = 0.0;
        continue;
      }
      double d = cost_[j];
      for (int i = 0; i < m_; ++i) d -= cost_[basis_[i]] * tableau_(i, j);
      reduced_[j] = d;
    }
  }

  // Returns the entering column or -1 at optimality.
  int choose_entering(bool bland) const {
    int best = -1;
    double best_score = 0.0;
    for (int j = 0; j < total_; ++j) {
      if (row_of_[j] >= 0) continue;
      const double d = reduced_[j];
      const bool improves = (d > kLpOptimalityTolerance && value_[j] < upper_[j]) ||
                            (d < -kLpOptimalityTolerance && value_[j] > lower_[j]);
      if (!improves) continue;
      if (bland) return j;
      if (std::abs(d) > best_score) {
        best_score = std::abs(d);
        best = j;
      }
    }
    return best;
  }

  Outcome iterate() {
    compute_reduced_costs();
    bool bland = false;
    int degenerate_run = 0;
    const int iteration_limit = 1000 + 50 * total_;

    for (;;) {
      const int entering = choose_entering(bland);
      if (entering < 0) return Outcome::kOptimal;
      if (++iterations_ > iteration_limit) {
        throw InternalError(
            fmt::format("simplex exceeded {} iterations", iteration_limit));
      }
      const double dir = reduced_[entering] > 0.0 ? 1.0 : -1.0;

      // Ratio test: x_B changes at rate -dir * alpha per unit step.
      int leaving_row = -1;
      double step = kInf;
      for (int i = 0; i < m_; ++i) {
        const double alpha = tableau_(i, entering);
        if (std::abs(alpha) <= kPivotTolerance) continue;
        const double rate = -dir * alpha;
        const int var = basis_[i];
        double limit = kInf;
        if (rate < 0.0 && lower_[var] > -kInf) {
          limit = std::max(0.0, value_[var] - lower_[var]) / -rate;
        } else if (rate > 0.0 && upper_[var] < kInf) {
          limit = std::max(0.0, upper_[var] - value_[var]) / rate;
        }
        if (limit == kInf) continue;
        // Near-ties go to the lowest variable index.
        if (leaving_row < 0 || limit < step - kRatioTieTolerance ||
            (limit <= step + kRatioTieTolerance && var < basis_[leaving_row])) {
          leaving_row = i;
        }
        step = std::min(step, limit);
      }

      const double own_range = dir > 0.0 ? upper_[entering] - value_[entering]
                                         : value_[entering] - lower_[entering];
      if (own_range == kInf && leaving_row < 0) return Outcome::kUnbounded;

      const bool flip = own_range <= step;
      if (flip) step = own_range;

      degenerate_run = step <= kDegenerateStep ? degenerate_run + 1 : 0;
      if (degenerate_run > kDegenerateRunBeforeBland) bland = true;

      for (int i = 0; i < m_; ++i) {
        value_[basis_[i]] -= dir * step * tableau_(i, entering);
      }
      if (flip) {
        value_[entering] = dir > 0.0 ? upper_[entering] : lower_[entering];
        continue;
      }

      value_[entering] += dir * step;
      const int leaving = basis_[leaving_row];
      const double leaving_rate = -dir * tableau_(leaving_row, entering);
      value_[leaving] = leaving_rate < 0.0 ? lower_[leaving] : upper_[leaving];
      pivot(leaving_row, entering);
    }
  }

  void pivot(int r, int entering) {
    auto pivot_row = tableau_.row(r);
    const double inv = 1.0 / pivot_row[entering];
    for (double& v : pivot_row) v *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      const double factor = tableau_(i, entering);
      if (factor == 0.0) continue;
      auto row = tableau_.row(i);
      for (int j = 0; j < total_; ++j) row[j] -= factor * pivot_row[j];
      row[entering] = 0.0;
    }
    const double d = reduced_[entering];
    if (d != 0.0) {
      for (int j = 0; j < total_; ++j) reduced_[j] -= d * pivot_row[j];
    }
    reduced_[entering] = 0.0;

    const int leaving = basis_[r];
    row_of_[leaving] = -1;
    basis_[r] = entering;
    row_of_[entering] = r;
  }

  // Replaces basic artificials (all at zero after phase one) by structural
  // columns. Rows with no usable column are linearly dependent and keep
  // their artificial, fixed at zero.
  void drive_out_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      int best = -1;
      double best_abs = kPivotTolerance;
      for (int j = 0; j < n_; ++j) {
        if (row_of_[j] >= 0) continue;
        const double a = std::abs(tableau_(r, j));
        if (a > best_abs) {
          best_abs = a;
          best = j;
        }
      }
      if (best < 0) continue;
      const int art = basis_[r];
      pivot(r, best);
      value_[art] = 0.0;
    }
  }

  // Solves B x_B = b - N x_N from the original columns to shed the
  // round-off accumulated by tableau updates.
  void recompute_basic_values() {
    if (m_ == 0) return;
    DenseMatrix basis_matrix(m_, m_);
    std::vector<double> rhs(lp_.equality_rhs);
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) {
        if (row_of_[j] < 0) rhs[i] -= lp_.equality_matrix(i, j) * value_[j];
      }
      // Nonbasic artificials sit at zero.
    }
    for (int k = 0; k < m_; ++k) {
      const int var = basis_[k];
      for (int i = 0; i < m_; ++i) {
        if (var < n_) {
          basis_matrix(i, k) = lp_.equality_matrix(i, var);
        } else {
          basis_matrix(i, k) = (var - n_ == i) ? art_sign_[i] : 0.0;
        }
      }
    }
    // Gaussian elimination with partial pivoting.
    std::vector<int> perm(m_);
    std::iota(perm.begin(), perm.end(), 0);
    for (int col = 0; col < m_; ++col) {
      int piv = col;
      for (int i = col + 1; i < m_; ++i) {
        if (std::abs(basis_matrix(i, col)) > std::abs(basis_matrix(piv, col))) piv = i;
      }
      if (std::abs(basis_matrix(piv, col)) < 1e-14) {
        throw InternalError("final simplex basis is singular");
      }
      if (piv != col) {
        for (int k = 0; k < m_; ++k) std::swap(basis_matrix(piv, k), basis_matrix(col, k));
        std::swap(rhs[piv], rhs[col]);
      }
      for (int i = col + 1; i < m_; ++i) {
        const double factor = basis_matrix(i, col) / basis_matrix(col, col);
        if (factor == 0.0) continue;
        for (int k = col; k < m_; ++k) basis_matrix(i, k) -= factor * basis_matrix(col, k);
        rhs[i] -= factor * rhs[col];
      }
    }
    std::vector<double> xb(m_);
    for (int i = m_ - 1; i >= 0; --i) {
      double s = rhs[i];
      for (int k = i + 1; k < m_; ++k) s -= basis_matrix(i, k) * xb[k];
      xb[i] = s / basis_matrix(i, i);
    }
    for (int k = 0; k < m_; ++k) value_[basis_[k]] = xb[k];
  }

  void certify(std::span<const double> x) const {
    const double residual = equality_residual(lp_, x);
    const double violation = bound_violation(lp_, x);
    double artificial = 0.0;
    for (int i = 0; i < m_; ++i) artificial = std::max(artificial, std::abs(value_[n_ + i]));
    if (residual > kLpFeasibilityTolerance || violation > kLpFeasibilityTolerance ||
        artificial > kLpFeasibilityTolerance) {
      throw InternalError(fmt::format(
          "simplex solution failed certification: residual {:.3g}, bound "
          "violation {:.3g}, artificial {:.3g}",
          residual, violation, artificial));
    }
  }

  const LinearProgram& lp_;
  const int m_;
  const int n_;
  const int total_;
  DenseMatrix tableau_;
  std::vector<double> value_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<double> cost_;
  std::vector<double> reduced_;
  std::vector<int> basis_;
  std::vector<int> row_of_;
  std::vector<double> art_sign_;
  int iterations_ = 0;
};

}  // namespace

void LinearProgram::validate() const {
  const int n = num_variables();
  const int m = num_constraints();
  if (equality_matrix.rows() != m || (m > 0 && equality_matrix.cols() != n)) {
    throw ParameterError(fmt::format(
        "equality matrix is {}x{} but the program has {} rows and {} variables",
        equality_matrix.rows(), equality_matrix.cols(), m, n));
  }
  if (static_cast<int>(lower.size()) != n || static_cast<int>(upper.size()) != n) {
    throw ParameterError(fmt::format("bounds sized {}/{} for {} variables",
                                     lower.size(), upper.size(), n));
  }
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(objective[j])) {
      throw ParameterError(fmt::format("objective coefficient {} is not finite", j));
    }
    if (std::isnan(lower[j]) || std::isnan(upper[j]) || lower[j] > upper[j] ||
        lower[j] == kInf || upper[j] == -kInf) {
      throw ParameterError(fmt::format("variable {} has invalid bounds [{}, {}]",
                                       j, lower[j], upper[j]));
    }
  }
  for (int i = 0; i < m; ++i) {
    if (!std::isfinite(equality_rhs[i])) {
      throw ParameterError(fmt::format("right-hand side {} is not finite", i));
    }
    for (int j = 0; j < n; ++j) {
      if (!std::isfinite(equality_matrix(i, j))) {
        throw ParameterError(fmt::format("A({}, {}) is not finite", i, j));
      }
    }
  }
}

std::string_view to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

LpSolution solve(const LinearProgram& lp) {
  lp.validate();
  return BoundedSimplex(lp).run();
}

double equality_residual(const LinearProgram& lp, std::span<const double> x) {
  double worst = 0.0;
  for (int i = 0; i < lp.num_constraints(); ++i) {
    double r = -lp.equality_rhs[i];
    const auto a = lp.equality_matrix.row(i);
    for (int j = 0; j < lp.num_variables(); ++j) r += a[j] * x[j];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

double bound_violation(const LinearProgram& lp, std::span<const double> x) {
  double worst = 0.0;
  for (int j = 0; j < lp.num_variables(); ++j) {
    worst = std::max({worst, lp.lower[j] - x[j], x[j] - lp.upper[j]});
  }
  return worst;
}

}  // namespace hippp
