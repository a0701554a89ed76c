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

#ifndef HIPPP_LP_HPP_
#define HIPPP_LP_HPP_

#include <span>
#include <string_view>
#include <vector>

namespace hippp {

// Row-major dense matrix. Sized for the small power-flow programs solved
// here (tens of rows, at most a few hundred columns).
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int r, int c) { return data_[r * cols_ + c]; }
  double operator()(int r, int c) const { return data_[r * cols_ + c]; }

  std::span<double> row(int r) { return {data_.data() + r * cols_, static_cast<size_t>(cols_)}; }
  std::span<const double> row(int r) const {
    return {data_.data() + r * cols_, static_cast<size_t>(cols_)};
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// maximize objective . x  subject to  A x = b,  lower <= x <= upper.
// Bounds may be +/- infinity.
struct LinearProgram {
  std::vector<double> objective;
  DenseMatrix equality_matrix;
  std::vector<double> equality_rhs;
  std::vector<double> lower;
  std::vector<double> upper;

  int num_variables() const { return static_cast<int>(objective.size()); }
  int num_constraints() const { return static_cast<int>(equality_rhs.size()); }

  // Throws ParameterError on inconsistent dimensions, NaNs or crossed bounds.
  void validate() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<double> values;
  double objective_value = 0.0;
  int iterations = 0;
};

inline constexpr double kLpFeasibilityTolerance = 1e-8;
inline constexpr double kLpOptimalityTolerance = 1e-9;

// Bounded-variable primal simplex (two phases, artificial start basis).
// Pricing is Dantzig's rule with lowest-index tie breaking; after a run of
// degenerate pivots it switches to Bland's rule for the rest of the phase.
// Optimal solutions are re-derived from the final basis and checked against
// the feasibility tolerance; a failed check throws InternalError.
LpSolution solve(const LinearProgram& lp);

// Max-abs residual of A x - b.
double equality_residual(const LinearProgram& lp, std::span<const double> x);
// Largest amount by which any x_i leaves [lower_i, upper_i].
double bound_violation(const LinearProgram& lp, std::span<const double> x);

}  // namespace hippp

#endif  // HIPPP_LP_HPP_
