#pragma once

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "fairtile/errors.hpp"

namespace fairtile {

struct SolverConfig {
  double tol_residual = 1e-12;  // convergence target for the residual inf-norm
  int max_iter = 50;
  double fd_step = 1e-6;        // central-difference step
  double damping = 0.5;         // backtracking shrink factor
};

struct SolveReport {
  std::vector<double> solution;
  double residual_norm = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
  // Residual inf-norm at x0 and after every accepted iterate.
  std::vector<double> residual_history;
};

// Dense row-major matrix; the systems here are at most 24x24.
class Matrix {
 public:
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0.0) {}

  double& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

 private:
  int rows_;
  int cols_;
  std::vector<double> data_;
};

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class RankDeficiencyError : public Error {
 public:
  using Error::Error;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& message, SolveReport best)
      : Error(message), best_(std::move(best)) {}
  const SolveReport& best() const { return best_; }

 private:
  SolveReport best_;
};

using ResidualFn = std::function<std::vector<double>(std::span<const double>)>;
using JacobianFn = std::function<Matrix(std::span<const double>)>;

// Gaussian elimination with partial pivoting; throws SingularMatrixError when
// a pivot magnitude falls below pivot_tol.
std::vector<double> solve_linear(Matrix a, std::vector<double> b, double pivot_tol = 1e-14);

// Determinant via LU with partial pivoting.
double determinant(Matrix a);

// Central-difference Jacobian, k x m for f: R^m -> R^k.
Matrix finite_diff_jacobian(const ResidualFn& f, std::span<const double> x, double step);

// Damped Newton for square systems. Backtracks by cfg.damping until the
// residual norm strictly decreases (at most 30 shrinks per iteration).
SolveReport newton_solve(const ResidualFn& residual, const std::optional<JacobianFn>& jacobian,
                         std::span<const double> x0, const SolverConfig& cfg = {});

// Gauss-Newton for underdetermined systems (k <= m). Every step is the
// minimum-norm solution of the linearized system, via normal equations on the
// k x k Gram matrix, so the iterate stays locally nearest to x0.
SolveReport gauss_newton_min_norm(const ResidualFn& residual, std::span<const double> x0,
                                  const SolverConfig& cfg = {});

}  // namespace fairtile
