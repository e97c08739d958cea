#include "fairtile/nlsolve.hpp"

#include <algorithm>
#include <cmath>

namespace fairtile {

namespace {

double inf_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Shared elimination core. Returns false when a pivot falls below pivot_tol.
bool eliminate(Matrix& a, std::vector<double>& b, double pivot_tol, double* det_out) {
  const int n = a.rows();
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot_row = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot_row, col))) pivot_row = r;
    if (std::abs(a(pivot_row, col)) < pivot_tol) return false;
    if (pivot_row != col) {
      for (int c = col; c < n; ++c) std::swap(a(col, c), a(pivot_row, c));
      std::swap(b[static_cast<std::size_t>(col)], b[static_cast<std::size_t>(pivot_row)]);
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double factor = a(r, col) / a(col, col);
      if (factor == 0.0) continue;
      for (int c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
      b[static_cast<std::size_t>(r)] -= factor * b[static_cast<std::size_t>(col)];
    }
  }
  if (det_out) *det_out = det;
  return true;
}

std::vector<double> back_substitute(const Matrix& a, const std::vector<double>& b) {
  const int n = a.rows();
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double acc = b[static_cast<std::size_t>(r)];
    for (int c = r + 1; c < n; ++c) acc -= a(r, c) * x[static_cast<std::size_t>(c)];
    x[static_cast<std::size_t>(r)] = acc / a(r, r);
  }
  return x;
}

}  // namespace

std::vector<double> solve_linear(Matrix a, std::vector<double> b, double pivot_tol) {
  if (a.rows() != a.cols() || a.rows() != static_cast<int>(b.size()))
    throw DegenerateInputError("solve_linear: dimension mismatch");
  if (!eliminate(a, b, pivot_tol, nullptr))
    throw SingularMatrixError("linear solve hit a pivot below tolerance");
  return back_substitute(a, b);
}

double determinant(Matrix a) {
  if (a.rows() != a.cols()) throw DegenerateInputError("determinant: matrix not square");
  std::vector<double> dummy(static_cast<std::size_t>(a.rows()), 0.0);
  double det = 1.0;
  if (!eliminate(a, dummy, 0.0, &det)) return 0.0;
  return det;
}

Matrix finite_diff_jacobian(const ResidualFn& f, std::span<const double> x, double step) {
  if (!(step > 0.0)) throw DegenerateInputError("finite_diff_jacobian: step must be positive");
  std::vector<double> xp(x.begin(), x.end());
  std::vector<double> xm(x.begin(), x.end());
  const int m = static_cast<int>(x.size());
  const std::vector<double> f0 = f(x);
  const int k = static_cast<int>(f0.size());
  Matrix jac(k, m);
  for (int j = 0; j < m; ++j) {
    xp[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)] + step;
    xm[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)] - step;
    const std::vector<double> fp = f(xp);
    const std::vector<double> fm = f(xm);
    for (int i = 0; i < k; ++i)
      jac(i, j) = (fp[static_cast<std::size_t>(i)] - fm[static_cast<std::size_t>(i)]) / (2.0 * step);
    xp[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
    xm[static_cast<std::size_t>(j)] = x[static_cast<std::size_t>(j)];
  }
  return jac;
}

namespace {

struct LineSearchResult {
  std::vector<double> x;
  std::vector<double> f;
  double norm;
  bool accepted;
};

LineSearchResult backtrack(const ResidualFn& residual, std::span<const double> x,
                           std::span<const double> dx, double current_norm, double damping) {
  double t = 1.0;
  LineSearchResult r{{}, {}, 0.0, false};
  for (int halving = 0; halving <= 30; ++halving) {
    std::vector<double> xt(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) xt[i] = x[i] + t * dx[i];
    std::vector<double> ft = residual(xt);
    const double ftn = inf_norm(ft);
    if (ftn < current_norm) {
      r.x = std::move(xt);
      r.f = std::move(ft);
      r.norm = ftn;
      r.accepted = true;
      return r;
    }
    t *= damping;
  }
  return r;
}

SolveReport make_report(std::vector<double> x, double norm, int iterations, bool converged,
                        std::vector<double> history) {
  SolveReport report;
  report.solution = std::move(x);
  report.residual_norm = norm;
  report.iterations = iterations;
  report.converged = converged;
  report.residual_history = std::move(history);
  return report;
}

}  // namespace

SolveReport newton_solve(const ResidualFn& residual, const std::optional<JacobianFn>& jacobian,
                         std::span<const double> x0, const SolverConfig& cfg) {
  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> f = residual(x);
  if (f.size() != x.size())
    throw DegenerateInputError("newton_solve: residual dimension differs from unknown count");
  double fn = inf_norm(f);
  std::vector<double> history{fn};
  if (fn <= cfg.tol_residual) return make_report(std::move(x), fn, 0, true, std::move(history));

  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    Matrix jac = jacobian ? (*jacobian)(x) : finite_diff_jacobian(residual, x, cfg.fd_step);
    std::vector<double> rhs(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) rhs[i] = -f[i];
    std::vector<double> dx;
    try {
      dx = solve_linear(std::move(jac), std::move(rhs), 1e-14);
    } catch (const SingularMatrixError&) {
      throw SingularMatrixError("newton_solve: singular Jacobian");
    }
    LineSearchResult step = backtrack(residual, x, dx, fn, cfg.damping);
    if (!step.accepted)
      throw NonConvergenceError("newton_solve: line search stalled",
                                make_report(std::move(x), fn, iter - 1, false, std::move(history)));
    x = std::move(step.x);
    f = std::move(step.f);
    fn = step.norm;
    history.push_back(fn);
    if (fn <= cfg.tol_residual) return make_report(std::move(x), fn, iter, true, std::move(history));
  }
  throw NonConvergenceError("newton_solve: iteration budget exhausted",
                            make_report(std::move(x), fn, cfg.max_iter, false, std::move(history)));
}

SolveReport gauss_newton_min_norm(const ResidualFn& residual, std::span<const double> x0,
                                  const SolverConfig& cfg) {
  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> f = residual(x);
  const int m = static_cast<int>(x.size());
  const int k = static_cast<int>(f.size());
  if (k > m)
    throw DegenerateInputError("gauss_newton_min_norm: more constraints than unknowns");
  double fn = inf_norm(f);
  std::vector<double> history{fn};
  if (fn <= cfg.tol_residual) return make_report(std::move(x), fn, 0, true, std::move(history));

  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    const Matrix jac = finite_diff_jacobian(residual, x, cfg.fd_step);
    Matrix gram(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        double acc = 0.0;
        for (int c = 0; c < m; ++c) acc += jac(i, c) * jac(j, c);
        gram(i, j) = acc;
      }
    std::vector<double> rhs(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) rhs[static_cast<std::size_t>(i)] = -f[static_cast<std::size_t>(i)];
    std::vector<double> lambda;
    try {
      lambda = solve_linear(std::move(gram), std::move(rhs), 1e-12);
    } catch (const SingularMatrixError&) {
      throw RankDeficiencyError("gauss_newton_min_norm: constraint Jacobian is rank deficient");
    }
    std::vector<double> dx(static_cast<std::size_t>(m), 0.0);
    for (int c = 0; c < m; ++c) {
      double acc = 0.0;
      for (int i = 0; i < k; ++i) acc += jac(i, c) * lambda[static_cast<std::size_t>(i)];
      dx[static_cast<std::size_t>(c)] = acc;
    }
    LineSearchResult step = backtrack(residual, x, dx, fn, cfg.damping);
    if (!step.accepted)
      throw NonConvergenceError("gauss_newton_min_norm: line search stalled",
                                make_report(std::move(x), fn, iter - 1, false, std::move(history)));
    x = std::move(step.x);
    f = std::move(step.f);
    fn = step.norm;
    history.push_back(fn);
    if (fn <= cfg.tol_residual) return make_report(std::move(x), fn, iter, true, std::move(history));
  }
  throw NonConvergenceError("gauss_newton_min_norm: iteration budget exhausted",
                            make_report(std::move(x), fn, cfg.max_iter, false, std::move(history)));
}

}  // namespace fairtile
