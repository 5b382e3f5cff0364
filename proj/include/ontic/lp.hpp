// Box-constrained linear feasibility and optimization.
//
//   find x  with  A x = b,  lower <= x <= upper      (solve_feasibility)
//   min c.x subject to the same                       (minimize)
//
// Every Infeasible verdict carries a dual vector y with
//   y.b - sum_j [max(0, g_j) upper_j + min(0, g_j) lower_j] > 0,  g = A^T y,
// which check_certificate re-evaluates from the raw problem data.
//
// The solver is a dense bounded-variable simplex (Bland's rule) and is
// instantiated for double and long double.

#pragma once

#include <limits>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace ontic {

template <typename Scalar>
struct BasicBoxLp {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  static constexpr Scalar inf() { return std::numeric_limits<Scalar>::infinity(); }

  Vector lower;
  Vector upper;
  Matrix eq_matrix;
  Vector eq_rhs;
  std::optional<Vector> objective;  // minimize objective . x

  Eigen::Index n_vars() const { return eq_matrix.cols(); }
  Eigen::Index n_eqs() const { return eq_matrix.rows(); }

  /// Throws std::invalid_argument on inconsistent shapes, NaNs, or
  /// lower > upper.
  void validate() const;
};

using BoxLp = BasicBoxLp<double>;

enum class LpStatus { Feasible, Infeasible, Optimal, Unbounded, NumericalFailure };

const char* to_string(LpStatus s);

struct SimplexOptions {
  double pivot_tol = 1e-9;
  double feasibility_tol = 1e-8;  // scaled by (1 + |b|_inf)
  double bound_tol = 1e-9;
  double certificate_margin = 1e-9;
  double optimality_tol = 1e-10;
  int refactor_every = 50;
  long max_iterations = 0;  // 0: 20 * (rows + cols) + 10000
};

template <typename Scalar>
struct BasicLpResult {
  using Vector = typename BasicBoxLp<Scalar>::Vector;

  LpStatus status = LpStatus::NumericalFailure;
  Vector solution;     // Feasible / Optimal
  Vector certificate;  // Infeasible
  Scalar margin = 0;   // check_certificate(lp, certificate) when Infeasible
  Scalar residual = 0;         // |A x - b|_inf of the returned solution
  Scalar objective_value = 0;  // Optimal
  long iterations = 0;
  std::string message;
};

using LpResult = BasicLpResult<double>;

template <typename Scalar>
BasicLpResult<Scalar> solve_feasibility(const BasicBoxLp<Scalar>& lp, const SimplexOptions& opts = {});

/// Requires lp.objective. Returns Optimal, Infeasible (with certificate),
/// Unbounded, or NumericalFailure.
template <typename Scalar>
BasicLpResult<Scalar> minimize(const BasicBoxLp<Scalar>& lp, const SimplexOptions& opts = {});

/// Margin of the Farkas inequality for `y`; positive proves infeasibility.
/// Coefficients g_j multiplying an infinite bound count as zero only at
/// rounding level (1e3 * eps * max_i |y_i| * sum_i |A_ij|); otherwise the margin is -inf.
template <typename Scalar>
Scalar check_certificate(const BasicBoxLp<Scalar>& lp, const typename BasicBoxLp<Scalar>::Vector& y);

/// Largest violation of A x = b and of the box, for solution checks.
template <typename Scalar>
Scalar equality_residual(const BasicBoxLp<Scalar>& lp, const typename BasicBoxLp<Scalar>::Vector& x);
template <typename Scalar>
Scalar bound_violation(const BasicBoxLp<Scalar>& lp, const typename BasicBoxLp<Scalar>::Vector& x);

template <typename Scalar>
struct BasicLinfResult {
  typename BasicBoxLp<Scalar>::Vector x;
  Scalar t = 0;
  LpStatus status = LpStatus::NumericalFailure;
};

using LinfResult = BasicLinfResult<double>;

/// min t  s.t.  -t <= (A x - b)_i <= t,  lower <= x <= upper,
/// and, when given, the exact side constraints eq_matrix x = eq_rhs.
template <typename Scalar>
BasicLinfResult<Scalar> minimize_linf_residual(
    const typename BasicBoxLp<Scalar>::Matrix& a, const typename BasicBoxLp<Scalar>::Vector& b,
    const typename BasicBoxLp<Scalar>::Vector& lower, const typename BasicBoxLp<Scalar>::Vector& upper,
    const typename BasicBoxLp<Scalar>::Matrix& eq_matrix = {},
    const typename BasicBoxLp<Scalar>::Vector& eq_rhs = {}, const SimplexOptions& opts = {});

inline LinfResult minimize_linf_residual(const Eigen::MatrixXd& a, const Eigen::VectorXd& b,
                                         const Eigen::VectorXd& lower, const Eigen::VectorXd& upper,
                                         const Eigen::MatrixXd& eq_matrix = {},
                                         const Eigen::VectorXd& eq_rhs = {}, const SimplexOptions& opts = {}) {
  return minimize_linf_residual<double>(a, b, lower, upper, eq_matrix, eq_rhs, opts);
}

}  // namespace ontic
