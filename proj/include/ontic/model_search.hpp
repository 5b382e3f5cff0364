// Finite ontic models: K hidden states with unit weights, an epistemic matrix
// rho(X_k|psi_i) and a response matrix P(phi_j|X_k), judged by how well
//   sum_k P(phi_j|X_k) rho(X_k|psi_i)  reproduces  Tr[P_phi_j P_psi_i].
//
// alternating_search only ever produces upper bounds on the smallest K that
// reaches a given residual.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ontic/quantum.hpp"

namespace ontic {

struct BornTable {
  std::vector<PureState> states;
  std::vector<HermitianOperator> effects;
  RMatrix probabilities;                          // S x M
  std::vector<std::vector<std::size_t>> groups;   // complete measurements (effect indices)
};

/// probabilities(i, j) = Tr[E_j P_psi_i]. Each group must sum to identity.
BornTable born_table(const std::vector<PureState>& states, const std::vector<HermitianOperator>& effects,
                     std::vector<std::vector<std::size_t>> groups = {});

struct ClassicalModel {
  RMatrix epistemic;  // S x K, rows on the probability simplex
  RMatrix response;   // M x K, entries in [0, 1]

  Eigen::Index k() const { return epistemic.cols(); }
  /// Throws PreconditionError unless shapes agree, epistemic >= -tol with unit
  /// row sums, and response lies in [-tol, 1 + tol].
  void validate(double tol = 1e-10) const;
};

/// max_ij |sum_k response(j,k) epistemic(i,k) - probabilities(i,j)|
double model_residual(const ClassicalModel& model, const BornTable& table);

/// One ontic state per net state: identity epistemic matrix, response
/// |<phi_j|psi_i>|^2.
ClassicalModel delta_model(const std::vector<PureState>& states, const std::vector<HermitianOperator>& effects);

/// |x><x| for x = 0..dim-1.
std::vector<HermitianOperator> position_projectors(std::size_t dim);

/// Ontic states (x, psi_i) at column i * dim + x; response is the indicator
/// of x for the position projectors.
ClassicalModel bohm_position_model(const std::vector<PureState>& states);

/// Appends `extra` zero columns to both matrices.
ClassicalModel pad_model(const ClassicalModel& model, Eigen::Index extra);

struct SearchOptions {
  int restarts = 8;
  int iters = 200;
  std::uint64_t seed = 0;
  double stop_tol = 1e-10;
  /// Tried before the random restarts, in order.
  std::vector<ClassicalModel> initial_models;
};

struct SearchResult {
  ClassicalModel model;
  double residual = 0.0;
  int iterations = 0;  // sweeps taken by the winning run
  int runs = 0;        // initial models + random restarts
  std::uint64_t seed = 0;
  /// Residual after every half-step of the winning run, starting with the
  /// initial residual.
  std::vector<double> trace;
};

/// Alternating minimization: per-state rows over the simplex with responses
/// fixed, then per-effect rows over [0,1]^K with epistemic fixed, each by
/// minimize_linf_residual. Throws std::runtime_error if a half-step increases
/// the residual.
SearchResult alternating_search(const BornTable& table, Eigen::Index k, const SearchOptions& opts);

struct ScanRow {
  Eigen::Index k = 0;
  double best_residual = 0.0;
  int restarts = 0;
  int iters = 0;
};

struct SearchReport {
  std::uint64_t seed = 0;
  std::vector<ScanRow> rows;
  std::vector<ClassicalModel> best_models;  // aligned with rows
};

/// K = 1..k_max; K is warm-started from the best K-1 model padded with a zero
/// column (and from the padded delta model once K >= S), so residuals are
/// non-increasing in K.
SearchReport min_k_scan(const BornTable& table, Eigen::Index k_max, int restarts, std::uint64_t seed,
                        int iters = 200);

}  // namespace ontic
