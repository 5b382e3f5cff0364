// Operator frames {(X_k, A_k, w_k)} and the quasi-distributions they induce,
// rho(X_k|psi) = Tr[A_k P_psi].

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ontic/quantum.hpp"

namespace ontic {

/// A frame element, stored either densely or as scale * |v><v|.
/// Phase-space frames are rank one at every node, so the factored form keeps
/// large grids cheap.
class FrameOperator {
 public:
  static FrameOperator dense(HermitianOperator op);
  /// scale must be >= 0.
  static FrameOperator rank_one(CVector v, double scale);

  std::size_t dim() const;
  bool is_rank_one() const { return !dense_.has_value(); }

  /// Tr[A P_psi].
  double trace_with(const PureState& psi) const;
  /// Tr[A rho].
  double trace_with(const HermitianOperator& rho) const;

  HermitianOperator to_dense() const;
  /// acc += w * A
  void accumulate(CMatrix& acc, double w) const;
  double min_eigenvalue() const;

 private:
  FrameOperator() = default;
  std::optional<HermitianOperator> dense_;
  CVector v_;
  double scale_ = 0.0;
};

struct FramePoint {
  std::string label;
  std::vector<double> coords;  // (theta, phi) on the sphere, (Re a, Im a) in phase space
  double weight = 0.0;         // measure element dX
  FrameOperator op;
};

class Frame {
 public:
  /// Validates shared dimension and positive weights; computes the frame sum
  /// and its deviation from the identity. Weights are never rescaled.
  Frame(std::string name, std::size_t dim, std::vector<FramePoint> points);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<FramePoint>& points() const { return points_; }
  const FramePoint& operator[](std::size_t k) const { return points_[k]; }

  /// sum_k w_k A_k
  const HermitianOperator& frame_sum() const { return sum_; }
  /// max_ij |(sum_k w_k A_k - 1)_ij|
  double completeness_defect() const { return defect_; }
  /// Smallest eigenvalue over all frame operators.
  double min_operator_eigenvalue() const { return min_eig_; }
  /// Every A_k passes the scale-aware PSD test.
  bool is_psd() const { return psd_; }

 private:
  std::string name_;
  std::size_t dim_;
  std::vector<FramePoint> points_;
  HermitianOperator sum_;
  double defect_ = 0.0;
  double min_eig_ = 0.0;
  bool psd_ = true;
};

/// Values of a frame-induced density, aligned with the frame points (or with
/// a phase-space grid for Wigner values).
struct QuasiDistribution {
  std::string source;
  RVector values;
  RVector weights;
  double completeness_defect = 0.0;
};

struct ConditionReport {
  bool nonneg_ok = false;
  bool normalization_ok = false;
  double min_value = 0.0;
  double normalization = 0.0;
  double completeness_defect = 0.0;
};

inline constexpr double kDistributionTol = 1e-10;

Frame qubit_trine_frame();
Frame bloch_covariant_frame(int n_theta, int n_phi);
Frame husimi_frame(int trunc, double radius, double step);
/// Frame whose elements are the projectors of `states` with unit weights.
Frame projector_frame(const std::vector<PureState>& states);

/// Square grid {(i*step, j*step)} restricted to the closed disk of `radius`,
/// ordered by i then j. Throws PreconditionError on invalid parameters.
std::vector<std::array<double, 2>> disk_grid(double radius, double step);

QuasiDistribution frame_distribution(const Frame& frame, const PureState& psi);
QuasiDistribution frame_distribution(const Frame& frame, const HermitianOperator& rho);

ConditionReport check_conditions(const QuasiDistribution& dist);

/// Compensated sum of values_k * weights_k in index order.
double weighted_sum(const RVector& values, const RVector& weights);

// Wigner function, W(a) = (2/pi) <psi| D(a) Parity D(a)^dag |psi>.
// Quadratures are q = sqrt(2) Re a, p = sqrt(2) Im a.

double wigner_at(const PureState& psi, Complex alpha);
/// Wigner values on disk_grid(radius, step) with weights step^2.
QuasiDistribution wigner_values(const PureState& psi, double radius, double step);
/// Position density at each q, integrating W over Im a in [-radius, radius].
RVector wigner_position_marginal(const PureState& psi, const RVector& q_nodes, double radius,
                                 double step);

}  // namespace ontic
