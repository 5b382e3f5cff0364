#include "ontic/frames.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

namespace ontic {

FrameOperator FrameOperator::dense(HermitianOperator op) {
  FrameOperator f;
  f.dense_ = std::move(op);
  return f;
}

FrameOperator FrameOperator::rank_one(CVector v, double scale) {
  if (!(scale >= 0.0)) throw PreconditionError("rank-one frame element needs a nonnegative scale");
  if (v.size() == 0) throw PreconditionError("rank-one frame element needs a nonempty vector");
  FrameOperator f;
  f.v_ = std::move(v);
  f.scale_ = scale;
  return f;
}

std::size_t FrameOperator::dim() const {
  return dense_ ? dense_->dim() : static_cast<std::size_t>(v_.size());
}

double FrameOperator::trace_with(const PureState& psi) const {
  if (psi.dim() != dim()) throw DimensionError("frame element and state differ in dimension");
  if (dense_) return dense_->expectation(psi);
  return scale_ * std::norm(v_.dot(psi.amplitudes()));
}

double FrameOperator::trace_with(const HermitianOperator& rho) const {
  if (rho.dim() != dim()) throw DimensionError("frame element and density operator differ in dimension");
  if (dense_) return trace_product(*dense_, rho);
  return scale_ * v_.dot(rho.matrix() * v_).real();
}

HermitianOperator FrameOperator::to_dense() const {
  if (dense_) return *dense_;
  return HermitianOperator(CMatrix(scale_ * (v_ * v_.adjoint())));
}

void FrameOperator::accumulate(CMatrix& acc, double w) const {
  if (dense_) {
    acc += w * dense_->matrix();
  } else {
    acc.noalias() += (w * scale_) * (v_ * v_.adjoint());
  }
}

double FrameOperator::min_eigenvalue() const {
  if (dense_) return ontic::min_eigenvalue(*dense_);
  // scale |v><v| has spectrum {scale |v|^2, 0, ..., 0}.
  const double top = scale_ * v_.squaredNorm();
  return v_.size() > 1 ? std::min(0.0, top) : top;
}

Frame::Frame(std::string name, std::size_t dim, std::vector<FramePoint> points)
    : name_(std::move(name)), dim_(dim), points_(std::move(points)), sum_(HermitianOperator::zero(dim)) {
  if (dim_ == 0) throw PreconditionError("frame dimension must be positive");
  if (points_.empty()) throw PreconditionError("frame needs at least one point");
  const auto d = static_cast<Eigen::Index>(dim_);
  CMatrix acc = CMatrix::Zero(d, d);
  min_eig_ = std::numeric_limits<double>::infinity();
  for (const auto& p : points_) {
    if (p.op.dim() != dim_) throw DimensionError("frame point '" + p.label + "' has the wrong dimension");
    if (!(p.weight > 0.0) || !std::isfinite(p.weight)) {
      throw PreconditionError("frame point '" + p.label + "' has a nonpositive weight");
    }
    p.op.accumulate(acc, p.weight);
    const double lo = p.op.min_eigenvalue();
    min_eig_ = std::min(min_eig_, lo);
    if (!p.op.is_rank_one()) {
      psd_ = psd_ && lo >= -kPsdRelTol * (1.0 + std::abs(p.op.to_dense().trace()));
    }
  }
  sum_ = HermitianOperator::hermitize(acc);
  defect_ = (sum_.matrix() - CMatrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

Frame qubit_trine_frame() {
  const auto id = HermitianOperator::identity(2);
  const auto sx = pauli_x();
  const auto sz = pauli_z();
  const double c = std::sqrt(3.0) / 6.0;
  std::vector<FramePoint> pts;
  pts.push_back({"1", {}, 1.0, FrameOperator::dense((id + sz) * (1.0 / 3.0))});
  pts.push_back({"2", {}, 1.0, FrameOperator::dense(id * (1.0 / 3.0) - sz * (1.0 / 6.0) + sx * c)});
  pts.push_back({"3", {}, 1.0, FrameOperator::dense(id * (1.0 / 3.0) - sz * (1.0 / 6.0) - sx * c)});
  return Frame("trine", 2, std::move(pts));
}

Frame bloch_covariant_frame(int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2) throw PreconditionError("bloch frame needs n_theta, n_phi >= 2");
  const double pi = std::numbers::pi;
  const double dtheta = pi / n_theta;
  const double dphi = 2.0 * pi / n_phi;
  std::vector<FramePoint> pts;
  pts.reserve(static_cast<std::size_t>(n_theta) * static_cast<std::size_t>(n_phi));
  for (int i = 0; i < n_theta; ++i) {
    const double theta = (i + 0.5) * dtheta;
    const double w = std::sin(theta) * dtheta * dphi;
    for (int j = 0; j < n_phi; ++j) {
      const double phi = (j + 0.5) * dphi;
      pts.push_back({std::to_string(i) + ":" + std::to_string(j), {theta, phi}, w,
                     FrameOperator::rank_one(bloch_state(theta, phi).amplitudes(), 1.0 / (2.0 * pi))});
    }
  }
  return Frame("bloch", 2, std::move(pts));
}

std::vector<std::array<double, 2>> disk_grid(double radius, double step) {
  if (!(radius > 0.0) || !(step > 0.0) || !(step < radius)) {
    throw PreconditionError("grid needs radius > 0 and 0 < step < radius");
  }
  const long kmax = static_cast<long>(std::floor(radius / step + 1e-9));
  const double r2 = radius * radius * (1.0 + 1e-12);
  std::vector<std::array<double, 2>> nodes;
  for (long i = -kmax; i <= kmax; ++i) {
    for (long j = -kmax; j <= kmax; ++j) {
      const double x = static_cast<double>(i) * step;
      const double y = static_cast<double>(j) * step;
      if (x * x + y * y <= r2) nodes.push_back({x, y});
    }
  }
  return nodes;
}

namespace {

std::string coord_label(double x, double y) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g:%.6g", x, y);
  return buf;
}

}  // namespace

Frame husimi_frame(int trunc, double radius, double step) {
  if (trunc < 2) throw PreconditionError("husimi frame needs trunc >= 2");
  const auto nodes = disk_grid(radius, step);
  const double w = step * step;
  std::vector<FramePoint> pts;
  pts.reserve(nodes.size());
  for (const auto& [x, y] : nodes) {
    pts.push_back({coord_label(x, y), {x, y}, w,
                   FrameOperator::rank_one(coherent_state({x, y}, static_cast<std::size_t>(trunc)).amplitudes(),
                                           1.0 / std::numbers::pi)});
  }
  return Frame("husimi", static_cast<std::size_t>(trunc), std::move(pts));
}

Frame projector_frame(const std::vector<PureState>& states) {
  if (states.empty()) throw PreconditionError("projector frame needs at least one state");
  std::vector<FramePoint> pts;
  for (std::size_t i = 0; i < states.size(); ++i) {
    pts.push_back({std::to_string(i), {}, 1.0, FrameOperator::rank_one(states[i].amplitudes(), 1.0)});
  }
  return Frame("projectors", states.front().dim(), std::move(pts));
}

double weighted_sum(const RVector& values, const RVector& weights) {
  // Neumaier summation, fixed order.
  double sum = 0.0;
  double comp = 0.0;
  for (Eigen::Index k = 0; k < values.size(); ++k) {
    const double term = values(k) * weights(k);
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  return sum + comp;
}

namespace {

template <typename Density>
QuasiDistribution distribution_impl(const Frame& frame, const Density& state) {
  if (state.dim() != frame.dim()) throw DimensionError("frame_distribution: dimension mismatch");
  QuasiDistribution out;
  out.source = frame.name();
  const auto n = static_cast<Eigen::Index>(frame.size());
  out.values.resize(n);
  out.weights.resize(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& p = frame[static_cast<std::size_t>(k)];
    out.values(k) = p.op.trace_with(state);
    out.weights(k) = p.weight;
  }
  out.completeness_defect = frame.completeness_defect();
  return out;
}

}  // namespace

QuasiDistribution frame_distribution(const Frame& frame, const PureState& psi) {
  return distribution_impl(frame, psi);
}

QuasiDistribution frame_distribution(const Frame& frame, const HermitianOperator& rho) {
  return distribution_impl(frame, rho);
}

ConditionReport check_conditions(const QuasiDistribution& dist) {
  ConditionReport r;
  r.min_value = dist.values.size() > 0 ? dist.values.minCoeff() : 0.0;
  r.normalization = weighted_sum(dist.values, dist.weights);
  r.completeness_defect = dist.completeness_defect;
  r.nonneg_ok = r.min_value >= -kDistributionTol;
  r.normalization_ok = std::abs(r.normalization - 1.0) <= dist.completeness_defect + kDistributionTol;
  return r;
}

}  // namespace ontic
