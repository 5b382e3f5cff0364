#include "ontic/quantum.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace ontic {

PureState::PureState(CVector amplitudes) : amp_(std::move(amplitudes)) {
  if (amp_.size() == 0) throw DimensionError("state must have positive dimension");
  const double n = amp_.norm();
  if (std::abs(n - 1.0) > kNormTol) {
    throw PreconditionError("state is not normalized (norm " + std::to_string(n) + ")");
  }
}

PureState PureState::normalized(const CVector& v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw PreconditionError("cannot normalize a zero vector");
  return PureState(v / n);
}

HermitianOperator::HermitianOperator(CMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw DimensionError("operator must be a nonempty square matrix");
  }
  const double scale = std::max(1.0, m_.cwiseAbs().maxCoeff());
  const double dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (dev > kHermitianTol * scale) throw PreconditionError("operator is not Hermitian");
}

HermitianOperator HermitianOperator::hermitize(const CMatrix& m) {
  return HermitianOperator(CMatrix((m + m.adjoint()) * 0.5));
}

HermitianOperator HermitianOperator::identity(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return HermitianOperator(CMatrix::Identity(d, d));
}

HermitianOperator HermitianOperator::zero(std::size_t dim) {
  const auto d = static_cast<Eigen::Index>(dim);
  return HermitianOperator(CMatrix::Zero(d, d));
}

double HermitianOperator::expectation(const PureState& psi) const {
  if (psi.dim() != dim()) throw DimensionError("expectation: dimension mismatch");
  return psi.amplitudes().dot(m_ * psi.amplitudes()).real();
}

HermitianOperator HermitianOperator::operator+(const HermitianOperator& o) const {
  if (o.dim() != dim()) throw DimensionError("operator sum: dimension mismatch");
  return HermitianOperator(CMatrix(m_ + o.m_));
}

HermitianOperator HermitianOperator::operator-(const HermitianOperator& o) const {
  if (o.dim() != dim()) throw DimensionError("operator difference: dimension mismatch");
  return HermitianOperator(CMatrix(m_ - o.m_));
}

HermitianOperator HermitianOperator::operator*(double s) const {
  return HermitianOperator(CMatrix(m_ * s));
}

double trace_product(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw DimensionError("trace_product: dimension mismatch");
  // Tr[AB] = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
  return (a.matrix().array() * b.matrix().conjugate().array()).sum().real();
}

double max_abs_difference(const HermitianOperator& a, const HermitianOperator& b) {
  if (a.dim() != b.dim()) throw DimensionError("max_abs_difference: dimension mismatch");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

Povm::Povm(std::vector<HermitianOperator> effects, double tol) : effects_(std::move(effects)) {
  if (effects_.empty()) throw PreconditionError("POVM needs at least one effect");
  const std::size_t d = effects_.front().dim();
  CMatrix sum = CMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (const auto& e : effects_) {
    if (e.dim() != d) throw DimensionError("POVM effects differ in dimension");
    if (!is_psd(e)) throw PreconditionError("POVM effect is not positive semidefinite");
    sum += e.matrix();
  }
  sum -= CMatrix::Identity(sum.rows(), sum.cols());
  if (sum.cwiseAbs().maxCoeff() > tol) throw PreconditionError("POVM effects do not sum to identity");
}

double born_probability(const PureState& phi, const PureState& psi) {
  if (phi.dim() != psi.dim()) throw DimensionError("born_probability: dimension mismatch");
  const double p = std::norm(phi.amplitudes().dot(psi.amplitudes()));
  return std::min(1.0, p);
}

HermitianOperator projector(const PureState& psi) {
  const CVector& v = psi.amplitudes();
  return HermitianOperator(CMatrix(v * v.adjoint()));
}

double min_eigenvalue(const HermitianOperator& op) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(op.matrix(), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_psd(const HermitianOperator& op, double rel_tol) {
  return min_eigenvalue(op) >= -rel_tol * (1.0 + std::abs(op.trace()));
}

bool is_rank_one_projector(const HermitianOperator& op, double tol) {
  const CMatrix& m = op.matrix();
  if (std::abs(op.trace() - 1.0) > tol) return false;
  return (m * m - m).cwiseAbs().maxCoeff() <= tol;
}

PureState basis_state(std::size_t i, std::size_t dim) {
  if (i >= dim) throw PreconditionError("basis index out of range");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(i)) = 1.0;
  return PureState(std::move(v));
}

PureState bloch_state(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
    throw PreconditionError("bloch_state: theta must lie in [0, pi]");
  }
  CVector v(2);
  v(0) = std::cos(theta / 2);
  v(1) = std::polar(std::sin(theta / 2), phi);
  return PureState::normalized(v);
}

PureState fock_state(std::size_t n, std::size_t trunc) {
  if (n >= trunc) throw PreconditionError("fock_state: n must be below the truncation");
  return basis_state(n, trunc);
}

namespace {

// alpha^n / sqrt(n!) for n < trunc, without the exp(-|alpha|^2/2) factor.
CVector coherent_amplitudes(Complex alpha, std::size_t trunc) {
  CVector v(static_cast<Eigen::Index>(trunc));
  v(0) = 1.0;
  for (Eigen::Index n = 1; n < v.size(); ++n) {
    v(n) = v(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  }
  return v;
}

}  // namespace

PureState coherent_state(Complex alpha, std::size_t trunc) {
  if (trunc < 1) throw PreconditionError("coherent_state: truncation must be positive");
  return PureState::normalized(coherent_amplitudes(alpha, trunc));
}

PureState odd_cat_state(Complex alpha, std::size_t trunc) {
  if (trunc < 2) throw PreconditionError("odd_cat_state: truncation must be at least 2");
  if (alpha == Complex(0.0)) throw PreconditionError("odd_cat_state: alpha must be nonzero");
  return PureState::normalized(coherent_amplitudes(alpha, trunc) - coherent_amplitudes(-alpha, trunc));
}

double number_expectation(const PureState& psi) {
  double m = 0.0;
  for (std::size_t n = 0; n < psi.dim(); ++n) m += static_cast<double>(n) * std::norm(psi[n]);
  return m;
}

HermitianOperator pauli_x() {
  CMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return HermitianOperator(m);
}

HermitianOperator pauli_y() {
  CMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return HermitianOperator(m);
}

HermitianOperator pauli_z() {
  CMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return HermitianOperator(m);
}

}  // namespace ontic
