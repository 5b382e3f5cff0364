// Finite-dimensional state and operator algebra.
//
// Everything here is a value type: states and operators are validated on
// construction and never mutated afterwards.

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace ontic {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RVector = Eigen::VectorXd;
using RMatrix = Eigen::MatrixXd;

/// Raised when operands live in Hilbert spaces of different dimension.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Raised when an input violates a documented precondition.
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline constexpr double kNormTol = 1e-12;
inline constexpr double kHermitianTol = 1e-12;
/// PSD acceptance: eigenvalue >= -kPsdRelTol * (1 + trace).
inline constexpr double kPsdRelTol = 1e-9;

/// Unit vector in C^d. Global phase is kept as given.
class PureState {
 public:
  /// Throws PreconditionError unless |amplitudes| == 1 within kNormTol.
  explicit PureState(CVector amplitudes);

  /// Rescales a nonzero vector to unit norm.
  static PureState normalized(const CVector& v);

  std::size_t dim() const { return static_cast<std::size_t>(amp_.size()); }
  const CVector& amplitudes() const { return amp_; }
  Complex operator[](std::size_t i) const { return amp_(static_cast<Eigen::Index>(i)); }

 private:
  CVector amp_;
};

/// Dense complex Hermitian matrix.
class HermitianOperator {
 public:
  /// Throws PreconditionError if `m` is not square or deviates from its
  /// adjoint by more than kHermitianTol * max(1, max|m_ij|).
  explicit HermitianOperator(CMatrix m);

  /// Returns (m + m^H) / 2 without validation.
  static HermitianOperator hermitize(const CMatrix& m);
  static HermitianOperator identity(std::size_t dim);
  static HermitianOperator zero(std::size_t dim);

  std::size_t dim() const { return static_cast<std::size_t>(m_.rows()); }
  const CMatrix& matrix() const { return m_; }
  double trace() const { return m_.trace().real(); }

  /// <psi|A|psi>, real up to rounding.
  double expectation(const PureState& psi) const;

  HermitianOperator operator+(const HermitianOperator& o) const;
  HermitianOperator operator-(const HermitianOperator& o) const;
  HermitianOperator operator*(double s) const;

 private:
  CMatrix m_;
};

inline HermitianOperator operator*(double s, const HermitianOperator& a) { return a * s; }

/// Tr[A B] for Hermitian A, B.
double trace_product(const HermitianOperator& a, const HermitianOperator& b);

/// Largest entrywise modulus of a - b.
double max_abs_difference(const HermitianOperator& a, const HermitianOperator& b);

/// Positive operator-valued measure: PSD effects summing to the identity.
class Povm {
 public:
  explicit Povm(std::vector<HermitianOperator> effects, double tol = 1e-10);
  const std::vector<HermitianOperator>& effects() const { return effects_; }
  std::size_t dim() const { return effects_.front().dim(); }

 private:
  std::vector<HermitianOperator> effects_;
};

double born_probability(const PureState& phi, const PureState& psi);
HermitianOperator projector(const PureState& psi);
double min_eigenvalue(const HermitianOperator& op);
bool is_psd(const HermitianOperator& op, double rel_tol = kPsdRelTol);

/// True when `op` is a rank-one orthogonal projector within `tol`.
bool is_rank_one_projector(const HermitianOperator& op, double tol = 1e-9);

PureState basis_state(std::size_t i, std::size_t dim);
PureState bloch_state(double theta, double phi);
PureState fock_state(std::size_t n, std::size_t trunc);
/// Truncated coherent state, renormalized after truncation.
PureState coherent_state(Complex alpha, std::size_t trunc);
/// (|alpha> - |-alpha>) normalized; odd photon-number parity.
PureState odd_cat_state(Complex alpha, std::size_t trunc);

/// Mean photon number sum_n n |psi_n|^2 in the Fock basis.
double number_expectation(const PureState& psi);

HermitianOperator pauli_x();
HermitianOperator pauli_y();
HermitianOperator pauli_z();

/// Real coordinates of a Hermitian matrix: the d diagonal entries, then
/// (Re h_ij, Im h_ij) for each i < j in row-major order. Length d^2.
template <typename Derived>
Eigen::Matrix<typename Derived::RealScalar, Eigen::Dynamic, 1>
hermitian_embedding(const Eigen::MatrixBase<Derived>& h) {
  using Real = typename Derived::RealScalar;
  const Eigen::Index d = h.rows();
  Eigen::Matrix<Real, Eigen::Dynamic, 1> out(d * d);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < d; ++i) out(k++) = std::real(h(i, i));
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      out(k++) = std::real(h(i, j));
      out(k++) = std::imag(h(i, j));
    }
  }
  return out;
}

inline RVector hermitian_embedding(const HermitianOperator& h) {
  return hermitian_embedding(h.matrix());
}

}  // namespace ontic
