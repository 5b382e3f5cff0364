// Wigner function by displaced parity.
//
// W(a) = (2/pi) Tr[rho D(a) Pi D(-a)] = (2/pi) Tr[rho D(2a) Pi], with the
// matrix elements of the untruncated displacement operator
//   <m|D(b)|n> = sqrt(n!/m!) b^(m-n) exp(-|b|^2/2) L_n^(m-n)(|b|^2),  m >= n,
//   <n|D(b)|m> = sqrt(n!/m!) (-b*)^(m-n) exp(-|b|^2/2) L_n^(m-n)(|b|^2).
// Only rho lives in the truncated space; no operator exponential is formed.

#include <cmath>
#include <numbers>
#include <vector>

#include "ontic/frames.hpp"

namespace ontic {

namespace {

class WignerEvaluator {
 public:
  explicit WignerEvaluator(const PureState& psi) : psi_(psi.amplitudes()) {
    const auto n = static_cast<std::size_t>(psi_.size());
    lgam_.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) lgam_[i] = std::lgamma(static_cast<double>(i) + 1.0);
    lag_.resize(n);
  }

  double operator()(Complex alpha) {
    const Eigen::Index dim = psi_.size();
    const Complex beta = 2.0 * alpha;
    const double x = std::norm(beta);
    const double r = std::abs(beta);
    const double arg = std::arg(beta);
    const double logr = r > 0.0 ? std::log(r) : 0.0;
    Complex acc = 0.0;
    for (Eigen::Index k = 0; k < dim; ++k) {
      if (k > 0 && r == 0.0) break;
      const Eigen::Index len = dim - k;
      laguerre_row(static_cast<double>(k), x, len);
      const Complex up = std::polar(1.0, static_cast<double>(k) * arg);                        // b^k phase
      const Complex down = std::polar(1.0, static_cast<double>(k) * (std::numbers::pi - arg));  // (-b*)^k phase
      for (Eigen::Index n = 0; n < len; ++n) {
        const auto un = static_cast<std::size_t>(n);
        const double mag = std::exp(0.5 * (lgam_[un] - lgam_[un + static_cast<std::size_t>(k)]) +
                                    static_cast<double>(k) * logr - 0.5 * x) *
                           lag_[un];
        const Eigen::Index m = n + k;
        const double sn = (n % 2 == 0) ? 1.0 : -1.0;
        // Column n, row m: (-1)^n psi_n conj(psi_m) <m|D|n>.
        acc += sn * psi_(n) * std::conj(psi_(m)) * (mag * up);
        if (k > 0) {
          const double sm = (m % 2 == 0) ? 1.0 : -1.0;
          // Column m, row n: (-1)^m psi_m conj(psi_n) <n|D|m>.
          acc += sm * psi_(m) * std::conj(psi_(n)) * (mag * down);
        }
      }
    }
    return 2.0 / std::numbers::pi * acc.real();
  }

 private:
  // L_n^(k)(x) for n < len by the three-term recurrence.
  void laguerre_row(double k, double x, Eigen::Index len) {
    lag_[0] = 1.0;
    if (len > 1) lag_[1] = 1.0 + k - x;
    for (Eigen::Index n = 1; n + 1 < len; ++n) {
      const auto un = static_cast<std::size_t>(n);
      const double dn = static_cast<double>(n);
      lag_[un + 1] = ((2.0 * dn + 1.0 + k - x) * lag_[un] - (dn + k) * lag_[un - 1]) / (dn + 1.0);
    }
  }

  CVector psi_;
  std::vector<double> lgam_;
  std::vector<double> lag_;
};

}  // namespace

double wigner_at(const PureState& psi, Complex alpha) {
  WignerEvaluator w(psi);
  return w(alpha);
}

QuasiDistribution wigner_values(const PureState& psi, double radius, double step) {
  const auto nodes = disk_grid(radius, step);
  WignerEvaluator w(psi);
  QuasiDistribution out;
  out.source = "wigner";
  out.values.resize(static_cast<Eigen::Index>(nodes.size()));
  out.weights = RVector::Constant(out.values.size(), step * step);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    out.values(static_cast<Eigen::Index>(i)) = w({nodes[i][0], nodes[i][1]});
  }
  out.completeness_defect = 0.0;
  return out;
}

RVector wigner_position_marginal(const PureState& psi, const RVector& q_nodes, double radius, double step) {
  if (!(radius > 0.0) || !(step > 0.0) || !(step < radius)) {
    throw PreconditionError("marginal needs radius > 0 and 0 < step < radius");
  }
  const long kmax = static_cast<long>(std::floor(radius / step + 1e-9));
  WignerEvaluator w(psi);
  RVector out(q_nodes.size());
  for (Eigen::Index i = 0; i < q_nodes.size(); ++i) {
    const double re = q_nodes(i) / std::numbers::sqrt2;
    double sum = 0.0;
    for (long j = -kmax; j <= kmax; ++j) sum += w({re, static_cast<double>(j) * step});
    // dp = sqrt(2) d(Im a) and dq = sqrt(2) d(Re a): P(q) = (1/sqrt2) int W d(Im a).
    out(i) = sum * step / std::numbers::sqrt2;
  }
  return out;
}

}  // namespace ontic
