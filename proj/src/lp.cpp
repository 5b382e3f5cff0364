#include "ontic/lp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ontic {

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Feasible: return "Feasible";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Unbounded: return "Unbounded";
    case LpStatus::NumericalFailure: return "NumericalFailure";
  }
  return "?";
}

template <typename Scalar>
void BasicBoxLp<Scalar>::validate() const {
  const Eigen::Index n = eq_matrix.cols();
  if (eq_rhs.size() != eq_matrix.rows()) throw std::invalid_argument("BoxLp: rhs length differs from row count");
  if (lower.size() != n || upper.size() != n) throw std::invalid_argument("BoxLp: bound length differs from column count");
  if (objective && objective->size() != n) throw std::invalid_argument("BoxLp: objective length differs from column count");
  if (!eq_matrix.allFinite() || !eq_rhs.allFinite()) throw std::invalid_argument("BoxLp: non-finite constraint data");
  for (Eigen::Index j = 0; j < n; ++j) {
    if (std::isnan(lower(j)) || std::isnan(upper(j))) throw std::invalid_argument("BoxLp: NaN bound");
    if (lower(j) > upper(j)) throw std::invalid_argument("BoxLp: lower bound exceeds upper bound");
    if (lower(j) == inf() || upper(j) == -inf()) throw std::invalid_argument("BoxLp: empty bound interval");
  }
}

template <typename Scalar>
Scalar check_certificate(const BasicBoxLp<Scalar>& lp, const typename BasicBoxLp<Scalar>::Vector& y) {
  using std::abs;
  if (y.size() != lp.n_eqs()) throw std::invalid_argument("check_certificate: certificate length differs from row count");
  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  Scalar margin = y.dot(lp.eq_rhs);
  const Scalar y_max = y.size() > 0 ? y.cwiseAbs().maxCoeff() : Scalar(0);
  for (Eigen::Index j = 0; j < lp.n_vars(); ++j) {
    const Scalar g = lp.eq_matrix.col(j).dot(y);
    if (g == 0) continue;
    const Scalar bound = g > 0 ? lp.upper(j) : lp.lower(j);
    if (std::isinf(bound)) {
      // Rounding noise in y is of order eps * |y|_inf in every component.
      const Scalar zero_tol = Scalar(1e3) * eps * y_max * lp.eq_matrix.col(j).cwiseAbs().sum();
      if (abs(g) <= zero_tol) continue;
      return -BasicBoxLp<Scalar>::inf();
    }
    margin -= g * bound;
  }
  return margin;
}

template <typename Scalar>
Scalar equality_residual(const BasicBoxLp<Scalar>& lp, const typename BasicBoxLp<Scalar>::Vector& x) {
  if (lp.n_eqs() == 0) return 0;
  return (lp.eq_matrix * x - lp.eq_rhs).cwiseAbs().maxCoeff();
}

template <typename Scalar>
Scalar bound_violation(const BasicBoxLp<Scalar>& lp, const typename BasicBoxLp<Scalar>::Vector& x) {
  Scalar v = 0;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    v = std::max(v, lp.lower(j) - x(j));
    v = std::max(v, x(j) - lp.upper(j));
  }
  return v;
}

namespace {

template <typename Scalar>
class BoundedSimplex {
 public:
  using Vector = typename BasicBoxLp<Scalar>::Vector;
  using Matrix = typename BasicBoxLp<Scalar>::Matrix;
  enum class Run { Optimal, Unbounded, IterationLimit };

  BoundedSimplex(const BasicBoxLp<Scalar>& lp, const SimplexOptions& opts)
      : opts_(opts), m_(lp.n_eqs()), n_(lp.n_vars()), total_(n_ + m_) {
    const Scalar inf = BasicBoxLp<Scalar>::inf();
    a_.resize(m_, total_);
    a_.leftCols(n_) = lp.eq_matrix;
    a_.rightCols(m_).setZero();
    b_ = lp.eq_rhs;
    lo_.resize(total_);
    up_.resize(total_);
    x_.resize(total_);
    lo_.head(n_) = lp.lower;
    up_.head(n_) = lp.upper;
    for (Eigen::Index j = 0; j < n_; ++j) {
      if (std::isfinite(static_cast<double>(lo_(j)))) x_(j) = lo_(j);
      else if (std::isfinite(static_cast<double>(up_(j)))) x_(j) = up_(j);
      else x_(j) = 0;
    }
    const Vector r = b_ - lp.eq_matrix * x_.head(n_);
    basis_.resize(static_cast<std::size_t>(m_));
    is_basic_.assign(static_cast<std::size_t>(total_), false);
    for (Eigen::Index i = 0; i < m_; ++i) {
      const Eigen::Index col = n_ + i;
      a_(i, col) = r(i) >= 0 ? Scalar(1) : Scalar(-1);
      lo_(col) = 0;
      up_(col) = inf;
      x_(col) = r(i) >= 0 ? r(i) : -r(i);
      basis_[static_cast<std::size_t>(i)] = col;
      is_basic_[static_cast<std::size_t>(col)] = true;
    }
    max_iter_ = opts.max_iterations > 0 ? opts.max_iterations : 20 * (m_ + total_) + 10000;
    refactor();
  }

  Eigen::Index rows() const { return m_; }

  Run run(const Vector& cost) {
    const Scalar opt_tol = Scalar(opts_.optimality_tol);
    const Scalar piv_tol = Scalar(opts_.pivot_tol);
    const Scalar inf = BasicBoxLp<Scalar>::inf();
    Vector cb(m_), d(total_), col(m_);
    bool price = true;
    Eigen::Index scan_from = 0;
    bool flipped = false;
    for (;;) {
      if (iterations_ >= max_iter_) return Run::IterationLimit;
      if (price) {
        if (since_refactor_ >= opts_.refactor_every) refactor();
        for (Eigen::Index i = 0; i < m_; ++i) cb(i) = cost(basis_[static_cast<std::size_t>(i)]);
        const Vector y = binv_.transpose() * cb;
        d.noalias() = cost - a_.transpose() * y;
        price = false;
        flipped = false;
        scan_from = 0;
      }

      // Dantzig pricing; after a run of degenerate steps fall back to Bland's
      // lowest-index rule until progress resumes, which rules out cycling. A
      // bound flip leaves the reduced costs unchanged, so no re-pricing.
      const bool bland = degenerate_run_ >= kBlandAfter;
      Eigen::Index q = -1;
      int dir = 0;
      Scalar best_d = 0;
      for (Eigen::Index j = bland ? scan_from : 0; j < total_; ++j) {
        if (is_basic_[static_cast<std::size_t>(j)] || !(lo_(j) < up_(j))) continue;
        int dj = 0;
        if (d(j) < -opt_tol && x_(j) < up_(j)) dj = 1;
        else if (d(j) > opt_tol && x_(j) > lo_(j)) dj = -1;
        if (dj == 0) continue;
        const Scalar mag = d(j) < 0 ? -d(j) : d(j);
        if (q < 0 || mag > best_d) {
          q = j;
          dir = dj;
          best_d = mag;
          if (bland) break;
        }
      }
      if (q < 0) {
        if (!flipped) return Run::Optimal;
        price = true;  // re-price once from scratch before declaring optimality
        continue;
      }
      col.noalias() = binv_ * a_.col(q);

      const Scalar own = dir > 0 ? up_(q) - x_(q) : x_(q) - lo_(q);
      Scalar best = inf;
      Eigen::Index leave = -1;
      bool leave_at_lower = false;
      for (Eigen::Index i = 0; i < m_; ++i) {
        const Scalar a = col(i);
        if (std::abs(static_cast<double>(a)) <= static_cast<double>(piv_tol)) continue;
        const Scalar delta = -Scalar(dir) * a;
        const Eigen::Index k = basis_[static_cast<std::size_t>(i)];
        Scalar ratio;
        bool at_lower;
        if (delta < 0) {
          if (std::isinf(static_cast<double>(lo_(k)))) continue;
          ratio = (x_(k) - lo_(k)) / -delta;
          at_lower = true;
        } else {
          if (std::isinf(static_cast<double>(up_(k)))) continue;
          ratio = (up_(k) - x_(k)) / delta;
          at_lower = false;
        }
        if (ratio < 0) ratio = 0;
        const Scalar tie = leave < 0 ? Scalar(0) : Scalar(1e-12) * (1 + best);
        if (leave < 0 || ratio < best - tie) {
          best = ratio;
          leave = i;
          leave_at_lower = at_lower;
        } else if (ratio <= best + tie && k < basis_[static_cast<std::size_t>(leave)]) {
          best = std::min(best, ratio);
          leave = i;
          leave_at_lower = at_lower;
        }
      }
      if (leave < 0 && std::isinf(static_cast<double>(own))) return Run::Unbounded;

      ++iterations_;
      if (leave < 0 || own <= best) {
        // Bound flip, basis unchanged.
        for (Eigen::Index i = 0; i < m_; ++i) x_(basis_[static_cast<std::size_t>(i)]) -= Scalar(dir) * own * col(i);
        x_(q) = dir > 0 ? up_(q) : lo_(q);
        scan_from = bland ? q + 1 : 0;
        flipped = true;
        degenerate_run_ = 0;
        continue;
      }
      const Scalar step = best;
      for (Eigen::Index i = 0; i < m_; ++i) x_(basis_[static_cast<std::size_t>(i)]) -= Scalar(dir) * step * col(i);
      x_(q) += Scalar(dir) * step;
      const Eigen::Index out = basis_[static_cast<std::size_t>(leave)];
      x_(out) = leave_at_lower ? lo_(out) : up_(out);
      pivot(leave, q, col);
      degenerate_run_ = step > Scalar(opts_.bound_tol) ? 0 : degenerate_run_ + 1;
      price = true;
    }
  }

  /// Artificial columns become fixed at zero for phase two.
  void freeze_artificials() {
    for (Eigen::Index i = 0; i < m_; ++i) up_(n_ + i) = 0;
  }

  Scalar artificial_sum() const { return x_.tail(m_).sum(); }

  Vector primal() const { return x_.head(n_); }

  /// y = B^{-T} c_B from a fresh factorization.
  Vector duals(const Vector& cost) {
    refactor();
    Vector cb(m_);
    for (Eigen::Index i = 0; i < m_; ++i) cb(i) = cost(basis_[static_cast<std::size_t>(i)]);
    return lu_.transpose().solve(cb);
  }

  /// Columns whose dual coefficient must vanish for `y` to be a valid
  /// certificate: basic columns with an infinite bound and nonbasic ones
  /// whose coefficient sign points at an infinite bound.
  std::vector<Eigen::Index> unbounded_support(const Vector& y) const {
    std::vector<Eigen::Index> cols;
    for (Eigen::Index j = 0; j < n_; ++j) {
      const bool inf_lo = std::isinf(static_cast<double>(lo_(j)));
      const bool inf_up = std::isinf(static_cast<double>(up_(j)));
      if (!inf_lo && !inf_up) continue;
      const Scalar g = a_.col(j).dot(y);
      if (is_basic_[static_cast<std::size_t>(j)] || (inf_up && g > 0) || (inf_lo && g < 0)) cols.push_back(j);
    }
    return cols;
  }

  const Matrix& constraint_matrix() const { return a_; }
  long iterations() const { return iterations_; }

 private:
  void refactor() {
    Matrix basis_mat(m_, m_);
    for (Eigen::Index i = 0; i < m_; ++i) basis_mat.col(i) = a_.col(basis_[static_cast<std::size_t>(i)]);
    lu_.compute(basis_mat);
    binv_ = lu_.inverse();
    Vector rhs = b_;
    for (Eigen::Index j = 0; j < total_; ++j) {
      if (!is_basic_[static_cast<std::size_t>(j)] && x_(j) != 0) rhs -= a_.col(j) * x_(j);
    }
    const Vector xb = lu_.solve(rhs);
    for (Eigen::Index i = 0; i < m_; ++i) x_(basis_[static_cast<std::size_t>(i)]) = xb(i);
    since_refactor_ = 0;
  }

  // Product-form update of the basis inverse; `col` is B^{-1} a_q.
  void pivot(Eigen::Index r, Eigen::Index q, const Vector& col) {
    binv_.row(r) /= col(r);
    const Eigen::Matrix<Scalar, 1, Eigen::Dynamic> prow = binv_.row(r);
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (i != r && col(i) != 0) binv_.row(i) -= col(i) * prow;
    }
    const Eigen::Index out = basis_[static_cast<std::size_t>(r)];
    is_basic_[static_cast<std::size_t>(out)] = false;
    is_basic_[static_cast<std::size_t>(q)] = true;
    basis_[static_cast<std::size_t>(r)] = q;
    ++since_refactor_;
  }

  SimplexOptions opts_;
  Eigen::Index m_, n_, total_;
  Matrix a_;
  Vector b_, lo_, up_, x_;
  std::vector<Eigen::Index> basis_;
  std::vector<bool> is_basic_;
  Matrix binv_;
  Eigen::PartialPivLU<Matrix> lu_;
  long iterations_ = 0;
  long max_iter_ = 0;
  int since_refactor_ = 0;
  int degenerate_run_ = 0;
  static constexpr int kBlandAfter = 50;
};

template <typename Scalar>
typename BasicBoxLp<Scalar>::Vector clamp_to_box(const BasicBoxLp<Scalar>& lp,
                                                 typename BasicBoxLp<Scalar>::Vector x) {
  for (Eigen::Index j = 0; j < x.size(); ++j) x(j) = std::clamp(x(j), lp.lower(j), lp.upper(j));
  return x;
}

template <typename Scalar>
typename BasicBoxLp<Scalar>::Vector starting_point(const BasicBoxLp<Scalar>& lp) {
  typename BasicBoxLp<Scalar>::Vector x(lp.n_vars());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (std::isfinite(static_cast<double>(lp.lower(j)))) x(j) = lp.lower(j);
    else if (std::isfinite(static_cast<double>(lp.upper(j)))) x(j) = lp.upper(j);
    else x(j) = 0;
  }
  return x;
}

template <typename Scalar>
Scalar rhs_scale(const BasicBoxLp<Scalar>& lp) {
  return 1 + (lp.n_eqs() > 0 ? lp.eq_rhs.cwiseAbs().maxCoeff() : Scalar(0));
}

// Phase one. Fills `res` and returns true when a feasible basis was found.
template <typename Scalar>
bool phase_one(BoundedSimplex<Scalar>& sx, const BasicBoxLp<Scalar>& lp, const SimplexOptions& opts,
               BasicLpResult<Scalar>& res) {
  using Vector = typename BasicBoxLp<Scalar>::Vector;
  const Eigen::Index n = lp.n_vars();
  const Eigen::Index m = lp.n_eqs();
  Vector cost = Vector::Zero(n + m);
  cost.tail(m).setOnes();
  const auto run = sx.run(cost);
  res.iterations = sx.iterations();
  if (run != BoundedSimplex<Scalar>::Run::Optimal) {
    res.status = LpStatus::NumericalFailure;
    res.message = "phase one did not terminate";
    return false;
  }
  Vector y = sx.duals(cost);
  const Scalar infeas = sx.artificial_sum();
  if (infeas <= Scalar(opts.feasibility_tol) * rhs_scale(lp)) return true;

  // Remove rounding-level components along columns with infinite bounds.
  // Projecting can tip other such columns to the wrong sign, so the support
  // only grows until it is stable.
  std::vector<Eigen::Index> support;
  for (int pass = 0; pass < 8; ++pass) {
    bool grew = false;
    for (Eigen::Index j : sx.unbounded_support(y)) {
      if (std::find(support.begin(), support.end(), j) == support.end()) {
        support.push_back(j);
        grew = true;
      }
    }
    if (!grew) break;
    typename BasicBoxLp<Scalar>::Matrix s(m, static_cast<Eigen::Index>(support.size()));
    for (std::size_t c = 0; c < support.size(); ++c) s.col(static_cast<Eigen::Index>(c)) = lp.eq_matrix.col(support[c]);
    Eigen::ColPivHouseholderQR<typename BasicBoxLp<Scalar>::Matrix> qr(s);
    const Eigen::Index rank = qr.rank();
    if (rank == 0) continue;
    const typename BasicBoxLp<Scalar>::Matrix q =
        typename BasicBoxLp<Scalar>::Matrix(qr.householderQ()).leftCols(rank);
    y -= q * (q.transpose() * y);
  }
  res.certificate = y;
  res.margin = check_certificate(lp, y);
  if (res.margin > Scalar(opts.certificate_margin)) {
    res.status = LpStatus::Infeasible;
  } else {
    res.status = LpStatus::NumericalFailure;
    res.message = "phase one stalled without a valid certificate";
  }
  return false;
}

template <typename Scalar>
bool accept_solution(const BasicBoxLp<Scalar>& lp, const SimplexOptions& opts,
                     typename BasicBoxLp<Scalar>::Vector x, BasicLpResult<Scalar>& res) {
  res.solution = clamp_to_box(lp, std::move(x));
  res.residual = equality_residual(lp, res.solution);
  if (res.residual > Scalar(opts.feasibility_tol) * rhs_scale(lp)) {
    res.status = LpStatus::NumericalFailure;
    res.message = "solution residual exceeds tolerance";
    return false;
  }
  return true;
}

}  // namespace

namespace {

// Rows scaled to unit max-norm; returns the scaled copy and the row factors.
template <typename Scalar>
BasicBoxLp<Scalar> equilibrate(const BasicBoxLp<Scalar>& lp, typename BasicBoxLp<Scalar>::Vector& factors) {
  BasicBoxLp<Scalar> out = lp;
  factors = BasicBoxLp<Scalar>::Vector::Ones(lp.n_eqs());
  for (Eigen::Index i = 0; i < lp.n_eqs(); ++i) {
    const Scalar big = lp.eq_matrix.row(i).cwiseAbs().maxCoeff();
    if (big > 0) factors(i) = Scalar(1) / big;
    out.eq_matrix.row(i) *= factors(i);
    out.eq_rhs(i) *= factors(i);
  }
  return out;
}

// A certificate y' for the scaled rows certifies the original system as
// y = D y'. The verdict is re-derived on the original data.
template <typename Scalar>
void unscale_certificate(const BasicBoxLp<Scalar>& lp, const typename BasicBoxLp<Scalar>::Vector& factors,
                         const SimplexOptions& opts, BasicLpResult<Scalar>& res) {
  if (res.certificate.size() != lp.n_eqs()) return;
  res.certificate = res.certificate.cwiseProduct(factors);
  res.margin = check_certificate(lp, res.certificate);
  if (res.margin > Scalar(opts.certificate_margin)) {
    res.status = LpStatus::Infeasible;
    res.message.clear();
  } else if (res.status == LpStatus::Infeasible) {
    res.status = LpStatus::NumericalFailure;
    res.message = "certificate lost validity on the unscaled rows";
  }
}

}  // namespace

template <typename Scalar>
BasicLpResult<Scalar> solve_feasibility(const BasicBoxLp<Scalar>& lp, const SimplexOptions& opts) {
  lp.validate();
  BasicLpResult<Scalar> res;
  if (lp.n_eqs() == 0) {
    res.status = LpStatus::Feasible;
    res.solution = starting_point(lp);
    return res;
  }
  typename BasicBoxLp<Scalar>::Vector factors;
  const BasicBoxLp<Scalar> scaled = equilibrate(lp, factors);
  BoundedSimplex<Scalar> sx(scaled, opts);
  if (!phase_one(sx, scaled, opts, res)) {
    unscale_certificate(lp, factors, opts, res);
    return res;
  }
  if (accept_solution(lp, opts, sx.primal(), res)) res.status = LpStatus::Feasible;
  return res;
}

template <typename Scalar>
BasicLpResult<Scalar> minimize(const BasicBoxLp<Scalar>& lp, const SimplexOptions& opts) {
  using Vector = typename BasicBoxLp<Scalar>::Vector;
  lp.validate();
  if (!lp.objective) throw std::invalid_argument("minimize: BoxLp has no objective");
  BasicLpResult<Scalar> res;
  Vector factors;
  const BasicBoxLp<Scalar> scaled = equilibrate(lp, factors);
  BoundedSimplex<Scalar> sx(scaled, opts);
  if (lp.n_eqs() > 0 && !phase_one(sx, scaled, opts, res)) {
    unscale_certificate(lp, factors, opts, res);
    return res;
  }
  sx.freeze_artificials();
  Vector cost = Vector::Zero(lp.n_vars() + lp.n_eqs());
  cost.head(lp.n_vars()) = *lp.objective;
  const auto run = sx.run(cost);
  res.iterations = sx.iterations();
  if (run == BoundedSimplex<Scalar>::Run::Unbounded) {
    res.status = LpStatus::Unbounded;
    return res;
  }
  if (run == BoundedSimplex<Scalar>::Run::IterationLimit) {
    res.status = LpStatus::NumericalFailure;
    res.message = "phase two did not terminate";
    return res;
  }
  if (!accept_solution(lp, opts, sx.primal(), res)) return res;
  res.status = LpStatus::Optimal;
  res.objective_value = lp.objective->dot(res.solution);
  return res;
}

template <typename Scalar>
BasicLinfResult<Scalar> minimize_linf_residual(
    const typename BasicBoxLp<Scalar>::Matrix& a, const typename BasicBoxLp<Scalar>::Vector& b,
    const typename BasicBoxLp<Scalar>::Vector& lower, const typename BasicBoxLp<Scalar>::Vector& upper,
    const typename BasicBoxLp<Scalar>::Matrix& eq_matrix, const typename BasicBoxLp<Scalar>::Vector& eq_rhs,
    const SimplexOptions& opts) {
  using Vector = typename BasicBoxLp<Scalar>::Vector;
  using Matrix = typename BasicBoxLp<Scalar>::Matrix;
  const Eigen::Index n = lower.size();
  const Eigen::Index m = b.size();
  const Eigen::Index me = eq_rhs.size();
  if (a.rows() != m || (m > 0 && a.cols() != n) || upper.size() != n ||
      eq_matrix.rows() != me || (me > 0 && eq_matrix.cols() != n)) {
    throw std::invalid_argument("minimize_linf_residual: inconsistent dimensions");
  }
  const Scalar inf = BasicBoxLp<Scalar>::inf();

  // Columns: x (n), t, s (m), r (m).
  // Rows: A x - t + s = b,  A x + t - r = b,  E x = f.
  const Eigen::Index cols = n + 1 + 2 * m;
  BasicBoxLp<Scalar> lp;
  lp.eq_matrix = Matrix::Zero(2 * m + me, cols);
  lp.eq_rhs.resize(2 * m + me);
  lp.lower = Vector::Zero(cols);
  lp.upper = Vector::Constant(cols, inf);
  lp.lower.head(n) = lower;
  lp.upper.head(n) = upper;
  if (m > 0) {
    lp.eq_matrix.block(0, 0, m, n) = a;
    lp.eq_matrix.block(m, 0, m, n) = a;
    lp.eq_matrix.block(0, n, m, 1).setConstant(-1);
    lp.eq_matrix.block(m, n, m, 1).setConstant(1);
    lp.eq_matrix.block(0, n + 1, m, m).setIdentity();
    lp.eq_matrix.block(m, n + 1 + m, m, m) = -Matrix::Identity(m, m);
    lp.eq_rhs.head(m) = b;
    lp.eq_rhs.segment(m, m) = b;
  }
  if (me > 0) {
    lp.eq_matrix.block(2 * m, 0, me, n) = eq_matrix;
    lp.eq_rhs.tail(me) = eq_rhs;
  }
  Vector c = Vector::Zero(cols);
  c(n) = 1;
  lp.objective = c;

  BasicLinfResult<Scalar> out;
  const auto res = minimize(lp, opts);
  out.status = res.status;
  if (res.status != LpStatus::Optimal) return out;
  out.x = res.solution.head(n);
  out.t = m > 0 ? (a * out.x - b).cwiseAbs().maxCoeff() : Scalar(0);
  return out;
}

#define ONTIC_INSTANTIATE_LP(S)                                                                              \
  template struct BasicBoxLp<S>;                                                                             \
  template BasicLpResult<S> solve_feasibility<S>(const BasicBoxLp<S>&, const SimplexOptions&);               \
  template BasicLpResult<S> minimize<S>(const BasicBoxLp<S>&, const SimplexOptions&);                        \
  template S check_certificate<S>(const BasicBoxLp<S>&, const BasicBoxLp<S>::Vector&);                       \
  template S equality_residual<S>(const BasicBoxLp<S>&, const BasicBoxLp<S>::Vector&);                       \
  template S bound_violation<S>(const BasicBoxLp<S>&, const BasicBoxLp<S>::Vector&);                         \
  template BasicLinfResult<S> minimize_linf_residual<S>(const BasicBoxLp<S>::Matrix&, const BasicBoxLp<S>::Vector&, \
                                                        const BasicBoxLp<S>::Vector&, const BasicBoxLp<S>::Vector&, \
                                                        const BasicBoxLp<S>::Matrix&, const BasicBoxLp<S>::Vector&, \
                                                        const SimplexOptions&);

ONTIC_INSTANTIATE_LP(double)
ONTIC_INSTANTIATE_LP(long double)

#undef ONTIC_INSTANTIATE_LP

}  // namespace ontic
