#include "ontic/reconstruction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ontic {

namespace {

PureState qubit(Complex a, Complex b) {
  CVector v(2);
  v << a, b;
  return PureState::normalized(v);
}

// Columns w_k * embed(A_k).
RMatrix frame_columns(const Frame& frame) {
  const auto d = static_cast<Eigen::Index>(frame.dim());
  RMatrix a(d * d, static_cast<Eigen::Index>(frame.size()));
  for (std::size_t k = 0; k < frame.size(); ++k) {
    const auto& p = frame[k];
    a.col(static_cast<Eigen::Index>(k)) = p.weight * hermitian_embedding(p.op.to_dense());
  }
  return a;
}

BoxLp make_lp(const RMatrix& a, const RVector& b, double lo, double up, double slack) {
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  const Eigen::Index ns = slack > 0.0 ? m : 0;
  BoxLp lp;
  lp.eq_matrix.resize(m, n + ns);
  lp.eq_matrix.leftCols(n) = a;
  lp.lower = RVector::Constant(n + ns, lo);
  lp.upper = RVector::Constant(n + ns, up);
  if (ns > 0) {
    lp.eq_matrix.rightCols(ns).setIdentity();
    lp.lower.tail(ns).setConstant(-slack);
    lp.upper.tail(ns).setConstant(slack);
  }
  lp.eq_rhs = b;
  return lp;
}

}  // namespace

EffectSet qubit_ic_effects() {
  const double s = 1.0 / std::numbers::sqrt2;
  const Complex i(0.0, 1.0);
  EffectSet e;
  const std::vector<std::pair<std::string, PureState>> states = {
      {"z+", qubit(1, 0)},     {"z-", qubit(0, 1)},      {"x+", qubit(s, s)},
      {"x-", qubit(s, -s)},    {"y+", qubit(s, i * s)},  {"y-", qubit(s, -i * s)},
  };
  for (const auto& [label, st] : states) {
    e.effects.push_back(projector(st));
    e.labels.push_back(label);
  }
  e.pairs = {{0, 1}, {2, 3}, {4, 5}};
  return e;
}

EffectSet qubit_pair_effects() {
  EffectSet e;
  e.effects = {projector(basis_state(0, 2)), projector(basis_state(1, 2))};
  e.labels = {"z+", "z-"};
  e.pairs = {{0, 1}};
  return e;
}

EffectSet informationally_complete_effects(std::size_t dim) {
  if (dim == 2) return qubit_ic_effects();
  if (dim < 2) throw PreconditionError("informationally complete set needs dim >= 2");
  EffectSet e;
  const auto d = static_cast<Eigen::Index>(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    e.effects.push_back(projector(basis_state(i, dim)));
    e.labels.push_back("e" + std::to_string(i));
  }
  for (Eigen::Index i = 0; i < d; ++i) {
    for (Eigen::Index j = i + 1; j < d; ++j) {
      CVector v = CVector::Zero(d);
      v(i) = 1.0;
      v(j) = 1.0;
      e.effects.push_back(projector(PureState::normalized(v)));
      e.labels.push_back("re" + std::to_string(i) + std::to_string(j));
      v(j) = Complex(0.0, 1.0);
      e.effects.push_back(projector(PureState::normalized(v)));
      e.labels.push_back("im" + std::to_string(i) + std::to_string(j));
    }
  }
  return e;
}

HermitianOperator reconstruct_operator(const Frame& frame, const RVector& values) {
  if (values.size() != static_cast<Eigen::Index>(frame.size())) {
    throw DimensionError("reconstruct_operator: one value per frame point required");
  }
  const auto d = static_cast<Eigen::Index>(frame.dim());
  CMatrix acc = CMatrix::Zero(d, d);
  for (std::size_t k = 0; k < frame.size(); ++k) {
    frame[k].op.accumulate(acc, values(static_cast<Eigen::Index>(k)) * frame[k].weight);
  }
  return HermitianOperator::hermitize(acc);
}

ReconstructionResult reconstruct_response(const Frame& frame, const HermitianOperator& effect, bool bounded,
                                          double tol) {
  if (effect.dim() != frame.dim()) throw DimensionError("reconstruct_response: dimension mismatch");
  const RMatrix a = frame_columns(frame);
  const RVector b = hermitian_embedding(effect);
  const double lo = bounded ? 0.0 : -BoxLp::inf();
  const double up = bounded ? 1.0 : BoxLp::inf();
  const auto n = a.cols();

  ReconstructionResult out;
  auto accept = [&](const LpResult& res) {
    ResponseFunction r;
    r.values = res.solution.head(n);
    r.bounded = bounded;
    r.residual = max_abs_difference(reconstruct_operator(frame, r.values), effect);
    out.response = std::move(r);
  };

  const BoxLp strict = make_lp(a, b, lo, up, 0.0);
  out.lp_vars = static_cast<std::size_t>(strict.n_vars());
  out.lp_eqs = static_cast<std::size_t>(strict.n_eqs());
  const LpResult exact = solve_feasibility(strict);
  if (exact.status == LpStatus::Feasible) {
    out.status = LpStatus::Feasible;
    accept(exact);
    return out;
  }

  out.equality_tolerance = frame.completeness_defect() + tol;
  const BoxLp relaxed = make_lp(a, b, lo, up, out.equality_tolerance);
  out.lp_vars = static_cast<std::size_t>(relaxed.n_vars());
  const LpResult res = solve_feasibility(relaxed);
  out.status = res.status;
  if (res.status == LpStatus::Feasible) {
    accept(res);
  } else if (res.status == LpStatus::Infeasible) {
    out.certificate = res.certificate;
    out.margin = check_certificate(relaxed, res.certificate);
  }
  return out;
}

const char* to_string(NoGoVerdict v) {
  return v == NoGoVerdict::Infeasible ? "Infeasible" : "UnexpectedlyFeasible";
}

namespace {

struct NoGoLayout {
  // Effect index carried by each variable block, and the effect each block's
  // second equation group targets (paired elimination), or -1.
  std::vector<std::size_t> block_effect;
  std::vector<long> block_partner;
};

NoGoLayout no_go_layout(const EffectSet& effects, bool complete_pairs) {
  NoGoLayout layout;
  std::vector<bool> used(effects.effects.size(), false);
  if (complete_pairs) {
    for (const auto& [a, b] : effects.pairs) {
      if (used[a] || used[b]) throw PreconditionError("effect appears in more than one pair");
      used[a] = used[b] = true;
      layout.block_effect.push_back(a);
      layout.block_partner.push_back(static_cast<long>(b));
    }
  }
  for (std::size_t j = 0; j < effects.effects.size(); ++j) {
    if (used[j]) continue;
    layout.block_effect.push_back(j);
    layout.block_partner.push_back(-1);
  }
  return layout;
}

void check_no_go_hypotheses(const Frame& frame, const EffectSet& effects, const NoGoOptions& opts) {
  if (!frame.is_psd()) {
    throw PreconditionError("frame '" + frame.name() + "' has an operator that is not positive semidefinite");
  }
  if (!(frame.completeness_defect() <= opts.max_completeness_defect)) {
    throw PreconditionError("frame '" + frame.name() + "' is not normalized: completeness defect " +
                            std::to_string(frame.completeness_defect()) + " exceeds " +
                            std::to_string(opts.max_completeness_defect));
  }
  if (!(opts.tol > 0.0) || opts.tol > std::max(frame.completeness_defect(), kEqualityTol)) {
    throw PreconditionError("equality tolerance must be positive and no looser than max(frame defect, 1e-8)");
  }
  if (effects.effects.empty()) throw PreconditionError("no-go check needs at least one effect");
  if (effects.labels.size() != effects.effects.size()) throw PreconditionError("one label per effect required");
  for (const auto& e : effects.effects) {
    if (e.dim() != frame.dim()) throw DimensionError("effect and frame differ in dimension");
    if (!is_rank_one_projector(e)) throw PreconditionError("no-go effects must be rank-one projectors");
  }
  const auto id = HermitianOperator::identity(frame.dim());
  for (const auto& [a, b] : effects.pairs) {
    if (a >= effects.effects.size() || b >= effects.effects.size() || a == b) {
      throw PreconditionError("invalid effect pair");
    }
    if (max_abs_difference(effects.effects[a] + effects.effects[b], id) > 1e-9) {
      throw PreconditionError("paired effects do not sum to the identity");
    }
  }
}

}  // namespace

BoxLp build_no_go_lp(const Frame& frame, const EffectSet& effects, const NoGoOptions& opts) {
  check_no_go_hypotheses(frame, effects, opts);
  const NoGoLayout layout = no_go_layout(effects, opts.complete_pairs);
  const RMatrix a = frame_columns(frame);
  const Eigen::Index d2 = a.rows();
  const Eigen::Index k = a.cols();
  const RVector frame_sum = hermitian_embedding(frame.frame_sum());

  Eigen::Index rows = 0;
  for (long partner : layout.block_partner) rows += partner >= 0 ? 2 * d2 : d2;
  const auto blocks = static_cast<Eigen::Index>(layout.block_effect.size());
  const Eigen::Index vars = blocks * k;
  const double tau = frame.completeness_defect() + opts.tol;

  BoxLp lp;
  lp.eq_matrix = RMatrix::Zero(rows, vars + rows);
  lp.eq_rhs.resize(rows);
  lp.lower.resize(vars + rows);
  lp.upper.resize(vars + rows);
  lp.lower.head(vars).setZero();
  lp.upper.head(vars).setOnes();
  lp.lower.tail(rows).setConstant(-tau);
  lp.upper.tail(rows).setConstant(tau);
  lp.eq_matrix.rightCols(rows).setIdentity();

  Eigen::Index r = 0;
  for (Eigen::Index blk = 0; blk < blocks; ++blk) {
    const auto j = layout.block_effect[static_cast<std::size_t>(blk)];
    lp.eq_matrix.block(r, blk * k, d2, k) = a;
    lp.eq_rhs.segment(r, d2) = hermitian_embedding(effects.effects[j]);
    r += d2;
    const long partner = layout.block_partner[static_cast<std::size_t>(blk)];
    if (partner >= 0) {
      lp.eq_matrix.block(r, blk * k, d2, k) = a;
      lp.eq_rhs.segment(r, d2) = frame_sum - hermitian_embedding(effects.effects[static_cast<std::size_t>(partner)]);
      r += d2;
    }
  }
  return lp;
}

NoGoReport verify_no_go(const Frame& frame, const EffectSet& effects, const NoGoOptions& opts) {
  const BoxLp lp = build_no_go_lp(frame, effects, opts);
  const NoGoLayout layout = no_go_layout(effects, opts.complete_pairs);
  const LpResult res = solve_feasibility(lp);

  NoGoReport rep;
  rep.frame = frame.name();
  rep.effects = effects.labels;
  rep.complete_pairs = opts.complete_pairs;
  rep.lp_vars = static_cast<std::size_t>(lp.n_vars());
  rep.lp_eqs = static_cast<std::size_t>(lp.n_eqs());
  rep.completeness_defect = frame.completeness_defect();
  rep.equality_tolerance = frame.completeness_defect() + opts.tol;
  rep.iterations = res.iterations;

  if (res.status == LpStatus::Infeasible) {
    rep.verdict = NoGoVerdict::Infeasible;
    rep.certificate = res.certificate;
    rep.margin = check_certificate(lp, res.certificate);
    if (!(rep.margin > SimplexOptions{}.certificate_margin)) {
      throw std::runtime_error("no-go certificate failed independent re-check");
    }
    return rep;
  }
  if (res.status != LpStatus::Feasible) {
    throw std::runtime_error(std::string("no-go LP solve failed: ") + res.message);
  }
  rep.verdict = NoGoVerdict::UnexpectedlyFeasible;
  const auto k = static_cast<Eigen::Index>(frame.size());
  rep.solution = RMatrix::Zero(static_cast<Eigen::Index>(effects.effects.size()), k);
  for (std::size_t blk = 0; blk < layout.block_effect.size(); ++blk) {
    const RVector p = res.solution.segment(static_cast<Eigen::Index>(blk) * k, k);
    rep.solution.row(static_cast<Eigen::Index>(layout.block_effect[blk])) = p;
    if (layout.block_partner[blk] >= 0) {
      rep.solution.row(layout.block_partner[blk]) = (1.0 - p.array()).matrix();
    }
  }
  return rep;
}

namespace {

template <typename Density>
double number_moment_impl(const Density& state, const Frame& husimi) {
  if (state.dim() != husimi.dim()) throw DimensionError("husimi_number_moment: dimension mismatch");
  const auto n = static_cast<Eigen::Index>(husimi.size());
  RVector factor(n);
  RVector qw(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto& p = husimi[static_cast<std::size_t>(k)];
    if (p.coords.size() != 2) throw PreconditionError("husimi_number_moment needs a phase-space frame");
    factor(k) = p.coords[0] * p.coords[0] + p.coords[1] * p.coords[1] - 1.0;
    qw(k) = p.op.trace_with(state) * p.weight;
  }
  return weighted_sum(factor, qw);
}

}  // namespace

double husimi_number_moment(const PureState& psi, const Frame& husimi) { return number_moment_impl(psi, husimi); }

double husimi_number_moment(const HermitianOperator& rho, const Frame& husimi) {
  return number_moment_impl(rho, husimi);
}

RVector ontic_response(const HermitianOperator& effect, const std::vector<PureState>& net) {
  const CMatrix& e = effect.matrix();
  if ((e * e - e).cwiseAbs().maxCoeff() > 1e-9) throw PreconditionError("ontic_response expects a projector");
  RVector out(static_cast<Eigen::Index>(net.size()));
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (net[i].dim() != effect.dim()) throw DimensionError("ontic_response: dimension mismatch");
    // |E chi|^2 = <chi|E|chi> for a projector; nonnegative by construction.
    const double v = (e * net[i].amplitudes()).squaredNorm();
    out(static_cast<Eigen::Index>(i)) = std::min(1.0, v);
  }
  return out;
}

}  // namespace ontic
