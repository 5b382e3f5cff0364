#include "ontic/model_search.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "ontic/lp.hpp"
#include "ontic/reconstruction.hpp"

namespace ontic {

BornTable born_table(const std::vector<PureState>& states, const std::vector<HermitianOperator>& effects,
                     std::vector<std::vector<std::size_t>> groups) {
  if (states.empty() || effects.empty()) throw PreconditionError("born_table needs states and effects");
  const std::size_t d = states.front().dim();
  for (const auto& s : states) {
    if (s.dim() != d) throw DimensionError("born_table: states differ in dimension");
  }
  for (const auto& e : effects) {
    if (e.dim() != d) throw DimensionError("born_table: effect dimension differs from states");
  }
  const auto id = HermitianOperator::identity(d);
  for (const auto& g : groups) {
    auto sum = HermitianOperator::zero(d);
    for (std::size_t j : g) {
      if (j >= effects.size()) throw PreconditionError("born_table: group index out of range");
      sum = sum + effects[j];
    }
    if (max_abs_difference(sum, id) > 1e-9) throw PreconditionError("born_table: group does not sum to identity");
  }
  BornTable t;
  t.states = states;
  t.effects = effects;
  t.groups = std::move(groups);
  t.probabilities.resize(static_cast<Eigen::Index>(states.size()), static_cast<Eigen::Index>(effects.size()));
  for (std::size_t j = 0; j < effects.size(); ++j) {
    t.probabilities.col(static_cast<Eigen::Index>(j)) = ontic_response(effects[j], states);
  }
  return t;
}

void ClassicalModel::validate(double tol) const {
  if (epistemic.cols() != response.cols()) throw PreconditionError("model: epistemic and response disagree on K");
  if (epistemic.cols() == 0) throw PreconditionError("model: K must be positive");
  if (epistemic.size() > 0 && epistemic.minCoeff() < -tol) throw PreconditionError("model: negative epistemic entry");
  for (Eigen::Index i = 0; i < epistemic.rows(); ++i) {
    if (std::abs(epistemic.row(i).sum() - 1.0) > tol) throw PreconditionError("model: epistemic row does not sum to 1");
  }
  if (response.size() > 0 && (response.minCoeff() < -tol || response.maxCoeff() > 1.0 + tol)) {
    throw PreconditionError("model: response outside [0, 1]");
  }
}

namespace {

double predicted(const ClassicalModel& m, Eigen::Index i, Eigen::Index j) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < m.epistemic.cols(); ++k) s += m.response(j, k) * m.epistemic(i, k);
  return s;
}

double state_row_residual(const ClassicalModel& m, const BornTable& t, Eigen::Index i) {
  double r = 0.0;
  for (Eigen::Index j = 0; j < t.probabilities.cols(); ++j) {
    r = std::max(r, std::abs(predicted(m, i, j) - t.probabilities(i, j)));
  }
  return r;
}

double effect_row_residual(const ClassicalModel& m, const BornTable& t, Eigen::Index j) {
  double r = 0.0;
  for (Eigen::Index i = 0; i < t.probabilities.rows(); ++i) {
    r = std::max(r, std::abs(predicted(m, i, j) - t.probabilities(i, j)));
  }
  return r;
}

void check_shapes(const ClassicalModel& m, const BornTable& t) {
  if (m.epistemic.rows() != t.probabilities.rows() || m.response.rows() != t.probabilities.cols() ||
      m.epistemic.cols() != m.response.cols()) {
    throw DimensionError("model shape does not match the Born table");
  }
}

}  // namespace

double model_residual(const ClassicalModel& model, const BornTable& table) {
  check_shapes(model, table);
  double r = 0.0;
  for (Eigen::Index i = 0; i < table.probabilities.rows(); ++i) r = std::max(r, state_row_residual(model, table, i));
  return r;
}

ClassicalModel delta_model(const std::vector<PureState>& states, const std::vector<HermitianOperator>& effects) {
  const auto s = static_cast<Eigen::Index>(states.size());
  ClassicalModel m;
  m.epistemic = RMatrix::Identity(s, s);
  m.response.resize(static_cast<Eigen::Index>(effects.size()), s);
  for (std::size_t j = 0; j < effects.size(); ++j) {
    m.response.row(static_cast<Eigen::Index>(j)) = ontic_response(effects[j], states).transpose();
  }
  return m;
}

std::vector<HermitianOperator> position_projectors(std::size_t dim) {
  std::vector<HermitianOperator> out;
  for (std::size_t x = 0; x < dim; ++x) out.push_back(projector(basis_state(x, dim)));
  return out;
}

ClassicalModel bohm_position_model(const std::vector<PureState>& states) {
  if (states.empty()) throw PreconditionError("bohm_position_model needs at least one state");
  const auto d = static_cast<Eigen::Index>(states.front().dim());
  const auto s = static_cast<Eigen::Index>(states.size());
  ClassicalModel m;
  m.epistemic = RMatrix::Zero(s, s * d);
  m.response = RMatrix::Zero(d, s * d);
  for (Eigen::Index i = 0; i < s; ++i) {
    const auto& psi = states[static_cast<std::size_t>(i)];
    if (static_cast<Eigen::Index>(psi.dim()) != d) throw DimensionError("bohm_position_model: states differ in dimension");
    for (Eigen::Index x = 0; x < d; ++x) {
      m.epistemic(i, i * d + x) = std::norm(psi[static_cast<std::size_t>(x)]);
      m.response(x, i * d + x) = 1.0;
    }
  }
  return m;
}

ClassicalModel pad_model(const ClassicalModel& model, Eigen::Index extra) {
  ClassicalModel m;
  m.epistemic = RMatrix::Zero(model.epistemic.rows(), model.k() + extra);
  m.response = RMatrix::Zero(model.response.rows(), model.k() + extra);
  m.epistemic.leftCols(model.k()) = model.epistemic;
  m.response.leftCols(model.k()) = model.response;
  return m;
}

namespace {

ClassicalModel random_model(Eigen::Index s, Eigen::Index m, Eigen::Index k, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  ClassicalModel out;
  out.epistemic.resize(s, k);
  out.response.resize(m, k);
  // Flat Dirichlet rows via normalized exponentials.
  for (Eigen::Index i = 0; i < s; ++i) {
    for (Eigen::Index c = 0; c < k; ++c) out.epistemic(i, c) = -std::log1p(-unif(gen));
    const double sum = out.epistemic.row(i).sum();
    if (sum > 0.0) out.epistemic.row(i) /= sum;
    else out.epistemic.row(i).setConstant(1.0 / static_cast<double>(k));
  }
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index c = 0; c < k; ++c) out.response(j, c) = unif(gen);
  }
  return out;
}

// Improves each epistemic row; rows whose recomputed residual would grow are
// left unchanged.
void epistemic_half_step(ClassicalModel& model, const BornTable& t) {
  const Eigen::Index k = model.k();
  const RVector lo = RVector::Zero(k);
  const RVector up = RVector::Ones(k);
  const RMatrix ones = RMatrix::Ones(1, k);
  const RVector one = RVector::Ones(1);
  for (Eigen::Index i = 0; i < t.probabilities.rows(); ++i) {
    const double before = state_row_residual(model, t, i);
    if (before == 0.0) continue;
    const RVector target = t.probabilities.row(i).transpose();
    const LinfResult res = minimize_linf_residual(model.response, target, lo, up, ones, one);
    if (res.status != LpStatus::Optimal) continue;
    RVector row = res.x.cwiseMax(0.0);
    const double sum = row.sum();
    if (!(sum > 0.0)) continue;
    row /= sum;
    const RVector old = model.epistemic.row(i).transpose();
    model.epistemic.row(i) = row.transpose();
    if (state_row_residual(model, t, i) > before) model.epistemic.row(i) = old.transpose();
  }
}

void response_half_step(ClassicalModel& model, const BornTable& t) {
  const Eigen::Index k = model.k();
  const RVector lo = RVector::Zero(k);
  const RVector up = RVector::Ones(k);
  for (Eigen::Index j = 0; j < t.probabilities.cols(); ++j) {
    const double before = effect_row_residual(model, t, j);
    if (before == 0.0) continue;
    const RVector target = t.probabilities.col(j);
    const LinfResult res = minimize_linf_residual(model.epistemic, target, lo, up);
    if (res.status != LpStatus::Optimal) continue;
    const RVector old = model.response.row(j).transpose();
    model.response.row(j) = res.x.cwiseMax(0.0).cwiseMin(1.0).transpose();
    if (effect_row_residual(model, t, j) > before) model.response.row(j) = old.transpose();
  }
}

struct RunOutcome {
  ClassicalModel model;
  double residual;
  int sweeps;
  std::vector<double> trace;
};

RunOutcome run_alternating(ClassicalModel model, const BornTable& t, int iters, double stop_tol) {
  RunOutcome out{std::move(model), 0.0, 0, {}};
  double current = model_residual(out.model, t);
  out.trace.push_back(current);
  auto record = [&]() {
    const double r = model_residual(out.model, t);
    if (r > current) throw std::runtime_error("alternating_search: residual increased across a half-step");
    current = r;
    out.trace.push_back(r);
  };
  for (int it = 0; it < iters; ++it) {
    const double start = current;
    epistemic_half_step(out.model, t);
    record();
    response_half_step(out.model, t);
    record();
    out.sweeps = it + 1;
    if (start - current < stop_tol) break;
  }
  out.residual = current;
  return out;
}

}  // namespace

SearchResult alternating_search(const BornTable& table, Eigen::Index k, const SearchOptions& opts) {
  if (k < 1) throw PreconditionError("alternating_search: K must be at least 1");
  if (opts.restarts < 0 || opts.iters < 0) throw PreconditionError("alternating_search: negative budget");
  const Eigen::Index s = table.probabilities.rows();
  const Eigen::Index m = table.probabilities.cols();

  std::vector<ClassicalModel> starts;
  for (const auto& init : opts.initial_models) {
    if (init.k() != k) throw PreconditionError("alternating_search: initial model has the wrong K");
    check_shapes(init, table);
    init.validate();
    starts.push_back(init);
  }
  for (int r = 0; r < opts.restarts; ++r) {
    std::mt19937_64 gen(opts.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(r + 1));
    starts.push_back(random_model(s, m, k, gen));
  }
  if (starts.empty()) throw PreconditionError("alternating_search: no restarts requested");

  SearchResult best;
  bool have = false;
  for (const auto& start : starts) {
    RunOutcome run = run_alternating(start, table, opts.iters, opts.stop_tol);
    if (!have || run.residual < best.residual) {
      best.model = std::move(run.model);
      best.residual = run.residual;
      best.iterations = run.sweeps;
      best.trace = std::move(run.trace);
      have = true;
    }
  }
  best.model.validate();
  best.residual = model_residual(best.model, table);
  best.runs = static_cast<int>(starts.size());
  best.seed = opts.seed;
  return best;
}

SearchReport min_k_scan(const BornTable& table, Eigen::Index k_max, int restarts, std::uint64_t seed, int iters) {
  if (k_max < 1) throw PreconditionError("min_k_scan: k_max must be at least 1");
  const Eigen::Index s = table.probabilities.rows();
  SearchReport rep;
  rep.seed = seed;
  const ClassicalModel delta = delta_model(table.states, table.effects);
  for (Eigen::Index k = 1; k <= k_max; ++k) {
    SearchOptions opts;
    opts.restarts = restarts;
    opts.iters = iters;
    opts.seed = seed;
    if (k > 1) opts.initial_models.push_back(pad_model(rep.best_models.back(), 1));
    if (k >= s) opts.initial_models.push_back(pad_model(delta, k - s));
    if (opts.initial_models.empty() && restarts == 0) opts.restarts = 1;
    SearchResult res = alternating_search(table, k, opts);
    rep.rows.push_back({k, res.residual, res.runs, res.iterations});
    rep.best_models.push_back(std::move(res.model));
  }
  return rep;
}

}  // namespace ontic
