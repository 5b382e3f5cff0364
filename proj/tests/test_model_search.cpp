#include <doctest.h>

#include <cmath>
#include <random>

#include "ontic/model_search.hpp"
#include "ontic/specs.hpp"

using namespace ontic;

namespace {

BornTable orthogonal_pair() {
  const std::vector<PureState> states = {basis_state(0, 2), basis_state(1, 2)};
  return born_table(states, position_projectors(2), {{0, 1}});
}

// Effects from a net of projectors grouped into complete measurements.
std::vector<HermitianOperator> basis_projectors(const std::vector<std::vector<PureState>>& bases) {
  std::vector<HermitianOperator> out;
  for (const auto& b : bases)
    for (const auto& s : b) out.push_back(projector(s));
  return out;
}

std::vector<PureState> random_basis(std::size_t dim, std::uint64_t seed) {
  std::vector<PureState> raw = random_states(dim, dim, seed);
  CMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) m.col(static_cast<Eigen::Index>(i)) = raw[i].amplitudes();
  const CMatrix q = Eigen::HouseholderQR<CMatrix>(m).householderQ();
  std::vector<PureState> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(PureState::normalized(q.col(static_cast<Eigen::Index>(i))));
  return out;
}

std::vector<std::vector<std::size_t>> consecutive_groups(std::size_t count, std::size_t dim) {
  std::vector<std::vector<std::size_t>> g(count);
  for (std::size_t b = 0; b < count; ++b)
    for (std::size_t i = 0; i < dim; ++i) g[b].push_back(b * dim + i);
  return g;
}

BornTable random_table(std::size_t dim, std::size_t n_states, std::size_t n_bases, std::uint64_t seed) {
  std::vector<std::vector<PureState>> bases;
  for (std::size_t b = 0; b < n_bases; ++b) bases.push_back(random_basis(dim, seed + 100 + b));
  return born_table(random_states(n_states, dim, seed), basis_projectors(bases), consecutive_groups(n_bases, dim));
}

}  // namespace

TEST_CASE("Born table entries and group validation") {
  const auto t = orthogonal_pair();
  CHECK(t.probabilities(0, 0) == 1.0);
  CHECK(t.probabilities(0, 1) == 0.0);
  CHECK(t.probabilities(1, 1) == 1.0);
  const auto states = random_states(5, 3, 1);
  const auto effects = position_projectors(3);
  const auto t2 = born_table(states, effects, {{0, 1, 2}});
  for (Eigen::Index i = 0; i < 5; ++i) CHECK(std::abs(t2.probabilities.row(i).sum() - 1.0) <= 1e-12);
  CHECK_THROWS_AS(born_table(states, effects, {{0, 1}}), PreconditionError);
  CHECK_THROWS_AS(born_table(states, effects, {{0, 7}}), PreconditionError);
}

TEST_CASE("delta model reproduces Born statistics exactly") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto t2 = random_table(2, 20, 3, seed);
    CHECK(model_residual(delta_model(t2.states, t2.effects), t2) <= 1e-12);
    const auto t4 = random_table(4, 10, 2, seed);
    CHECK(model_residual(delta_model(t4.states, t4.effects), t4) <= 1e-12);
  }
  const auto t = random_table(3, 30, 5, 4);
  const auto m = delta_model(t.states, t.effects);
  m.validate();
  CHECK(model_residual(m, t) <= 1e-12);
}

TEST_CASE("Bohm position model is dispersion free and exact") {
  const auto states = random_states(12, 4, 77);
  const auto t = born_table(states, position_projectors(4), {{0, 1, 2, 3}});
  const auto m = bohm_position_model(states);
  m.validate();
  CHECK(model_residual(m, t) <= 1e-12);
  for (Eigen::Index j = 0; j < m.response.rows(); ++j)
    for (Eigen::Index k = 0; k < m.response.cols(); ++k) CHECK((m.response(j, k) == 0.0 || m.response(j, k) == 1.0));
}

TEST_CASE("residual of a uniform single-state model on the orthogonal pair") {
  const auto t = orthogonal_pair();
  ClassicalModel m;
  m.epistemic = RMatrix::Ones(2, 1);
  m.response = RMatrix::Constant(2, 1, 0.5);
  CHECK(model_residual(m, t) == 0.5);
  m.response(0, 0) = 0.8;
  CHECK(model_residual(m, t) == doctest::Approx(0.8));
}

TEST_CASE("residual is 1-Lipschitz in the response entries") {
  const auto t = random_table(2, 6, 2, 5);
  std::mt19937_64 g(5);
  std::uniform_real_distribution<double> u(0, 1);
  ClassicalModel m = delta_model(t.states, t.effects);
  for (int trial = 0; trial < 50; ++trial) {
    ClassicalModel p = m;
    double eps = 0.0;
    for (Eigen::Index j = 0; j < p.response.rows(); ++j)
      for (Eigen::Index k = 0; k < p.response.cols(); ++k) {
        const double d = 0.01 * (u(g) - 0.5);
        p.response(j, k) = std::clamp(p.response(j, k) + d, 0.0, 1.0);
        eps = std::max(eps, std::abs(p.response(j, k) - m.response(j, k)));
      }
    CHECK(model_residual(p, t) <= eps + 1e-12);
  }
}

TEST_CASE("model validation") {
  ClassicalModel m;
  m.epistemic = RMatrix::Constant(2, 2, 0.5);
  m.response = RMatrix::Constant(3, 2, 0.5);
  m.validate();
  m.response(0, 0) = 1.5;
  CHECK_THROWS_AS(m.validate(), PreconditionError);
  m.response(0, 0) = 0.5;
  m.epistemic(0, 0) = 0.7;
  CHECK_THROWS_AS(m.validate(), PreconditionError);
  CHECK_THROWS(model_residual(m, orthogonal_pair()));
}

TEST_CASE("orthogonal pair: K=1 best residual is 1/2 by a dense scan") {
  const auto t = orthogonal_pair();
  // With one ontic state both rows of the epistemic matrix are (1); only the
  // two response values vary.
  double scan = 1e9;
  for (int a = 0; a <= 1000; ++a)
    for (int b = 0; b <= 1000; ++b) {
      const double r0 = a * 1e-3, r1 = b * 1e-3;
      scan = std::min(scan, std::max({std::abs(r0 - 1), std::abs(r0), std::abs(r1), std::abs(r1 - 1)}));
    }
  SearchOptions opts;
  opts.seed = 1;
  const auto res = alternating_search(t, 1, opts);
  CHECK(std::abs(res.residual - 0.5) <= 1e-6);
  CHECK(std::abs(res.residual - scan) <= 1e-6);
}

TEST_CASE("orthogonal pair: K=2 is exact") {
  SearchOptions opts;
  opts.seed = 3;
  const auto res = alternating_search(orthogonal_pair(), 2, opts);
  CHECK(res.residual <= 1e-9);
  res.model.validate();
}

TEST_CASE("alternating residual trace never increases") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto t = random_table(2, 5, 2, seed);
    SearchOptions opts;
    opts.seed = seed;
    opts.restarts = 2;
    opts.iters = 30;
    const auto res = alternating_search(t, 3, opts);
    for (std::size_t i = 1; i < res.trace.size(); ++i) CHECK(res.trace[i] <= res.trace[i - 1]);
    CHECK(res.trace.back() == res.residual);
    CHECK(model_residual(res.model, t) == res.residual);
  }
}

TEST_CASE("search is reproducible for a fixed seed") {
  const auto t = random_table(2, 4, 2, 9);
  SearchOptions opts;
  opts.seed = 123;
  opts.restarts = 3;
  const auto a = alternating_search(t, 2, opts);
  const auto b = alternating_search(t, 2, opts);
  CHECK(a.residual == b.residual);
  CHECK(a.model.epistemic == b.model.epistemic);
  CHECK(a.model.response == b.model.response);
}

TEST_CASE("initial models are honoured") {
  const auto t = random_table(2, 4, 3, 1);
  SearchOptions opts;
  opts.restarts = 0;
  opts.initial_models = {delta_model(t.states, t.effects)};
  CHECK(alternating_search(t, 4, opts).residual <= 1e-12);
  opts.initial_models.front() = pad_model(opts.initial_models.front(), 1);
  CHECK_THROWS_AS(alternating_search(t, 4, opts), PreconditionError);
  opts.initial_models.clear();
  CHECK_THROWS_AS(alternating_search(t, 4, opts), PreconditionError);
}

TEST_CASE("min-K scan is non-increasing and reaches zero once K >= S") {
  const auto t = random_table(2, 3, 2, 12);
  const auto rep = min_k_scan(t, 4, 3, 5, 50);
  REQUIRE(rep.rows.size() == 4);
  for (std::size_t i = 1; i < rep.rows.size(); ++i) CHECK(rep.rows[i].best_residual <= rep.rows[i - 1].best_residual);
  CHECK(rep.rows[2].best_residual <= 1e-12);
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    CHECK(rep.rows[i].k == static_cast<Eigen::Index>(i + 1));
    CHECK(model_residual(rep.best_models[i], t) == rep.rows[i].best_residual);
  }
}
