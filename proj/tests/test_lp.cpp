#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "ontic/lp.hpp"
#include "oracles.hpp"

using namespace ontic;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

BoxLp make(RMatrix a, RVector b, RVector lo, RVector up) {
  BoxLp lp;
  lp.eq_matrix = std::move(a);
  lp.eq_rhs = std::move(b);
  lp.lower = std::move(lo);
  lp.upper = std::move(up);
  return lp;
}

RVector vec(std::initializer_list<double> v) {
  RVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

void check_feasible(const BoxLp& lp, const LpResult& r) {
  REQUIRE(r.status == LpStatus::Feasible);
  const double scale = lp.n_eqs() > 0 ? lp.eq_rhs.cwiseAbs().maxCoeff() : 0.0;
  CHECK(equality_residual(lp, r.solution) <= 1e-8 * (1 + scale));
  CHECK(bound_violation(lp, r.solution) == 0.0);
}

void check_infeasible(const BoxLp& lp, const LpResult& r) {
  REQUIRE(r.status == LpStatus::Infeasible);
  CHECK(check_certificate(lp, r.certificate) > 1e-9);
}

}  // namespace

TEST_CASE("a single equation inside and outside the box") {
  RMatrix a(1, 2);
  a << 1.0, 1.0;
  const auto ok = make(a, vec({1.5}), vec({0, 0}), vec({1, 1}));
  check_feasible(ok, solve_feasibility(ok));
  const auto bad = make(a, vec({2.5}), vec({0, 0}), vec({1, 1}));
  const auto r = solve_feasibility(bad);
  check_infeasible(bad, r);
  // y = (1) certifies 2.5 > 1 + 1.
  CHECK(check_certificate(bad, vec({1.0})) == doctest::Approx(0.5));
  CHECK(r.margin == doctest::Approx(check_certificate(bad, r.certificate)));
}

TEST_CASE("free and half-bounded variables") {
  RMatrix a(2, 3);
  a << 1, -1, 0,
       0, 1, 1;
  const auto lp = make(a, vec({-5, 7}), vec({0, -kInf, 0}), vec({1, kInf, kInf}));
  check_feasible(lp, solve_feasibility(lp));
  // x0 - x1 = -5 with x0 in [0,1] needs x1 >= 5, above its cap of 4.
  BoxLp tight = lp;
  tight.upper(1) = 4.0;
  check_infeasible(tight, solve_feasibility(tight));
}

TEST_CASE("certificates that lean on an infinite bound are rejected") {
  RMatrix a(1, 1);
  a << 1.0;
  const auto lp = make(a, vec({5.0}), vec({0.0}), vec({kInf}));
  CHECK(check_certificate(lp, vec({1.0})) == -kInf);
  CHECK(check_certificate(lp, vec({-1.0})) == doctest::Approx(-5.0));
  CHECK_THROWS(check_certificate(lp, vec({1.0, 2.0})));
}

TEST_CASE("invalid instances are refused") {
  RMatrix a(1, 2);
  a << 1, 1;
  CHECK_THROWS(solve_feasibility(make(a, vec({1}), vec({1, 0}), vec({0, 1}))));
  CHECK_THROWS(solve_feasibility(make(a, vec({1, 2}), vec({0, 0}), vec({1, 1}))));
  CHECK_THROWS(solve_feasibility(make(a, vec({std::nan("")}), vec({0, 0}), vec({1, 1}))));
  CHECK_THROWS(minimize(make(a, vec({1}), vec({0, 0}), vec({1, 1}))));
}

TEST_CASE("no equations is trivially feasible") {
  const auto lp = make(RMatrix(0, 2), RVector(0), vec({-1, 0}), vec({1, 1}));
  check_feasible(lp, solve_feasibility(lp));
}

TEST_CASE("minimize a small LP") {
  // min -x0 - 2 x1  s.t. x0 + x1 + s = 4, x in [0,3]^2, s >= 0  ->  x = (1,3)
  RMatrix a(1, 3);
  a << 1, 1, 1;
  auto lp = make(a, vec({4}), vec({0, 0, 0}), vec({3, 3, kInf}));
  lp.objective = vec({-1, -2, 0});
  const auto r = minimize(lp);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective_value == doctest::Approx(-7.0));
  CHECK(r.solution(0) == doctest::Approx(1.0));
  CHECK(r.solution(1) == doctest::Approx(3.0));
  lp.upper(1) = kInf;
  CHECK(minimize(lp).status == LpStatus::Optimal);
  lp.eq_matrix(0, 1) = -1.0;
  CHECK(minimize(lp).status == LpStatus::Unbounded);
}

TEST_CASE("minimize_linf_residual against a one-dimensional scan") {
  // min_x max(|x - 0|, |x - 1|) with x in [-5, 5] -> t = 0.5 at x = 0.5
  RMatrix a(2, 1);
  a << 1, 1;
  const auto r = minimize_linf_residual(a, vec({0, 1}), vec({-5}), vec({5}));
  REQUIRE(r.status == LpStatus::Optimal);
  double scan = kInf;
  for (int i = -5000; i <= 5000; ++i) {
    const double x = i * 1e-3;
    scan = std::min(scan, std::max(std::abs(x), std::abs(x - 1.0)));
  }
  CHECK(std::abs(r.t - scan) <= 1e-9);
  CHECK(r.x(0) == doctest::Approx(0.5));
  // Box binding: x in [2, 3] -> t = 2.
  const auto r2 = minimize_linf_residual(a, vec({0, 1}), vec({2}), vec({3}));
  CHECK(r2.t == doctest::Approx(2.0));
}

TEST_CASE("minimize_linf_residual honours hard equalities") {
  // Two weights on the simplex fitting (0.2, 0.9): t = 0.05 at x0 = 0.15.
  RMatrix a = RMatrix::Identity(2, 2);
  RMatrix e(1, 2);
  e << 1, 1;
  const auto r = minimize_linf_residual(a, vec({0.2, 0.9}), vec({0, 0}), vec({1, 1}), e, vec({1}));
  REQUIRE(r.status == LpStatus::Optimal);
  double scan = kInf;
  for (int i = 0; i <= 100000; ++i) {
    const double x = i * 1e-5;
    scan = std::min(scan, std::max(std::abs(x - 0.2), std::abs(1 - x - 0.9)));
  }
  CHECK(std::abs(r.t - scan) <= 1e-5);
  CHECK(std::abs(r.x.sum() - 1.0) <= 1e-12);
}

TEST_CASE("planted instances are classified correctly") {
  std::mt19937_64 g(20240601);
  int feasible = 0, infeasible = 0;
  for (int t = 0; t < 300; ++t) {
    const int m = std::uniform_int_distribution<int>(1, 30)(g);
    const int n = std::uniform_int_distribution<int>(1, 30)(g);
    const bool plant_feasible = t % 2 == 0;
    const auto p = plant_feasible ? oracle::planted_feasible(g, m, n) : oracle::planted_infeasible(g, m, n);
    const auto r = solve_feasibility(p.lp);
    CAPTURE(t);
    CAPTURE(m);
    CAPTURE(n);
    if (plant_feasible) {
      check_feasible(p.lp, r);
      ++feasible;
    } else {
      // The planted y is itself a valid certificate.
      CHECK(check_certificate(p.lp, p.witness) == doctest::Approx(p.planted_margin).epsilon(1e-6));
      check_infeasible(p.lp, r);
      ++infeasible;
    }
  }
  CHECK(feasible == 150);
  CHECK(infeasible == 150);
}

TEST_CASE("verdict is invariant under row scaling") {
  std::mt19937_64 g(77);
  for (int t = 0; t < 40; ++t) {
    const auto p = t % 2 ? oracle::planted_feasible(g, 8, 12) : oracle::planted_infeasible(g, 8, 12);
    BoxLp scaled = p.lp;
    for (Eigen::Index i = 0; i < scaled.eq_matrix.rows(); ++i) {
      const double s = std::pow(10.0, oracle::uniform(g, -3, 3));
      scaled.eq_matrix.row(i) *= s;
      scaled.eq_rhs(i) *= s;
    }
    CHECK(solve_feasibility(scaled).status == solve_feasibility(p.lp).status);
  }
}

TEST_CASE("solver is deterministic") {
  std::mt19937_64 g(3);
  const auto p = oracle::planted_infeasible(g, 20, 40);
  const auto a = solve_feasibility(p.lp);
  const auto b = solve_feasibility(p.lp);
  CHECK(a.iterations == b.iterations);
  CHECK(a.certificate == b.certificate);
}

TEST_CASE("long double instantiation") {
  using LBox = BasicBoxLp<long double>;
  LBox lp;
  lp.eq_matrix = LBox::Matrix::Ones(1, 2);
  lp.eq_rhs = LBox::Vector::Constant(1, 3.0L);
  lp.lower = LBox::Vector::Zero(2);
  lp.upper = LBox::Vector::Ones(2);
  const auto r = solve_feasibility(lp);
  REQUIRE(r.status == LpStatus::Infeasible);
  CHECK(check_certificate(lp, r.certificate) > 0.9L);
  lp.eq_rhs(0) = 1.25L;
  const auto ok = solve_feasibility(lp);
  REQUIRE(ok.status == LpStatus::Feasible);
  CHECK(equality_residual(lp, ok.solution) <= 1e-15L);
}
