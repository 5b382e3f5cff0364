#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ontic/frames.hpp"
#include "ontic/specs.hpp"
#include "oracles.hpp"

using namespace ontic;

namespace {

constexpr double kPi = std::numbers::pi;

CMatrix dense(const Frame& f, std::size_t k) { return f[k].op.to_dense().matrix(); }

}  // namespace

TEST_CASE("trine frame operators") {
  const Frame f = qubit_trine_frame();
  REQUIRE(f.size() == 3);
  const CMatrix a1 = dense(f, 0);
  CHECK(std::abs(a1(0, 0) - 2.0 / 3.0) <= 1e-15);
  CHECK(std::abs(a1(0, 1)) == 0.0);
  CHECK(std::abs(a1(1, 1)) <= 1e-15);
  CHECK(f.completeness_defect() <= 1e-15);
  CHECK(f.is_psd());
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(std::abs(oracle::min_eig_2x2(dense(f, k))) <= 1e-15);
    CHECK(std::abs(dense(f, k).trace().real() - 2.0 / 3.0) <= 1e-15);
  }
}

TEST_CASE("trine distributions of the basis states") {
  const Frame f = qubit_trine_frame();
  const auto d0 = frame_distribution(f, basis_state(0, 2));
  const auto d1 = frame_distribution(f, basis_state(1, 2));
  const double expect0[3] = {2.0 / 3.0, 1.0 / 6.0, 1.0 / 6.0};
  const double expect1[3] = {0.0, 0.5, 0.5};
  for (int k = 0; k < 3; ++k) {
    CHECK(std::abs(d0.values(k) - expect0[k]) <= 1e-15);
    CHECK(std::abs(d1.values(k) - expect1[k]) <= 1e-15);
  }
  const auto rep = check_conditions(d0);
  CHECK(rep.nonneg_ok);
  CHECK(rep.normalization_ok);
}

TEST_CASE("distributions are nonnegative and normalized for a PSD frame") {
  const Frame f = qubit_trine_frame();
  for (const auto& psi : random_states(200, 2, 17)) {
    const auto rep = check_conditions(frame_distribution(f, psi));
    CHECK(rep.nonneg_ok);
    CHECK(std::abs(rep.normalization - 1.0) <= 1e-12);
  }
}

TEST_CASE("distributions are linear in the density operator") {
  const Frame f = bloch_covariant_frame(12, 12);
  const auto states = random_states(2, 2, 4);
  const double p = 0.3;
  const auto rho = p * projector(states[0]) + (1 - p) * projector(states[1]);
  const auto mixed = frame_distribution(f, rho);
  const auto a = frame_distribution(f, states[0]);
  const auto b = frame_distribution(f, states[1]);
  CHECK((mixed.values - (p * a.values + (1 - p) * b.values)).cwiseAbs().maxCoeff() <= 1e-14);
  CHECK_THROWS_AS(frame_distribution(f, basis_state(0, 3)), DimensionError);
}

TEST_CASE("Bloch frame values follow cos^2(theta/2)/2pi") {
  const Frame f = bloch_covariant_frame(40, 40);
  const auto d0 = frame_distribution(f, basis_state(0, 2));
  const auto d1 = frame_distribution(f, basis_state(1, 2));
  double worst = 0.0;
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double theta = f[k].coords[0];
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    worst = std::max(worst, std::abs(d0.values(static_cast<Eigen::Index>(k)) - c * c / (2 * kPi)));
    worst = std::max(worst, std::abs(d1.values(static_cast<Eigen::Index>(k)) - s * s / (2 * kPi)));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("Bloch frame completeness improves with the grid") {
  const double d20 = bloch_covariant_frame(20, 20).completeness_defect();
  const double d40 = bloch_covariant_frame(40, 40).completeness_defect();
  const double d80 = bloch_covariant_frame(80, 80).completeness_defect();
  CHECK(d40 <= 1e-3);
  CHECK(d40 < d20);
  CHECK(d80 < d40);
  // Midpoint rule on sin(theta): the defect shrinks roughly fourfold per doubling.
  CHECK(d20 / d40 == doctest::Approx(4.0).epsilon(0.05));
  const Frame f = bloch_covariant_frame(40, 40);
  CHECK(f.is_psd());
  const auto rep = check_conditions(frame_distribution(f, basis_state(0, 2)));
  CHECK(std::abs(rep.normalization - 1.0) <= f.completeness_defect() + 1e-10);
  CHECK(rep.normalization_ok);
  CHECK_THROWS_AS(bloch_covariant_frame(1, 10), PreconditionError);
}

TEST_CASE("disk grid") {
  const auto g = disk_grid(1.0, 0.5);
  CHECK(g.size() == 13);  // 4 per axis direction + origin + 4 at (±0.5, ±0.5)
  for (const auto& p : g) CHECK(p[0] * p[0] + p[1] * p[1] <= 1.0 + 1e-12);
  CHECK_THROWS(disk_grid(1.0, 0.0));
  CHECK_THROWS(disk_grid(1.0, 2.0));
  CHECK_THROWS(disk_grid(-1.0, 0.1));
}

TEST_CASE("Husimi frame of the vacuum") {
  const Frame f = husimi_frame(40, 7.0, 0.1);
  const auto q = frame_distribution(f, fock_state(0, 40));
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double x = f[k].coords[0], y = f[k].coords[1];
    const double r2 = x * x + y * y;
    if (r2 > 9.0) continue;
    CHECK(std::abs(q.values(static_cast<Eigen::Index>(k)) - std::exp(-r2) / kPi) <= 1e-9);
  }
  const auto rep = check_conditions(q);
  CHECK(rep.nonneg_ok);
  CHECK(std::abs(rep.normalization - 1.0) <= 1e-3);
  CHECK(f.is_psd());
}

TEST_CASE("Husimi frame rejects bad grids") {
  CHECK_THROWS(husimi_frame(1, 3.0, 0.1));
  CHECK_THROWS(husimi_frame(10, 3.0, 0.0));
}

TEST_CASE("weighted sums are compensated") {
  RVector v = RVector::Constant(1000001, 1e-16);
  v(0) = 1.0;
  const RVector w = RVector::Ones(v.size());
  CHECK(std::abs(weighted_sum(v, w) - (1.0 + 1e-10)) <= 1e-15);
}

TEST_CASE("frames reject inconsistent points") {
  std::vector<FramePoint> pts;
  pts.push_back({"a", {}, 1.0, FrameOperator::dense(HermitianOperator::identity(2))});
  pts.push_back({"b", {}, -1.0, FrameOperator::dense(HermitianOperator::identity(2))});
  CHECK_THROWS_AS(Frame("bad", 2, pts), PreconditionError);
  pts[1].weight = 1.0;
  pts[1].op = FrameOperator::dense(HermitianOperator::identity(3));
  CHECK_THROWS_AS(Frame("bad", 2, pts), DimensionError);
}

TEST_CASE("a non-PSD frame is flagged") {
  std::vector<FramePoint> pts;
  pts.push_back({"a", {}, 1.0, FrameOperator::dense(HermitianOperator::identity(2) + pauli_z() * 1.5)});
  pts.push_back({"b", {}, 1.0, FrameOperator::dense(pauli_z() * -1.5)});
  const Frame f("signed", 2, pts);
  CHECK_FALSE(f.is_psd());
  CHECK(f.min_operator_eigenvalue() == doctest::Approx(-1.5));
  CHECK(f.completeness_defect() <= 1e-15);
  const auto rep = check_conditions(frame_distribution(f, basis_state(1, 2)));
  CHECK_FALSE(rep.nonneg_ok);
  CHECK(rep.normalization_ok);
}
