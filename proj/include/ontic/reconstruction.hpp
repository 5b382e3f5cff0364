// Response-function reconstruction over a frame.
//
// Given a frame {(A_k, w_k)} and an effect E, look for values P_k with
//   sum_k P_k w_k A_k = E
// either unrestricted or with 0 <= P_k <= 1. The bounded joint problem over a
// set of projectors is the finite-dimensional form of the no-go statement for
// positive linear frames: it must come back infeasible, with a certificate.

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ontic/frames.hpp"
#include "ontic/lp.hpp"
#include "ontic/quantum.hpp"

namespace ontic {

inline constexpr double kEqualityTol = 1e-8;
inline constexpr double kMaxCompletenessDefect = 1e-2;

/// Projectors used as reconstruction targets. `pairs` lists complete
/// two-outcome measurements (E_a + E_b = 1).
struct EffectSet {
  std::vector<HermitianOperator> effects;
  std::vector<std::string> labels;
  std::vector<std::array<std::size_t, 2>> pairs;
};

/// Eigenprojectors of sigma_z, sigma_x, sigma_y, paired per observable.
EffectSet qubit_ic_effects();
/// {|0><0|, |1><1|} as one pair.
EffectSet qubit_pair_effects();
/// For dim 2 the qubit set above. Otherwise the computational basis plus the
/// projectors onto (e_i + e_j)/sqrt2 and (e_i + i e_j)/sqrt2, unpaired.
EffectSet informationally_complete_effects(std::size_t dim);

struct ResponseFunction {
  RVector values;
  bool bounded = false;
  double residual = 0.0;  // max_ij |(sum_k P_k w_k A_k - E)_ij|
};

struct ReconstructionResult {
  LpStatus status = LpStatus::NumericalFailure;
  std::optional<ResponseFunction> response;  // when Feasible
  RVector certificate;                       // when Infeasible
  double margin = 0.0;
  double equality_tolerance = 0.0;
  std::size_t lp_vars = 0;
  std::size_t lp_eqs = 0;
};

/// Solves the exact system first; if that fails, retries with equality slack
/// completeness_defect + tol and reports that verdict (certificate included).
ReconstructionResult reconstruct_response(const Frame& frame, const HermitianOperator& effect, bool bounded,
                                          double tol = kEqualityTol);

/// sum_k values_k w_k A_k
HermitianOperator reconstruct_operator(const Frame& frame, const RVector& values);

enum class NoGoVerdict { Infeasible, UnexpectedlyFeasible };
const char* to_string(NoGoVerdict v);

struct NoGoOptions {
  bool complete_pairs = true;
  double tol = kEqualityTol;
  double max_completeness_defect = kMaxCompletenessDefect;
};

struct NoGoReport {
  std::string frame;
  std::vector<std::string> effects;
  bool complete_pairs = true;
  NoGoVerdict verdict = NoGoVerdict::UnexpectedlyFeasible;
  RVector certificate;
  double margin = 0.0;
  /// One row per effect, one column per frame point; filled when feasible.
  RMatrix solution;
  std::size_t lp_vars = 0;
  std::size_t lp_eqs = 0;
  double completeness_defect = 0.0;
  double equality_tolerance = 0.0;
  long iterations = 0;
};

/// The joint bounded LP. With complete pairs, the second member of each pair
/// is eliminated through P_b = 1 - P_a, whose target becomes
/// sum_k w_k A_k - E_b. Each equation carries a slack in [-tau, tau] with
/// tau = completeness defect + tol. Throws PreconditionError when the frame
/// is not PSD, not normalized within max_completeness_defect, or an effect is
/// not a rank-one projector.
BoxLp build_no_go_lp(const Frame& frame, const EffectSet& effects, const NoGoOptions& opts = {});

/// Throws PreconditionError on violated hypotheses; throws std::runtime_error
/// when the solver can back neither verdict.
NoGoReport verify_no_go(const Frame& frame, const EffectSet& effects, const NoGoOptions& opts = {});

/// sum_k (|a_k|^2 - 1) Q(a_k|psi) w_k over a Husimi frame. Equals <n> up to
/// truncation and quadrature error.
double husimi_number_moment(const PureState& psi, const Frame& husimi);
double husimi_number_moment(const HermitianOperator& rho, const Frame& husimi);

/// <chi_i|E|chi_i> for a projector E, i.e. |<phi|chi_i>|^2 when E = |phi><phi|.
RVector ontic_response(const HermitianOperator& effect, const std::vector<PureState>& net);

}  // namespace ontic
