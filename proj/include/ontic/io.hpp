// JSON and CSV encodings.
//
// Complex numbers are [re, im]; operators are row-major nested arrays of
// complex numbers; states are {"dim": d, "amplitudes": [[re, im], ...]}.
// All numeric text is locale independent.

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ontic/frames.hpp"
#include "ontic/lp.hpp"
#include "ontic/model_search.hpp"
#include "ontic/reconstruction.hpp"

namespace ontic {

using Json = nlohmann::json;

/// Shortest round-trip decimal form, '.' separator.
std::string format_number(double v);

Json to_json(Complex z);
Json to_json(const PureState& psi);
Json to_json(const HermitianOperator& op);
/// {"dim": d, "points": [{"label", "operator", "weight"}, ...]}
Json to_json(const Frame& frame);
/// {"frame", "verdict", "certificate", "margin", "lp": {"vars", "eqs"}, ...}
Json to_json(const NoGoReport& report);
/// {"K": k, "epistemic": [[...]], "response": [[...]]}
Json to_json(const ClassicalModel& model);
/// Debug dump of an LP instance.
Json to_json(const BoxLp& lp);

Complex complex_from_json(const Json& j);
PureState state_from_json(const Json& j);
HermitianOperator operator_from_json(const Json& j);
Frame frame_from_json(const Json& j, std::string name = "json");
ClassicalModel model_from_json(const Json& j);

/// label,value,weight
void write_distribution_csv(std::ostream& os, const Frame& frame, const QuasiDistribution& dist);
/// K,best_residual,restarts,iters
void write_search_csv(std::ostream& os, const SearchReport& report);

}  // namespace ontic
