#include "ontic/io.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace ontic {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

Json real_matrix(const RMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json real_vector(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

// JSON has no infinity; unbounded entries are written as null.
Json bound_vector(const RVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::isinf(v(i))) out.push_back(nullptr);
    else out.push_back(v(i));
  }
  return out;
}

RMatrix real_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a nested array");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows > 0 ? static_cast<Eigen::Index>(j.at(0).size()) : 0;
  RMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j.at(static_cast<std::size_t>(i));
    if (static_cast<Eigen::Index>(row.size()) != cols) throw std::invalid_argument("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = row.at(static_cast<std::size_t>(c)).get<double>();
  }
  return m;
}

}  // namespace

Json to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json to_json(const PureState& psi) {
  Json amps = Json::array();
  for (std::size_t i = 0; i < psi.dim(); ++i) amps.push_back(to_json(psi[i]));
  return {{"dim", psi.dim()}, {"amplitudes", std::move(amps)}};
}

Json to_json(const HermitianOperator& op) {
  Json rows = Json::array();
  const CMatrix& m = op.matrix();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Frame& frame) {
  Json pts = Json::array();
  for (const auto& p : frame.points()) {
    pts.push_back({{"label", p.label}, {"operator", to_json(p.op.to_dense())}, {"weight", p.weight}});
  }
  return {{"dim", frame.dim()}, {"points", std::move(pts)}};
}

Json to_json(const NoGoReport& r) {
  Json j = {
      {"frame", r.frame},
      {"verdict", to_string(r.verdict)},
      {"certificate", real_vector(r.certificate)},
      {"margin", r.margin},
      {"lp", {{"vars", r.lp_vars}, {"eqs", r.lp_eqs}}},
      {"effects", r.effects},
      {"complete_pairs", r.complete_pairs},
      {"completeness_defect", r.completeness_defect},
      {"equality_tolerance", r.equality_tolerance},
      {"iterations", r.iterations},
  };
  if (r.verdict == NoGoVerdict::UnexpectedlyFeasible) j["solution"] = real_matrix(r.solution);
  return j;
}

Json to_json(const ClassicalModel& m) {
  return {{"K", m.k()}, {"epistemic", real_matrix(m.epistemic)}, {"response", real_matrix(m.response)}};
}

Json to_json(const BoxLp& lp) {
  Json j = {
      {"vars", lp.n_vars()},
      {"eqs", lp.n_eqs()},
      {"lower", bound_vector(lp.lower)},
      {"upper", bound_vector(lp.upper)},
      {"eq_matrix", real_matrix(lp.eq_matrix)},
      {"eq_rhs", real_vector(lp.eq_rhs)},
  };
  if (lp.objective) j["objective"] = real_vector(*lp.objective);
  return j;
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("complex number must be [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

PureState state_from_json(const Json& j) {
  const Json& amps = j.at("amplitudes");
  CVector v(static_cast<Eigen::Index>(amps.size()));
  for (std::size_t i = 0; i < amps.size(); ++i) v(static_cast<Eigen::Index>(i)) = complex_from_json(amps.at(i));
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != amps.size()) {
    throw std::invalid_argument("state 'dim' disagrees with the amplitude count");
  }
  return PureState(std::move(v));
}

HermitianOperator operator_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("operator must be a nested array");
  const auto d = static_cast<Eigen::Index>(j.size());
  CMatrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const Json& row = j.at(static_cast<std::size_t>(r));
    if (static_cast<Eigen::Index>(row.size()) != d) throw std::invalid_argument("operator must be square");
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = complex_from_json(row.at(static_cast<std::size_t>(c)));
  }
  return HermitianOperator(std::move(m));
}

Frame frame_from_json(const Json& j, std::string name) {
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<FramePoint> pts;
  for (const Json& p : j.at("points")) {
    std::string label = p.at("label").is_string() ? p.at("label").get<std::string>() : p.at("label").dump();
    pts.push_back({std::move(label), {}, p.at("weight").get<double>(),
                   FrameOperator::dense(operator_from_json(p.at("operator")))});
  }
  return Frame(std::move(name), dim, std::move(pts));
}

ClassicalModel model_from_json(const Json& j) {
  ClassicalModel m;
  m.epistemic = real_matrix_from_json(j.at("epistemic"));
  m.response = real_matrix_from_json(j.at("response"));
  if (j.contains("K") && j.at("K").get<Eigen::Index>() != m.k()) throw std::invalid_argument("model 'K' disagrees with matrices");
  return m;
}

void write_distribution_csv(std::ostream& os, const Frame& frame, const QuasiDistribution& dist) {
  os << "label,value,weight\n";
  for (std::size_t k = 0; k < frame.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(k);
    os << frame[k].label << ',' << format_number(dist.values(i)) << ',' << format_number(dist.weights(i)) << '\n';
  }
}

void write_search_csv(std::ostream& os, const SearchReport& report) {
  os << "K,best_residual,restarts,iters\n";
  for (const auto& row : report.rows) {
    os << row.k << ',' << format_number(row.best_residual) << ',' << row.restarts << ',' << row.iters << '\n';
  }
}

}  // namespace ontic
