// ontic: command-line front end.
//
// Exit codes: 0 success (or the expected Infeasible no-go verdict), 1 usage or
// precondition error, 3 no-go LP unexpectedly feasible.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ontic/frames.hpp"
#include "ontic/io.hpp"
#include "ontic/model_search.hpp"
#include "ontic/reconstruction.hpp"
#include "ontic/specs.hpp"

namespace {

using namespace ontic;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUnexpected = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridFlags {
  int n_theta = 40;
  int n_phi = 40;
  int trunc = 40;
  double radius = 7.0;
  double step = 0.1;

  void add_sphere(CLI::App* app) {
    app->add_option("--ntheta", n_theta, "Bloch grid polar nodes")->capture_default_str();
    app->add_option("--nphi", n_phi, "Bloch grid azimuthal nodes")->capture_default_str();
  }
  void add_phase_space(CLI::App* app) {
    app->add_option("--trunc", trunc, "Fock truncation")->capture_default_str();
    app->add_option("--radius", radius, "phase-space cutoff |alpha| <= radius")->capture_default_str();
    app->add_option("--step", step, "phase-space grid step")->capture_default_str();
  }
  void validate_phase_space() const {
    if (trunc < 2) throw UsageError("--trunc must be at least 2");
    if (!(radius > 0.0) || !(step > 0.0) || !(step < radius)) {
      throw UsageError("grid needs --radius > 0 and 0 < --step < --radius");
    }
  }
};

std::filesystem::path output_path(const std::string& p) {
  std::filesystem::path path(p);
  if (path.is_relative()) {
    if (const char* dir = std::getenv("ONTIC_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
      path = std::filesystem::path(dir) / path;
    }
  }
  return path;
}

// Writes to the named file, or stdout when `path` is empty.
template <typename Fn>
void emit(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  const auto full = output_path(path);
  if (full.has_parent_path()) std::filesystem::create_directories(full.parent_path());
  std::ofstream out(full);
  if (!out) throw UsageError("cannot write '" + full.string() + "'");
  fn(out);
}

Frame load_frame(const std::string& name, const GridFlags& g) {
  if (name == "trine") return qubit_trine_frame();
  if (name == "bloch") return bloch_covariant_frame(g.n_theta, g.n_phi);
  if (name == "husimi") {
    g.validate_phase_space();
    return husimi_frame(g.trunc, g.radius, g.step);
  }
  if (!name.empty() && name.front() == '@') {
    std::ifstream in(name.substr(1));
    if (!in) throw UsageError("cannot open frame file '" + name.substr(1) + "'");
    try {
      return frame_from_json(Json::parse(in), std::filesystem::path(name.substr(1)).stem().string());
    } catch (const Json::exception& e) {
      throw UsageError(std::string("malformed frame JSON: ") + e.what());
    }
  }
  throw UsageError("unknown frame '" + name + "' (expected trine, bloch, husimi, or @file.json)");
}

std::string num(double v) { return format_number(v); }

// ---------------------------------------------------------------------------

int cmd_frames_list() {
  std::cout << "trine\nbloch\nhusimi\n";
  return kExitOk;
}

int cmd_frames_show(const std::string& name, const GridFlags& g, const std::string& out) {
  const Frame f = load_frame(name, g);
  Json j = {
      {"name", f.name()},
      {"points", f.size()},
      {"completeness_defect", f.completeness_defect()},
      {"psd", f.is_psd()},
      {"min_eigenvalue", f.min_operator_eigenvalue()},
      {"frame", to_json(f)},
  };
  emit(out, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  return kExitOk;
}

int cmd_dist(const std::string& frame_name, const std::string& state_spec, const GridFlags& g, const std::string& out) {
  const Frame f = load_frame(frame_name, g);
  const PureState psi = parse_state_spec(state_spec, f.dim());
  if (psi.dim() != f.dim()) throw UsageError("state dimension does not match the frame");
  const QuasiDistribution dist = frame_distribution(f, psi);
  const ConditionReport rep = check_conditions(dist);
  emit(out, [&](std::ostream& os) { write_distribution_csv(os, f, dist); });
  std::cerr << "normalization " << num(rep.normalization) << '\n'
            << "completeness_defect " << num(rep.completeness_defect) << '\n'
            << "min_value " << num(rep.min_value) << '\n'
            << "nonneg_ok " << (rep.nonneg_ok ? "true" : "false") << '\n'
            << "normalization_ok " << (rep.normalization_ok ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_nogo(const std::string& frame_name, const GridFlags& g, const std::string& effects_name, bool no_pairs,
             std::optional<double> tol, const std::string& dump_lp, const std::string& out) {
  const Frame f = load_frame(frame_name, g);
  EffectSet effects;
  if (effects_name == "ic") effects = informationally_complete_effects(f.dim());
  else if (effects_name == "pair") {
    if (f.dim() != 2) throw UsageError("--effects pair needs a qubit frame");
    effects = qubit_pair_effects();
  } else {
    throw UsageError("--effects must be ic or pair");
  }
  NoGoOptions opts;
  opts.complete_pairs = !no_pairs;
  if (tol) opts.tol = *tol;

  const BoxLp lp = build_no_go_lp(f, effects, opts);
  if (!dump_lp.empty()) emit(dump_lp, [&](std::ostream& os) { os << to_json(lp).dump() << '\n'; });
  const NoGoReport rep = verify_no_go(f, effects, opts);
  emit(out, [&](std::ostream& os) { os << to_json(rep).dump(2) << '\n'; });

  if (rep.verdict == NoGoVerdict::Infeasible) {
    const double margin = check_certificate(lp, rep.certificate);
    std::cerr << "verdict Infeasible, certificate margin " << num(margin) << " (re-checked)\n";
    if (!(margin > SimplexOptions{}.certificate_margin)) {
      std::cerr << "error: certificate failed the independent re-check\n";
      return kExitError;
    }
    return kExitOk;
  }
  std::cerr << "verdict UnexpectedlyFeasible: bounded responses exist at this resolution\n";
  return kExitUnexpected;
}

int cmd_qmoment(const std::string& state_spec, const GridFlags& g) {
  g.validate_phase_space();
  const PureState psi = parse_state_spec(state_spec, static_cast<std::size_t>(g.trunc));
  if (psi.dim() != static_cast<std::size_t>(g.trunc)) throw UsageError("state dimension must equal --trunc");
  const Frame f = husimi_frame(g.trunc, g.radius, g.step);
  const double moment = husimi_number_moment(psi, f);
  const double exact = number_expectation(psi);
  const QuasiDistribution q = frame_distribution(f, psi);
  std::size_t neg_points = 0;
  double neg_mass = 0.0;
  double min_factor = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto& c = f[k].coords;
    const double factor = c[0] * c[0] + c[1] * c[1] - 1.0;
    min_factor = std::min(min_factor, factor);
    if (factor < 0.0) {
      ++neg_points;
      neg_mass += q.values(static_cast<Eigen::Index>(k)) * q.weights(static_cast<Eigen::Index>(k));
    }
  }
  std::cout << "quadrature_moment " << num(moment) << '\n'
            << "exact_moment " << num(exact) << '\n'
            << "abs_error " << num(std::abs(moment - exact)) << '\n'
            << "negative_factor_points " << neg_points << '\n'
            << "negative_factor_mass " << num(neg_mass) << '\n'
            << "min_conditional_expectation " << num(min_factor) << '\n';
  return kExitOk;
}

int cmd_wigner(const std::string& state_spec, const GridFlags& g, bool marginal, double q_max, double q_step,
               const std::string& out) {
  g.validate_phase_space();
  const PureState psi = parse_state_spec(state_spec, static_cast<std::size_t>(g.trunc));
  const auto nodes = disk_grid(g.radius, g.step);
  const QuasiDistribution w = wigner_values(psi, g.radius, g.step);
  const ConditionReport rep = check_conditions(w);
  if (marginal) {
    if (!(q_max > 0.0) || !(q_step > 0.0)) throw UsageError("--q-max and --q-step must be positive");
    const long n = static_cast<long>(std::floor(q_max / q_step + 1e-9));
    RVector qs(2 * n + 1);
    for (long i = -n; i <= n; ++i) qs(i + n) = static_cast<double>(i) * q_step;
    const RVector m = wigner_position_marginal(psi, qs, g.radius, g.step);
    emit(out, [&](std::ostream& os) {
      os << "q,marginal\n";
      for (Eigen::Index i = 0; i < qs.size(); ++i) os << num(qs(i)) << ',' << num(m(i)) << '\n';
    });
    std::cerr << "marginal_sum " << num(m.sum() * q_step) << '\n';
  } else {
    emit(out, [&](std::ostream& os) {
      os << "re,im,W\n";
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        os << num(nodes[k][0]) << ',' << num(nodes[k][1]) << ',' << num(w.values(static_cast<Eigen::Index>(k))) << '\n';
      }
    });
  }
  std::cerr << "min " << num(rep.min_value) << '\n' << "integral " << num(rep.normalization) << '\n';
  return kExitOk;
}

int cmd_search(const std::string& states_spec, const std::string& effects_spec, int kmax, int restarts,
               std::uint64_t seed, int iters, const std::string& model_out, const std::string& out) {
  if (kmax < 1) throw UsageError("--kmax must be at least 1");
  if (restarts < 0 || iters < 1) throw UsageError("--restarts must be >= 0 and --iters >= 1");
  const StateNet states = parse_net_spec(states_spec);
  const StateNet effect_net = parse_net_spec(effects_spec);
  std::vector<HermitianOperator> effects;
  for (const auto& s : effect_net.states) effects.push_back(projector(s));
  const BornTable table = born_table(states.states, effects, effect_net.groups);
  const SearchReport rep = min_k_scan(table, kmax, restarts, seed, iters);

  emit(out, [&](std::ostream& os) { write_search_csv(os, rep); });
  std::size_t best = 0;
  for (std::size_t i = 1; i < rep.rows.size(); ++i) {
    if (rep.rows[i].best_residual < rep.rows[best].best_residual - 1e-9) best = i;
  }
  if (!model_out.empty()) {
    emit(model_out, [&](std::ostream& os) { os << to_json(rep.best_models[best]).dump(2) << '\n'; });
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-probability frames, response reconstruction, and ontic model search"};
  app.require_subcommand(1);
  GridFlags grid;
  std::string out;

  auto* frames = app.add_subcommand("frames", "list or show the built-in frames");
  frames->require_subcommand(1);
  frames->add_subcommand("list", "print the built-in frame names");
  auto* show = frames->add_subcommand("show", "emit frame JSON with completeness and PSD checks");
  std::string show_name;
  show->add_option("name", show_name, "trine | bloch | husimi | @file.json")->required();
  grid.add_sphere(show);
  grid.add_phase_space(show);
  show->add_option("--out", out, "output file (default stdout)");

  auto* dist = app.add_subcommand("dist", "CSV of rho(X|psi) over a frame");
  std::string dist_frame, dist_state;
  dist->add_option("frame", dist_frame, "trine | bloch | husimi | @file.json")->required();
  dist->add_option("state", dist_state, "state spec")->required();
  grid.add_sphere(dist);
  grid.add_phase_space(dist);
  dist->add_option("--out", out, "output file (default stdout)");

  auto* nogo = app.add_subcommand("nogo", "bounded joint reconstruction LP with certificate");
  std::string nogo_frame, effects_name = "ic", dump_lp;
  bool no_pairs = false;
  std::optional<double> tol;
  nogo->add_option("frame", nogo_frame, "trine | bloch | husimi | @file.json")->required();
  nogo->add_option("--effects", effects_name, "ic | pair")->capture_default_str();
  nogo->add_flag("--no-pairs", no_pairs, "drop the complete-pair constraints");
  nogo->add_option("--tol", tol, "equality tolerance added to the frame defect");
  nogo->add_option("--dump-lp", dump_lp, "write the LP instance as JSON");
  grid.add_sphere(nogo);
  grid.add_phase_space(nogo);
  nogo->add_option("--out", out, "report file (default stdout)");

  auto* qmoment = app.add_subcommand("qmoment", "number moment from the Husimi function");
  std::string q_state;
  qmoment->add_option("state", q_state, "state spec")->required();
  grid.add_phase_space(qmoment);

  auto* wigner = app.add_subcommand("wigner", "Wigner function on a phase-space grid");
  std::string w_state;
  bool marginal = false;
  double q_max = 5.0, q_step = 0.1;
  wigner->add_option("state", w_state, "state spec")->required();
  wigner->add_flag("--marginal", marginal, "emit the position marginal q,marginal instead of the grid");
  wigner->add_option("--q-max", q_max, "marginal range [-q_max, q_max]")->capture_default_str();
  wigner->add_option("--q-step", q_step, "marginal node spacing")->capture_default_str();
  grid.add_phase_space(wigner);
  wigner->add_option("--out", out, "output file (default stdout)");

  auto* search = app.add_subcommand("search", "alternating search for finite ontic models");
  std::string states_spec, effects_spec, model_out = "search_model.json";
  int kmax = 2, restarts = 8, iters = 200;
  std::uint64_t seed = 0;
  search->add_option("--states", states_spec, "net spec")->required();
  search->add_option("--effects", effects_spec, "net spec (projectors onto its states)")->required();
  search->add_option("--kmax", kmax, "largest ontic-state count")->capture_default_str();
  search->add_option("--restarts", restarts, "random restarts per K")->capture_default_str();
  search->add_option("--iters", iters, "sweep budget per restart")->capture_default_str();
  search->add_option("--seed", seed, "generator seed")->capture_default_str();
  search->add_option("--model-out", model_out, "best model JSON ('' to skip)")->capture_default_str();
  search->add_option("--out", out, "CSV file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (frames->got_subcommand("list")) return cmd_frames_list();
    if (frames->parsed()) return cmd_frames_show(show_name, grid, out);
    if (dist->parsed()) return cmd_dist(dist_frame, dist_state, grid, out);
    if (nogo->parsed()) return cmd_nogo(nogo_frame, grid, effects_name, no_pairs, tol, dump_lp, out);
    if (qmoment->parsed()) return cmd_qmoment(q_state, grid);
    if (wigner->parsed()) return cmd_wigner(w_state, grid, marginal, q_max, q_step, out);
    if (search->parsed()) return cmd_search(states_spec, effects_spec, kmax, restarts, seed, iters, model_out, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
