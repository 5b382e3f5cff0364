#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "ontic/io.hpp"

using namespace ontic;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded and ONTIC_OUTPUT_DIR pointed at a
// scratch directory.
Run run_cli(const std::string& args) {
  static const fs::path scratch = [] {
    fs::path p = fs::temp_directory_path() / "ontic_cli_test";
    fs::create_directories(p);
    return p;
  }();
  const std::string cmd =
      "ONTIC_OUTPUT_DIR='" + scratch.string() + "' '" + std::string(ONTIC_CLI_PATH) + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch_file(const std::string& name) {
  return fs::temp_directory_path() / "ontic_cli_test" / name;
}

std::string value_of(const std::string& text, const std::string& key) {
  std::istringstream is(text);
  std::string k, v;
  while (is >> k >> v) {
    if (k == key) return v;
  }
  return {};
}

}  // namespace

TEST_CASE("frames list prints the built-in names") {
  const auto r = run_cli("frames list");
  CHECK(r.code == 0);
  CHECK(r.out == "trine\nbloch\nhusimi\n");
}

TEST_CASE("frames show emits frame JSON") {
  const auto r = run_cli("frames show trine");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("psd") == true);
  CHECK(j.at("frame").at("points").size() == 3);
}

TEST_CASE("dist writes a CSV") {
  const auto r = run_cli("dist trine one");
  CHECK(r.code == 0);
  CHECK(r.out == "label,value,weight\n1,0,1\n2,0.5,1\n3,0.5,1\n");
  CHECK(run_cli("dist trine fock:3").code == 1);
}

TEST_CASE("nogo verdicts and exit codes") {
  const auto r = run_cli("nogo trine");
  REQUIRE(r.code == 0);
  const Json j = Json::parse(r.out);
  CHECK(j.at("verdict") == "Infeasible");
  CHECK(j.at("margin").get<double>() > 1e-9);

  CHECK(run_cli("nogo bloch --ntheta 10 --nphi 10 --effects pair").code == 0);
  CHECK(run_cli("nogo trine --tol 0.5").code == 1);
  CHECK(run_cli("nogo trine --effects nonsense").code == 1);
  CHECK(run_cli("nogo nowhere").code == 1);

  // Commuting effects on their own eigenbasis: bounded responses exist.
  const fs::path frame_file = scratch_file("basis_frame.json");
  {
    std::ofstream out(frame_file);
    out << to_json(projector_frame({basis_state(0, 2), basis_state(1, 2)})).dump();
  }
  const auto feas = run_cli("nogo @" + frame_file.string() + " --effects pair");
  CHECK(feas.code == 3);
  CHECK(Json::parse(feas.out).at("verdict") == "UnexpectedlyFeasible");
}

TEST_CASE("nogo writes reports and LP dumps under the output directory") {
  CHECK(run_cli("nogo trine --out report.json --dump-lp lp.json").code == 0);
  std::ifstream rep(scratch_file("report.json"));
  REQUIRE(rep.good());
  CHECK(Json::parse(rep).at("verdict") == "Infeasible");
  std::ifstream lp(scratch_file("lp.json"));
  REQUIRE(lp.good());
  CHECK(Json::parse(lp).at("eqs") == 24);
}

TEST_CASE("qmoment reports the number moment") {
  const auto r = run_cli("qmoment fock:2 --trunc 20 --radius 6 --step 0.1");
  REQUIRE(r.code == 0);
  CHECK(std::stod(value_of(r.out, "exact_moment")) == 2.0);
  CHECK(std::stod(value_of(r.out, "abs_error")) <= 1e-2);
  CHECK(std::stod(value_of(r.out, "min_conditional_expectation")) == -1.0);
  CHECK(run_cli("qmoment fock:2 --trunc 20 --radius 1 --step 2").code == 1);
}

TEST_CASE("wigner grid and marginal") {
  const auto grid = run_cli("wigner zero --trunc 10 --radius 1 --step 0.5");
  REQUIRE(grid.code == 0);
  CHECK(grid.out.rfind("re,im,W\n", 0) == 0);
  const auto marg = run_cli("wigner zero --trunc 10 --radius 5 --step 0.1 --marginal --q-max 1 --q-step 0.5");
  REQUIRE(marg.code == 0);
  CHECK(marg.out.rfind("q,marginal\n-1,", 0) == 0);
}

TEST_CASE("search output is byte-identical for a fixed seed") {
  const std::string args = "search --states random:3,2,5 --effects ic --kmax 3 --restarts 2 --iters 40 --seed 9 --model-out m.json";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("K,best_residual,restarts,iters\n1,", 0) == 0);
  std::ifstream model(scratch_file("m.json"));
  REQUIRE(model.good());
  const auto m = model_from_json(Json::parse(model));
  m.validate();
  CHECK(run_cli("search --states ic --effects ic --kmax 0").code == 1);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run_cli("").code == 1);
  CHECK(run_cli("nogo").code == 1);
  CHECK(run_cli("frames show").code == 1);
  CHECK(run_cli("--help").code == 0);
}
