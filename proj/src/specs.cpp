#include "ontic/specs.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "ontic/io.hpp"

namespace ontic {

namespace {

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw SpecError("not a number: '" + s + "'");
  return v;
}

std::size_t parse_size(const std::string& s) {
  std::size_t v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) throw SpecError("not a nonnegative integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<double> numbers(const std::string& args, std::size_t count, const std::string& what) {
  const auto parts = split(args, ',');
  if (parts.size() != count) throw SpecError(what + " expects " + std::to_string(count) + " comma-separated numbers");
  std::vector<double> out;
  for (const auto& p : parts) out.push_back(parse_double(p));
  return out;
}

Json load_json(const std::string& spec) {
  try {
    if (!spec.empty() && spec.front() == '@') {
      std::ifstream in(spec.substr(1));
      if (!in) throw SpecError("cannot open '" + spec.substr(1) + "'");
      return Json::parse(in);
    }
    return Json::parse(spec);
  } catch (const Json::exception& e) {
    throw SpecError(std::string("malformed JSON: ") + e.what());
  }
}

bool is_json_spec(const std::string& spec) {
  return !spec.empty() && (spec.front() == '{' || spec.front() == '@');
}

PureState qubit(Complex a, Complex b) {
  CVector v(2);
  v << a, b;
  return PureState::normalized(v);
}

}  // namespace

PureState parse_state_spec(const std::string& spec, std::size_t dim) {
  try {
    if (is_json_spec(spec)) return state_from_json(load_json(spec));
    const auto colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (colon == std::string::npos) {
      if (dim < 1) throw SpecError("dimension must be positive");
      if (head == "zero") return basis_state(0, dim);
      if (dim < 2) throw SpecError("'" + head + "' needs dimension >= 2");
      if (head == "one") return basis_state(1, dim);
      CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
      v(0) = 1.0;
      if (head == "plus") v(1) = 1.0;
      else if (head == "minus") v(1) = -1.0;
      else throw SpecError("unknown state '" + spec + "'");
      return PureState::normalized(v);
    }
    if (head == "bloch") {
      const auto a = numbers(args, 2, "bloch");
      return bloch_state(a[0], a[1]);
    }
    if (head == "fock") return fock_state(parse_size(args), dim);
    if (head == "coherent") {
      const auto a = numbers(args, 2, "coherent");
      return coherent_state({a[0], a[1]}, dim);
    }
    if (head == "cat") {
      const auto a = numbers(args, 2, "cat");
      return odd_cat_state({a[0], a[1]}, dim);
    }
    throw SpecError("unknown state '" + spec + "'");
  } catch (const PreconditionError& e) {
    throw SpecError(std::string("invalid state '") + spec + "': " + e.what());
  } catch (const std::out_of_range& e) {
    throw SpecError(std::string("invalid state JSON: ") + e.what());
  } catch (const Json::exception& e) {
    throw SpecError(std::string("invalid state JSON: ") + e.what());
  }
}

std::vector<PureState> random_states(std::size_t count, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<PureState> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    CVector v(static_cast<Eigen::Index>(dim));
    for (Eigen::Index k = 0; k < v.size(); ++k) {
      const double re = g(gen);
      const double im = g(gen);
      v(k) = Complex(re, im);
    }
    out.push_back(PureState::normalized(v));
  }
  return out;
}

StateNet parse_net_spec(const std::string& spec) {
  StateNet net;
  try {
    if (is_json_spec(spec)) {
      const Json j = load_json(spec);
      for (const Json& s : j.at("states")) net.states.push_back(state_from_json(s));
      if (j.contains("groups")) net.groups = j.at("groups").get<std::vector<std::vector<std::size_t>>>();
    } else if (spec == "pair") {
      net.states = {basis_state(0, 2), basis_state(1, 2)};
      net.groups = {{0, 1}};
    } else if (spec == "ic") {
      const double s = 1.0 / std::numbers::sqrt2;
      const Complex i(0.0, 1.0);
      net.states = {qubit(1, 0), qubit(0, 1), qubit(s, s), qubit(s, -s), qubit(s, i * s), qubit(s, -i * s)};
      net.groups = {{0, 1}, {2, 3}, {4, 5}};
    } else if (spec.rfind("basis:", 0) == 0) {
      const std::size_t d = parse_size(spec.substr(6));
      if (d < 1) throw SpecError("basis dimension must be positive");
      net.groups.emplace_back();
      for (std::size_t k = 0; k < d; ++k) {
        net.states.push_back(basis_state(k, d));
        net.groups.back().push_back(k);
      }
    } else if (spec.rfind("random:", 0) == 0) {
      const auto parts = split(spec.substr(7), ',');
      if (parts.size() != 3) throw SpecError("random net expects S,D,SEED");
      const std::size_t count = parse_size(parts[0]);
      const std::size_t d = parse_size(parts[1]);
      if (count < 1 || d < 1) throw SpecError("random net needs S >= 1 and D >= 1");
      net.states = random_states(count, d, parse_size(parts[2]));
    } else {
      throw SpecError("unknown net '" + spec + "'");
    }
  } catch (const PreconditionError& e) {
    throw SpecError(std::string("invalid net: ") + e.what());
  } catch (const Json::exception& e) {
    throw SpecError(std::string("invalid net JSON: ") + e.what());
  }
  if (net.states.empty()) throw SpecError("net is empty");
  for (const auto& s : net.states) {
    if (s.dim() != net.states.front().dim()) throw SpecError("net states differ in dimension");
  }
  for (const auto& g : net.groups) {
    for (std::size_t k : g) {
      if (k >= net.states.size()) throw SpecError("net group index out of range");
    }
  }
  return net;
}

}  // namespace ontic
