// Textual state and net descriptions used by the command line.
//
// State specs: zero | one | plus | minus | bloch:THETA,PHI | fock:N |
// coherent:RE,IM | cat:RE,IM | inline JSON ({...}) | @FILE (JSON).
// Net specs:   pair | ic | basis:D | random:S,D,SEED | inline JSON | @FILE,
// where JSON nets are {"states": [state, ...], "groups": [[i, ...], ...]}.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ontic/quantum.hpp"

namespace ontic {

struct SpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// `dim` sizes the basis-named states and is the Fock truncation.
PureState parse_state_spec(const std::string& spec, std::size_t dim);

struct StateNet {
  std::vector<PureState> states;
  std::vector<std::vector<std::size_t>> groups;  // complete measurements, when used as effects
};

StateNet parse_net_spec(const std::string& spec);

/// Haar-random pure states from a seeded generator.
std::vector<PureState> random_states(std::size_t count, std::size_t dim, std::uint64_t seed);

}  // namespace ontic
