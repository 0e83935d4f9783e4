#pragma once

#include "eprgames/equilibrium.hpp"
#include "eprgames/games.hpp"
#include "eprgames/states.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>

namespace eprgames::io {

// Input-schema violations and malformed documents (exit code 2 in the CLI).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Game file schema:
//   {"players": 3, "payoffs": {"000": [gA,gB,gC], ..., "111": [gA,gB,gC]}}
// exactly eight 3-bit keys, three finite numbers each.
GameMatrix parse_game(const std::string& text);
GameMatrix load_game(const std::filesystem::path& path);

// State file schema:
//   {"family": "ghz"|"w"|"wbar"|"symmetric",
//    "gamma": rad | "cos_gamma": value, "phi"/"cos_phi", "delta"/"cos_delta",
//    "rotors": {"A": [t1,t2,t3], "B": [...], "C": [...]}}
// absent fields default to zero angles / identity rotors.
StateSpec parse_state(const std::string& text);
StateSpec load_state(const std::filesystem::path& path);

// "cos_gamma=-1:1:0.01" -> axis over [lo, hi] with the given step.
SweepAxis parse_axis(const std::string& spec);

// Fixed-precision value formatting shared by every emitter (12 significant
// digits, C locale, negative zero normalized) so outputs are byte-stable.
std::string format_value(double v, int digits = 12);

std::string coefficients_to_json(const PayoffCoefficients& pc);
std::string equilibria_to_json(const std::vector<NEResult>& list, bool every_profile_ne);
// Header cos_gamma[,phi,delta],ne_set,pi_A,pi_B,pi_C; one row per grid point
// per equilibrium; LF line endings.
std::string phase_diagram_to_csv(const PhaseDiagram& diagram);

void write_file(const std::filesystem::path& path, const std::string& content);

}  // namespace eprgames::io
