#pragma once

#include "eprgames/games.hpp"
#include "eprgames/measurement.hpp"
#include "eprgames/states.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <string>

namespace eprgames::oracle {

// Conventional complex-amplitude reference implementation: 8-dimensional
// state vectors, 2x2 local unitaries and rotated-basis projective
// measurement.  It shares no arithmetic with the geometric-algebra engine so
// that agreement between the two is evidence rather than tautology.

using Amplitudes = Eigen::Matrix<std::complex<double>, 8, 1>;  // index l*4 + m*2 + n

// exp(-i t3 sz/2) exp(-i t1 sy/2) exp(-i t2 sz/2), the matrix twin of the
// Euler rotor.
Eigen::Matrix2cd euler_unitary(double t1, double t2, double t3);

// Rotation of the detector by kappa about the y axis.
Eigen::Matrix2cd detector_unitary(double kappa);

// The shared-state ket of a family, matching the engine's realization
// amplitude-for-amplitude (the W family differs by a global sign only).
Amplitudes build_ket(const StateFamily& family);

// Applies a 2x2 unitary to one qubit of the 8-dimensional state; qubit 0 is
// the most significant outcome bit (player A).
Amplitudes apply_local(const Amplitudes& state, const Eigen::Matrix2cd& u, int qubit);

OutcomeDistribution oracle_distribution(const StateSpec& spec, const MeasurementConfig& cfg);

// Numerical check of the claim that unit-modulus phases attached to the four
// symmetric-state term groups leave payoffs unchanged (canonical embedding).
// Returns the maximum payoff deviation across players.
double phase_invariance_check(const std::array<double, 4>& rho,
                              const std::array<std::complex<double>, 4>& phases,
                              const GameMatrix& g, const StrategyProfile& s);

// Seeded engine-vs-oracle comparison across all state families with random
// rotors, detector angles and family parameters.
struct VerifyReport {
  int trials = 0;
  double max_probability_deviation = 0;
  double max_normalization_error = 0;
  bool ok = false;
  std::string worst_config;
};

// inject_error perturbs the engine-side distribution and exists as a
// negative control for the verification path.
VerifyReport run_verification(int trials, std::uint64_t seed, double inject_error = 0.0,
                              double tolerance = 1e-10);

}  // namespace eprgames::oracle
