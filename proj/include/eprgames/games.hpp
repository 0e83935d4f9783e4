#pragma once

#include "eprgames/measurement.hpp"
#include "eprgames/states.hpp"

#include <array>

namespace eprgames {

// Payoff matrix of a three-player two-outcome game: one (A,B,C) payoff
// triple per measurement outcome (l,m,n).
struct GameMatrix {
  // payoff[OutcomeDistribution::index(l,m,n)][player]
  std::array<std::array<double, 3>, 8> payoff{};

  static GameMatrix constant(double value);
};

// Signed one-eighth sums of the game matrix,
//   a_xyz = 1/8 sum_lmn (-1)^{x l + y m + z n} G^A_lmn,
// indexed like outcomes (xyz -> x*4+y*2+z); b and c likewise for the other
// players.  They diagonalize the payoff in the measurement-sign variables.
struct PayoffCoefficients {
  std::array<double, 8> a{}, b{}, c{};

  const std::array<double, 8>& player(int p) const;
};

PayoffCoefficients coefficients(const GameMatrix& g);

// Rebuilds G^P_lmn from the signed coefficient sums (the inverse transform).
double reconstruct_payoff(const std::array<double, 8>& coeff, int l, int m, int n);

// True when the game is invariant under every permutation of the players.
bool is_symmetric(const GameMatrix& g, double tol = 1e-12);

// Probability of choosing the first detector direction, per player.
struct StrategyProfile {
  double x = 0, y = 0, z = 0;

  double component(int player) const;
  StrategyProfile with_component(int player, double value) const;
};

// Rotor angles plus detector directions satisfying the classical-embedding
// constraints X_1=Y_1=Z_1=+1, X_2=Y_2=Z_2=-1 and Theta_ijk=0.
struct EmbeddingConfig {
  RotorTriple rotors{};
  std::array<std::array<double, 2>, 3> kappa{};

  MeasurementConfig measurement(int i, int j, int k) const;  // choices in {1,2}
};

// Identity rotors, kappa_1 = 0 and kappa_2 = pi for every player.
EmbeddingConfig canonical_embedding();

// Checks the embedding constraints over all eight direction choices.
bool validate_embedding(const EmbeddingConfig& emb, double tol = 1e-12);

using PayoffTriple = std::array<double, 3>;

// Pure-direction payoffs Pi_P = sum_lmn G^P_lmn P_lmn from the overlap
// distribution; accepts any state and measurement configuration.
PayoffTriple payoff_general(const StateSpec& spec, const MeasurementConfig& cfg,
                            const GameMatrix& g);

// Mixed-strategy payoff: the eight pure-direction payoffs mixed with weights
// x,y,z per player.  The embedding supplies the detector directions and must
// agree with the spec's rotors.
PayoffTriple payoff_mixed(const StateSpec& spec, const EmbeddingConfig& emb, const GameMatrix& g,
                          const StrategyProfile& s);

// Closed-form mixed payoff for the GHZ family under the canonical embedding;
// requires a symmetric game.
PayoffTriple payoff_ghz_closed(const GameMatrix& g, double gamma, const StrategyProfile& s);

// Closed-form pure-direction payoff for the W family (coefficients scaled by
// 1/3); any rotors and detector angles.
PayoffTriple payoff_w_closed(const GameMatrix& g, const RotorTriple& rotors,
                             const MeasurementConfig& cfg);

// Closed-form mixed payoff for the symmetric (gamma, phi, delta) family under
// the canonical embedding; requires a symmetric game.
PayoffTriple payoff_general_symmetric_closed(const GameMatrix& g, double gamma, double phi,
                                             double delta, const StrategyProfile& s);

// Same, with the coefficient transform precomputed and angles as cosines.
PayoffTriple symmetric_closed_payoff(const PayoffCoefficients& pc, double cos_gamma,
                                     double cos_phi, double cos_delta,
                                     const StrategyProfile& s);

}  // namespace eprgames
