#pragma once

#include "eprgames/clifford.hpp"
#include "eprgames/states.hpp"

#include <array>

namespace eprgames {

// Two detector directions per player plus the per-run choice between them.
struct MeasurementConfig {
  std::array<std::array<double, 2>, 3> kappa{};  // [player][direction index 0/1]
  std::array<int, 3> choice{1, 1, 1};            // 1 or 2

  double chosen_kappa(int player) const;
};

// Probabilities of the eight outcome triplets (l,m,n), l for player A.
struct OutcomeDistribution {
  std::array<double, 8> p{};

  static constexpr int index(int l, int m, int n) { return l * 4 + m * 2 + n; }
  double at(int l, int m, int n) const { return p[index(l, m, n)]; }
  double& at(int l, int m, int n) { return p[index(l, m, n)]; }
  double sum() const;
};

// N-particle overlap probability
//   P(psi, phi) = 2^{N-2} [ <psi E psi+ phi E phi+>_0 - <psi J psi+ phi J phi+>_0 ],
// clamped to [0,1]; values outside [-1e-12, 1+1e-12] raise std::logic_error.
double overlap_probability(const Multivector& psi, const Multivector& phi, int particles);

// Caches the psi-side conjugates so one state can be projected onto many
// detector states cheaply.
class OverlapEvaluator {
 public:
  explicit OverlapEvaluator(const Multivector& psi);

  double probability(const Multivector& phi) const;
  double raw_overlap(const Multivector& phi) const;  // before clamping

 private:
  int particles_;
  double scale_;
  Correlators corr_;
  Multivector psi_e_;
  Multivector psi_j_;
};

// Full outcome distribution of the realized state measured along the chosen
// detector directions: phi_lmn = K L M |lmn> with K = exp(-kappa^1 i.s2^1/2) etc.
OutcomeDistribution distribution(const StateSpec& spec, const MeasurementConfig& cfg);

// Trigonometric terms of the closed-form distributions, evaluated for the
// chosen direction of each player.  X/Y/Z pair the rotated spin axis with the
// detector; F/G/H and U/V/W carry the two transverse axes; Theta is the
// triple cross-term.
struct ClosedFormTerms {
  double X = 0, Y = 0, Z = 0;
  double F = 0, G = 0, H = 0;
  double U = 0, V = 0, W = 0;
  double Theta = 0;
};

ClosedFormTerms closed_form_terms(const RotorTriple& rotors, const MeasurementConfig& cfg);

// Closed form for the GHZ family:
//   P_lmn = 1/8 [ 1 + cos g {(-)^l X + (-)^m Y + (-)^n Z}
//               + (-)^{l+m} XY + (-)^{l+n} XZ + (-)^{m+n} YZ
//               + (-)^{l+m+n} {cos g XYZ + sin g Theta} ].
OutcomeDistribution ghz_closed_form(double gamma, const RotorTriple& rotors,
                                    const MeasurementConfig& cfg);

// Closed form for the W family:
//   P_lmn = 1/24 [ 3 + (-)^l X + (-)^m Y + (-)^n Z
//                + (-)^{l+m+n} (2(XGH + FYH + FGZ + XVW + UYW + UVZ) - 3XYZ)
//                + (-)^{l+m} (2FG + 2UV - XY) + (-)^{l+n} (2FH + 2UW - XZ)
//                + (-)^{m+n} (2GH + 2VW - YZ) ].
OutcomeDistribution w_closed_form(const RotorTriple& rotors, const MeasurementConfig& cfg);

}  // namespace eprgames
