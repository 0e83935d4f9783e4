#pragma once

#include "eprgames/clifford.hpp"

#include <array>
#include <variant>

namespace eprgames {

// One qubit in the real algebra: |psi> = alpha|0> + beta|1> with
// alpha = a0 + i a3, beta = -a2 + i a1 maps to
// a0 + a1 iota sigma_1 + a2 iota sigma_2 + a3 iota sigma_3.
struct Spinor {
  double a0 = 0, a1 = 0, a2 = 0, a3 = 0;
};

Multivector spinor_to_mv(const Spinor& s);
// Inverse of spinor_to_mv; requires a 1-particle even multivector.
Spinor mv_to_spinor(const Multivector& m);

// Computational basis ket |l>|m>|n| as a product of per-particle factors
// 1 (bit 0) and -iota sigma_2 (bit 1).
Multivector basis_state(int l, int m, int n);

// General single-qubit unitary in Euler angle form:
//   R(t1,t2,t3) = exp(-t3 i.s3/2) exp(-t1 i.s2/2) exp(-t2 i.s3/2).
struct EulerRotor {
  double theta1 = 0, theta2 = 0, theta3 = 0;

  Multivector realize(int particles, int particle) const;
};

using RotorTriple = std::array<EulerRotor, 3>;

// Shared-state families.  gamma is the entanglement angle of
// cos(g/2)|000> + sin(g/2)|111>; the symmetric family interpolates between
// the product state, the GHZ state and the two W-type states through
// (gamma, phi, delta).
struct GhzFamily {
  double gamma = 0;
};
struct WFamily {};
struct InvertedWFamily {};
struct SymmetricFamily {
  double gamma = 0, phi = 0, delta = 0;
};
// General pure three-qubit state
//   l0|000> + l1 e^{ix}|100> + l2|101> + l3|110> + l4|111>;
// kept for oracle cross-validation, not a game input.
struct PureFamily {
  std::array<double, 5> lambda{1, 0, 0, 0, 0};
  double x = 0;
};

using StateFamily = std::variant<GhzFamily, WFamily, InvertedWFamily, SymmetricFamily, PureFamily>;

struct StateSpec {
  StateFamily family;
  RotorTriple rotors{};  // local actions on qubits of players A, B, C
};

// The family core without local rotors, as a 3-particle multivector.
Multivector family_core(const StateFamily& family);

// A * B * C * core.  Throws std::invalid_argument on invalid family
// parameters (e.g. PureFamily amplitudes off the unit sphere).
Multivector realize_state(const StateSpec& spec);

// Recovers (gamma, phi, delta) from the symmetric ket amplitudes
//   rho0|000> + rho1(|001>+|010>+|100>) + rho2(|011>+|101>+|110>) + rho3|111>.
// Throws std::invalid_argument when the amplitudes are not normalized or the
// sign pattern cannot be produced by the angle family (global sign is free).
SymmetricFamily symmetric_from_amplitudes(double rho0, double rho1, double rho2, double rho3);

// The four group amplitudes (rho0, rho1, rho2, rho3) realized by the family.
std::array<double, 4> symmetric_amplitudes(const SymmetricFamily& f);

}  // namespace eprgames
