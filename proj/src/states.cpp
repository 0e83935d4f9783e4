#include "eprgames/states.hpp"

#include <cmath>
#include <stdexcept>

namespace eprgames {

namespace {

constexpr double kNormTol = 1e-12;
const double kSqrt3 = std::sqrt(3.0);

Multivector w_group(double coeff) {
  // iota sigma_2 on each particle in turn.
  Multivector m = iota_sigma(3, 0, 2) + iota_sigma(3, 1, 2) + iota_sigma(3, 2, 2);
  return m * coeff;
}

Multivector pair_group(double coeff) {
  Multivector m = iota_sigma(3, 0, 2) * iota_sigma(3, 1, 2) +
                  iota_sigma(3, 1, 2) * iota_sigma(3, 2, 2) +
                  iota_sigma(3, 0, 2) * iota_sigma(3, 2, 2);
  return m * coeff;
}

Multivector triple_blade() {
  return iota_sigma(3, 0, 2) * iota_sigma(3, 1, 2) * iota_sigma(3, 2, 2);
}

}  // namespace

Multivector spinor_to_mv(const Spinor& s) {
  Multivector m = Multivector::scalar(1, s.a0);
  m += iota_sigma(1, 0, 1) * s.a1;
  m += iota_sigma(1, 0, 2) * s.a2;
  m += iota_sigma(1, 0, 3) * s.a3;
  return m;
}

Spinor mv_to_spinor(const Multivector& m) {
  if (m.particles() != 1)
    throw std::invalid_argument("spinor extraction needs a 1-particle multivector");
  for (unsigned mask : {1u, 2u, 4u, 7u})
    if (m[mask] != 0.0)
      throw std::invalid_argument("multivector has odd-grade components, not a spinor image");
  Spinor s;
  s.a0 = m[0];
  s.a1 = scalar_part_of_product(m, reversion(iota_sigma(1, 0, 1)));
  s.a2 = scalar_part_of_product(m, reversion(iota_sigma(1, 0, 2)));
  s.a3 = scalar_part_of_product(m, reversion(iota_sigma(1, 0, 3)));
  return s;
}

Multivector basis_state(int l, int m, int n) {
  const int bits[3] = {l, m, n};
  Multivector out = Multivector::scalar(3, 1.0);
  for (int p = 0; p < 3; ++p) {
    if (bits[p] == 0) continue;
    if (bits[p] != 1) throw std::invalid_argument("basis bits must be 0 or 1");
    out = out * (iota_sigma(3, p, 2) * -1.0);
  }
  return out;
}

Multivector EulerRotor::realize(int particles, int particle) const {
  return bivector_exp(particles, particle, 3, theta3) *
         bivector_exp(particles, particle, 2, theta1) *
         bivector_exp(particles, particle, 3, theta2);
}

Multivector family_core(const StateFamily& family) {
  if (const auto* g = std::get_if<GhzFamily>(&family)) {
    Multivector m = triple_blade() * (-std::sin(g->gamma / 2));
    m[0] += std::cos(g->gamma / 2);
    return m;
  }
  if (std::get_if<WFamily>(&family)) return w_group(-1.0 / kSqrt3);
  if (std::get_if<InvertedWFamily>(&family)) return pair_group(1.0 / kSqrt3);
  if (const auto* s = std::get_if<SymmetricFamily>(&family)) {
    const double hg = s->gamma / 2, hp = s->phi / 2, hd = s->delta / 2;
    Multivector m = Multivector::scalar(3, std::cos(hg) * std::cos(hp));
    m += w_group(std::sin(hp) * std::sin(hd) / kSqrt3);
    m += pair_group(std::sin(hp) * std::cos(hd) / kSqrt3);
    m += triple_blade() * (std::sin(hg) * std::cos(hp));
    return m;
  }
  const auto& p = std::get<PureFamily>(family);
  double norm2 = 0;
  for (double l : p.lambda) norm2 += l * l;
  if (std::abs(norm2 - 1.0) > kNormTol)
    throw std::invalid_argument("pure-state amplitudes are not normalized");
  if (p.lambda[1] < 0) throw std::invalid_argument("lambda_1 must be non-negative");
  if (p.x < 0 || p.x > M_PI) throw std::invalid_argument("phase x must lie in [0, pi]");
  Multivector m = Multivector::scalar(3, p.lambda[0]);
  m += iota_sigma(3, 0, 2) * (-p.lambda[1] * std::cos(p.x));
  m += iota_sigma(3, 0, 1) * (p.lambda[1] * std::sin(p.x));
  m += iota_sigma(3, 0, 2) * iota_sigma(3, 2, 2) * p.lambda[2];
  m += iota_sigma(3, 0, 2) * iota_sigma(3, 1, 2) * p.lambda[3];
  m += triple_blade() * (-p.lambda[4]);
  return m;
}

Multivector realize_state(const StateSpec& spec) {
  Multivector psi = family_core(spec.family);
  // Rotors of distinct particles commute; apply in C, B, A order so the
  // product reads A * B * C * core.
  for (int p = 2; p >= 0; --p) psi = spec.rotors[p].realize(3, p) * psi;
  return psi;
}

std::array<double, 4> symmetric_amplitudes(const SymmetricFamily& f) {
  const double hg = f.gamma / 2, hp = f.phi / 2, hd = f.delta / 2;
  return {std::cos(hg) * std::cos(hp), -std::sin(hp) * std::sin(hd) / kSqrt3,
          std::sin(hp) * std::cos(hd) / kSqrt3, -std::sin(hg) * std::cos(hp)};
}

SymmetricFamily symmetric_from_amplitudes(double rho0, double rho1, double rho2, double rho3) {
  const double norm2 = rho0 * rho0 + 3 * rho1 * rho1 + 3 * rho2 * rho2 + rho3 * rho3;
  if (std::abs(norm2 - 1.0) > 1e-9)
    throw std::invalid_argument("symmetric amplitudes are not normalized");

  // The state is defined up to a global sign; fix it so the leading nonzero
  // of (rho0, -rho3, rho2, -rho1) is positive.
  const double lead[4] = {rho0, -rho3, rho2, -rho1};
  for (double v : lead) {
    if (std::abs(v) < 1e-13) continue;
    if (v < 0) {
      rho0 = -rho0;
      rho1 = -rho1;
      rho2 = -rho2;
      rho3 = -rho3;
    }
    break;
  }
  if (rho0 < -1e-12 || -rho3 < -1e-12 || rho2 < -1e-12 || -rho1 < -1e-12)
    throw std::invalid_argument(
        "amplitude sign pattern is outside the angle family; only relative phases of "
        "(+,-,+,-) per group are representable");

  const double cos_hp = std::hypot(rho0, rho3);
  const double sin_hp = kSqrt3 * std::hypot(rho1, rho2);
  SymmetricFamily f;
  f.phi = 2 * std::atan2(sin_hp, cos_hp);
  f.gamma = (cos_hp > 1e-13) ? 2 * std::atan2(-rho3, rho0) : 0.0;
  f.delta = (sin_hp > 1e-13) ? 2 * std::atan2(-rho1 * kSqrt3, rho2 * kSqrt3) : 0.0;
  return f;
}

}  // namespace eprgames
