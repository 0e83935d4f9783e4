#include "eprgames/oracle.hpp"

#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace eprgames::oracle {

namespace {

using std::complex;
const complex<double> kI{0.0, 1.0};

Amplitudes group_ket(const std::array<complex<double>, 4>& weights) {
  // weights: |000>, the three single-excitation kets, the three
  // double-excitation kets, |111>.
  Amplitudes psi = Amplitudes::Zero();
  psi[0] = weights[0];
  psi[4] = psi[2] = psi[1] = weights[1];
  psi[6] = psi[5] = psi[3] = weights[2];
  psi[7] = weights[3];
  return psi;
}

std::array<complex<double>, 4> symmetric_group_weights(const SymmetricFamily& f) {
  const std::array<double, 4> rho = symmetric_amplitudes(f);
  return {rho[0], rho[1], rho[2], rho[3]};
}

PayoffTriple mixed_payoff_from_kets(const Amplitudes& psi, const EmbeddingConfig& emb,
                                    const GameMatrix& g, const StrategyProfile& s) {
  Amplitudes rotated = psi;
  for (int q = 0; q < 3; ++q) {
    const EulerRotor& r = emb.rotors[q];
    rotated = apply_local(rotated, euler_unitary(r.theta1, r.theta2, r.theta3), q);
  }
  PayoffTriple pi{0, 0, 0};
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) {
        const double w = (i == 1 ? s.x : 1 - s.x) * (j == 1 ? s.y : 1 - s.y) *
                         (k == 1 ? s.z : 1 - s.z);
        if (w == 0.0) continue;
        Amplitudes measured = rotated;
        measured = apply_local(measured, detector_unitary(emb.kappa[0][i - 1]).adjoint(), 0);
        measured = apply_local(measured, detector_unitary(emb.kappa[1][j - 1]).adjoint(), 1);
        measured = apply_local(measured, detector_unitary(emb.kappa[2][k - 1]).adjoint(), 2);
        for (int oi = 0; oi < 8; ++oi) {
          const double p = std::norm(measured[oi]);
          for (int pl = 0; pl < 3; ++pl) pi[pl] += w * p * g.payoff[oi][pl];
        }
      }
  return pi;
}

}  // namespace

Eigen::Matrix2cd euler_unitary(double t1, double t2, double t3) {
  Eigen::Matrix2cd rz1, ry, rz2;
  rz1 << std::exp(-kI * (t3 / 2)), 0, 0, std::exp(kI * (t3 / 2));
  ry << std::cos(t1 / 2), -std::sin(t1 / 2), std::sin(t1 / 2), std::cos(t1 / 2);
  rz2 << std::exp(-kI * (t2 / 2)), 0, 0, std::exp(kI * (t2 / 2));
  return rz1 * ry * rz2;
}

Eigen::Matrix2cd detector_unitary(double kappa) {
  Eigen::Matrix2cd ry;
  ry << std::cos(kappa / 2), -std::sin(kappa / 2), std::sin(kappa / 2), std::cos(kappa / 2);
  return ry;
}

Amplitudes build_ket(const StateFamily& family) {
  if (const auto* g = std::get_if<GhzFamily>(&family)) {
    Amplitudes psi = Amplitudes::Zero();
    psi[0] = std::cos(g->gamma / 2);
    psi[7] = std::sin(g->gamma / 2);
    return psi;
  }
  if (std::get_if<WFamily>(&family))
    return group_ket({0, 1 / std::sqrt(3.0), 0, 0});
  if (std::get_if<InvertedWFamily>(&family))
    return group_ket({0, 0, 1 / std::sqrt(3.0), 0});
  if (const auto* s = std::get_if<SymmetricFamily>(&family))
    return group_ket(symmetric_group_weights(*s));

  const auto& p = std::get<PureFamily>(family);
  double norm2 = 0;
  for (double l : p.lambda) norm2 += l * l;
  if (std::abs(norm2 - 1.0) > 1e-12)
    throw std::invalid_argument("pure-state amplitudes are not normalized");
  Amplitudes psi = Amplitudes::Zero();
  psi[0] = p.lambda[0];
  psi[4] = p.lambda[1] * std::exp(kI * p.x);  // |100>
  psi[5] = p.lambda[2];                       // |101>
  psi[6] = p.lambda[3];                       // |110>
  psi[7] = p.lambda[4];                       // |111>
  return psi;
}

Amplitudes apply_local(const Amplitudes& state, const Eigen::Matrix2cd& u, int qubit) {
  if (qubit < 0 || qubit > 2) throw std::invalid_argument("qubit index out of range");
  const int stride = 4 >> qubit;  // 4, 2, 1 for qubits 0, 1, 2
  Amplitudes out = Amplitudes::Zero();
  for (int base = 0; base < 8; ++base) {
    if (base & stride) continue;  // handle each (|0>,|1>) pair once
    const complex<double> v0 = state[base];
    const complex<double> v1 = state[base | stride];
    out[base] = u(0, 0) * v0 + u(0, 1) * v1;
    out[base | stride] = u(1, 0) * v0 + u(1, 1) * v1;
  }
  return out;
}

OutcomeDistribution oracle_distribution(const StateSpec& spec, const MeasurementConfig& cfg) {
  Amplitudes psi = build_ket(spec.family);
  for (int q = 0; q < 3; ++q) {
    const EulerRotor& r = spec.rotors[q];
    psi = apply_local(psi, euler_unitary(r.theta1, r.theta2, r.theta3), q);
  }
  const double norm = psi.squaredNorm();
  if (std::abs(norm - 1.0) > 1e-12)
    throw std::logic_error("oracle state lost normalization");

  for (int q = 0; q < 3; ++q)
    psi = apply_local(psi, detector_unitary(cfg.chosen_kappa(q)).adjoint(), q);

  OutcomeDistribution out;
  for (int oi = 0; oi < 8; ++oi) out.p[oi] = std::norm(psi[oi]);
  return out;
}

double phase_invariance_check(const std::array<double, 4>& rho,
                              const std::array<std::complex<double>, 4>& phases,
                              const GameMatrix& g, const StrategyProfile& s) {
  const double norm2 =
      rho[0] * rho[0] + 3 * rho[1] * rho[1] + 3 * rho[2] * rho[2] + rho[3] * rho[3];
  if (std::abs(norm2 - 1.0) > 1e-9)
    throw std::invalid_argument("symmetric amplitudes are not normalized");
  for (const auto& ph : phases)
    if (std::abs(std::abs(ph) - 1.0) > 1e-12)
      throw std::invalid_argument("phases must have unit modulus");

  const EmbeddingConfig emb = canonical_embedding();
  const Amplitudes base = group_ket({rho[0], rho[1], rho[2], rho[3]});
  const Amplitudes phased = group_ket(
      {rho[0] * phases[0], rho[1] * phases[1], rho[2] * phases[2], rho[3] * phases[3]});

  const PayoffTriple pi0 = mixed_payoff_from_kets(base, emb, g, s);
  const PayoffTriple pi1 = mixed_payoff_from_kets(phased, emb, g, s);
  double dev = 0;
  for (int p = 0; p < 3; ++p) dev = std::max(dev, std::abs(pi0[p] - pi1[p]));
  return dev;
}

VerifyReport run_verification(int trials, std::uint64_t seed, double inject_error,
                              double tolerance) {
  if (trials < 1) throw std::invalid_argument("trial count must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2 * M_PI);
  std::uniform_real_distribution<double> half_angle(0.0, M_PI);
  std::uniform_int_distribution<int> direction(1, 2);
  std::normal_distribution<double> gauss(0.0, 1.0);

  VerifyReport report;
  report.trials = trials;
  static const char* kFamilyNames[] = {"ghz", "w", "wbar", "symmetric", "pure"};

  for (int t = 0; t < trials; ++t) {
    const int kind = t % 5;
    StateSpec spec;
    switch (kind) {
      case 0: spec.family = GhzFamily{half_angle(rng)}; break;
      case 1: spec.family = WFamily{}; break;
      case 2: spec.family = InvertedWFamily{}; break;
      case 3:
        spec.family = SymmetricFamily{half_angle(rng), half_angle(rng), half_angle(rng)};
        break;
      default: {
        PureFamily p;
        double norm2 = 0;
        for (double& l : p.lambda) {
          l = gauss(rng);
          norm2 += l * l;
        }
        const double norm = std::sqrt(norm2);
        for (double& l : p.lambda) l /= norm;
        p.lambda[1] = std::abs(p.lambda[1]);
        p.x = half_angle(rng);
        spec.family = p;
        break;
      }
    }
    for (auto& r : spec.rotors) r = EulerRotor{angle(rng), angle(rng), angle(rng)};

    MeasurementConfig cfg;
    for (auto& pair : cfg.kappa) pair = {angle(rng), angle(rng)};
    for (auto& c : cfg.choice) c = direction(rng);

    OutcomeDistribution engine = distribution(spec, cfg);
    if (t == 0) engine.p[0] += inject_error;
    const OutcomeDistribution reference = oracle_distribution(spec, cfg);

    double dev = 0;
    for (int oi = 0; oi < 8; ++oi)
      dev = std::max(dev, std::abs(engine.p[oi] - reference.p[oi]));
    const double norm_err =
        std::max(std::abs(engine.sum() - 1.0), std::abs(reference.sum() - 1.0));

    report.max_normalization_error = std::max(report.max_normalization_error, norm_err);
    if (dev > report.max_probability_deviation) {
      report.max_probability_deviation = dev;
      std::ostringstream os;
      os << "trial " << t << " family=" << kFamilyNames[kind] << " choices=" << cfg.choice[0]
         << cfg.choice[1] << cfg.choice[2] << " deviation=" << dev;
      report.worst_config = os.str();
    }
  }
  report.ok = report.max_probability_deviation <= tolerance &&
              report.max_normalization_error <= 1e-12;
  return report;
}

}  // namespace eprgames::oracle
