#include "eprgames/measurement.hpp"

#include <cmath>
#include <stdexcept>

namespace eprgames {

namespace {

constexpr double kProbabilitySlack = 1e-12;

double clamp_probability(double p) {
  if (p < -kProbabilitySlack || p > 1.0 + kProbabilitySlack)
    throw std::logic_error("overlap probability outside [0,1] beyond tolerance");
  if (p < 0.0) return 0.0;
  if (p > 1.0) return 1.0;
  return p;
}

struct PlayerTerms {
  double axis3;  // X-type
  double axis1;  // F-type
  double axis2;  // U-type
};

// Components of the detector direction in the frame rotated by the player's
// Euler rotor (t1, t2, t3); kappa is the detector angle about sigma_2.
PlayerTerms player_terms(const EulerRotor& r, double kappa) {
  const double c1 = std::cos(r.theta1), s1 = std::sin(r.theta1);
  const double c2 = std::cos(r.theta2), s2 = std::sin(r.theta2);
  const double c3 = std::cos(r.theta3), s3 = std::sin(r.theta3);
  const double ck = std::cos(kappa), sk = std::sin(kappa);
  PlayerTerms t;
  t.axis3 = c1 * ck + c3 * s1 * sk;
  t.axis1 = -sk * (c1 * c2 * c3 - s2 * s3) + s1 * c2 * ck;
  t.axis2 = sk * (c2 * s3 + s2 * c3 * c1) - s1 * s2 * ck;
  return t;
}

}  // namespace

double MeasurementConfig::chosen_kappa(int player) const {
  if (player < 0 || player > 2) throw std::invalid_argument("player index out of range");
  const int c = choice[player];
  if (c != 1 && c != 2) throw std::invalid_argument("direction choice must be 1 or 2");
  return kappa[player][c - 1];
}

double OutcomeDistribution::sum() const {
  double s = 0;
  for (double v : p) s += v;
  return s;
}

OverlapEvaluator::OverlapEvaluator(const Multivector& psi)
    : particles_(psi.particles()),
      scale_(std::pow(2.0, particles_ - 2)),
      corr_(correlators(particles_)),
      psi_e_(psi * corr_.e * reversion(psi)),
      psi_j_(psi * corr_.j * reversion(psi)) {}

double OverlapEvaluator::raw_overlap(const Multivector& phi) const {
  if (phi.particles() != particles_)
    throw std::invalid_argument("state and detector state live in different algebras");
  const Multivector phi_rev = reversion(phi);
  const Multivector phi_e = phi * corr_.e * phi_rev;
  const Multivector phi_j = phi * corr_.j * phi_rev;
  return scale_ * (scalar_part_of_product(psi_e_, phi_e) - scalar_part_of_product(psi_j_, phi_j));
}

double OverlapEvaluator::probability(const Multivector& phi) const {
  return clamp_probability(raw_overlap(phi));
}

double overlap_probability(const Multivector& psi, const Multivector& phi, int particles) {
  if (psi.particles() != particles || phi.particles() != particles)
    throw std::invalid_argument("overlap_probability: particle count mismatch");
  return OverlapEvaluator(psi).probability(phi);
}

OutcomeDistribution distribution(const StateSpec& spec, const MeasurementConfig& cfg) {
  const Multivector psi = realize_state(spec);
  const OverlapEvaluator eval(psi);

  Multivector detector_rotor = bivector_exp(3, 0, 2, cfg.chosen_kappa(0)) *
                               bivector_exp(3, 1, 2, cfg.chosen_kappa(1)) *
                               bivector_exp(3, 2, 2, cfg.chosen_kappa(2));
  OutcomeDistribution out;
  for (int l = 0; l < 2; ++l)
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n)
        out.at(l, m, n) = eval.probability(detector_rotor * basis_state(l, m, n));
  return out;
}

ClosedFormTerms closed_form_terms(const RotorTriple& rotors, const MeasurementConfig& cfg) {
  const PlayerTerms a = player_terms(rotors[0], cfg.chosen_kappa(0));
  const PlayerTerms b = player_terms(rotors[1], cfg.chosen_kappa(1));
  const PlayerTerms c = player_terms(rotors[2], cfg.chosen_kappa(2));
  ClosedFormTerms t;
  t.X = a.axis3;
  t.Y = b.axis3;
  t.Z = c.axis3;
  t.F = a.axis1;
  t.G = b.axis1;
  t.H = c.axis1;
  t.U = a.axis2;
  t.V = b.axis2;
  t.W = c.axis2;
  t.Theta = t.F * t.V * t.W + t.U * t.G * t.W + t.U * t.V * t.H - t.F * t.G * t.H;
  return t;
}

OutcomeDistribution ghz_closed_form(double gamma, const RotorTriple& rotors,
                                    const MeasurementConfig& cfg) {
  const ClosedFormTerms t = closed_form_terms(rotors, cfg);
  const double cg = std::cos(gamma), sg = std::sin(gamma);
  OutcomeDistribution out;
  for (int l = 0; l < 2; ++l)
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n) {
        const double sl = l ? -1.0 : 1.0;
        const double sm = m ? -1.0 : 1.0;
        const double sn = n ? -1.0 : 1.0;
        const double p =
            (1 + cg * (sl * t.X + sm * t.Y + sn * t.Z) + sl * sm * t.X * t.Y +
             sl * sn * t.X * t.Z + sm * sn * t.Y * t.Z +
             sl * sm * sn * (cg * t.X * t.Y * t.Z + sg * t.Theta)) /
            8.0;
        out.at(l, m, n) = clamp_probability(p);
      }
  return out;
}

OutcomeDistribution w_closed_form(const RotorTriple& rotors, const MeasurementConfig& cfg) {
  const ClosedFormTerms t = closed_form_terms(rotors, cfg);
  const double triple = 2 * (t.X * t.G * t.H + t.F * t.Y * t.H + t.F * t.G * t.Z +
                             t.X * t.V * t.W + t.U * t.Y * t.W + t.U * t.V * t.Z) -
                        3 * t.X * t.Y * t.Z;
  const double ab = 2 * t.F * t.G + 2 * t.U * t.V - t.X * t.Y;
  const double ac = 2 * t.F * t.H + 2 * t.U * t.W - t.X * t.Z;
  const double bc = 2 * t.G * t.H + 2 * t.V * t.W - t.Y * t.Z;
  OutcomeDistribution out;
  for (int l = 0; l < 2; ++l)
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n) {
        const double sl = l ? -1.0 : 1.0;
        const double sm = m ? -1.0 : 1.0;
        const double sn = n ? -1.0 : 1.0;
        const double p = (3 + sl * t.X + sm * t.Y + sn * t.Z + sl * sm * sn * triple +
                          sl * sm * ab + sl * sn * ac + sm * sn * bc) /
                         24.0;
        out.at(l, m, n) = clamp_probability(p);
      }
  return out;
}

}  // namespace eprgames
