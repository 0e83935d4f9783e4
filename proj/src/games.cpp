#include "eprgames/games.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace eprgames {

namespace {

int parity_sign(unsigned bits) { return (std::popcount(bits) & 1) ? -1 : 1; }

void check_probability(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument(std::string(what) + " must lie in [0,1]");
}

void require_symmetric(const GameMatrix& g) {
  if (!is_symmetric(g))
    throw std::domain_error("closed-form payoff requires a player-symmetric game");
}

bool rotors_match(const RotorTriple& a, const RotorTriple& b, double tol) {
  for (int p = 0; p < 3; ++p) {
    if (std::abs(a[p].theta1 - b[p].theta1) > tol) return false;
    if (std::abs(a[p].theta2 - b[p].theta2) > tol) return false;
    if (std::abs(a[p].theta3 - b[p].theta3) > tol) return false;
  }
  return true;
}

// Eq.-style mixed GHZ payoff for the row player; the other players follow by
// permuting the profile.
double ghz_mixed_row(const std::array<double, 8>& a, double g000, double g111, double cg,
                     double x, double y, double z) {
  return 0.5 * (g000 + g111 - cg * (g000 - g111) - 4 * (y + z) * (a[6] + a[3]) +
                cg * (4 * x * (a[7] + a[4]) + 4 * (a[7] + a[1]) * (y + z)) +
                8 * x * a[6] * (y + z - 1) + 8 * y * z * a[3] -
                8 * a[7] * cg * (x * y + x * z + y * z - 2 * x * y * z));
}

double symmetric_closed_row(const std::array<double, 8>& k, double cg, double cp, double cd,
                            double x, double y, double z) {
  const double ux = 1 - 2 * x, uy = 1 - 2 * y, uz = 1 - 2 * z;
  const double v1 = k[4] * ux + k[2] * uy + k[1] * uz;
  const double v2 = k[6] * ux * uy + k[5] * ux * uz + k[3] * uy * uz;
  const double v3 = k[7] * ux * uy * uz;
  return k[0] - 0.5 * (v1 + v3) * cg * (1 + cp) + v2 * (1 + 2 * cp) / 3.0 +
         (v1 - 3 * v3) * (1 - cp) * cd / 6.0;
}

}  // namespace

GameMatrix GameMatrix::constant(double value) {
  GameMatrix g;
  for (auto& row : g.payoff) row = {value, value, value};
  return g;
}

const std::array<double, 8>& PayoffCoefficients::player(int p) const {
  switch (p) {
    case 0: return a;
    case 1: return b;
    case 2: return c;
    default: throw std::invalid_argument("player index out of range");
  }
}

PayoffCoefficients coefficients(const GameMatrix& g) {
  PayoffCoefficients pc;
  for (unsigned ci = 0; ci < 8; ++ci) {
    double sa = 0, sb = 0, sc = 0;
    for (unsigned oi = 0; oi < 8; ++oi) {
      const int s = parity_sign(ci & oi);
      sa += s * g.payoff[oi][0];
      sb += s * g.payoff[oi][1];
      sc += s * g.payoff[oi][2];
    }
    pc.a[ci] = sa / 8.0;
    pc.b[ci] = sb / 8.0;
    pc.c[ci] = sc / 8.0;
  }
  return pc;
}

double reconstruct_payoff(const std::array<double, 8>& coeff, int l, int m, int n) {
  const unsigned oi = unsigned(OutcomeDistribution::index(l, m, n));
  double s = 0;
  for (unsigned ci = 0; ci < 8; ++ci) s += parity_sign(ci & oi) * coeff[ci];
  return s;
}

bool is_symmetric(const GameMatrix& g, double tol) {
  const PayoffCoefficients pc = coefficients(g);
  const auto& a = pc.a;
  const auto& b = pc.b;
  const auto& c = pc.c;
  // Index key: 000=0, 001=1, 010=2, 011=3, 100=4, 101=5, 110=6, 111=7.
  const std::array<std::array<double, 6>, 6> chains = {{
      {a[7], b[7], c[7], a[7], a[7], a[7]},
      {a[0], b[0], c[0], a[0], a[0], a[0]},
      {a[6], b[6], a[5], c[5], b[3], c[3]},
      {b[4], c[4], a[2], c[2], a[1], b[1]},
      {a[4], b[2], c[1], a[4], a[4], a[4]},
      {a[3], b[5], c[6], a[3], a[3], a[3]},
  }};
  for (const auto& chain : chains)
    for (double v : chain)
      if (std::abs(v - chain[0]) > tol) return false;
  return true;
}

double StrategyProfile::component(int player) const {
  switch (player) {
    case 0: return x;
    case 1: return y;
    case 2: return z;
    default: throw std::invalid_argument("player index out of range");
  }
}

StrategyProfile StrategyProfile::with_component(int player, double value) const {
  StrategyProfile s = *this;
  switch (player) {
    case 0: s.x = value; break;
    case 1: s.y = value; break;
    case 2: s.z = value; break;
    default: throw std::invalid_argument("player index out of range");
  }
  return s;
}

MeasurementConfig EmbeddingConfig::measurement(int i, int j, int k) const {
  MeasurementConfig cfg;
  cfg.kappa = kappa;
  cfg.choice = {i, j, k};
  return cfg;
}

EmbeddingConfig canonical_embedding() {
  EmbeddingConfig emb;
  for (auto& pair : emb.kappa) pair = {0.0, M_PI};
  return emb;
}

bool validate_embedding(const EmbeddingConfig& emb, double tol) {
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) {
        const ClosedFormTerms t = closed_form_terms(emb.rotors, emb.measurement(i, j, k));
        const double want_x = (i == 1) ? 1.0 : -1.0;
        const double want_y = (j == 1) ? 1.0 : -1.0;
        const double want_z = (k == 1) ? 1.0 : -1.0;
        if (std::abs(t.X - want_x) > tol || std::abs(t.Y - want_y) > tol ||
            std::abs(t.Z - want_z) > tol || std::abs(t.Theta) > tol)
          return false;
      }
  return true;
}

PayoffTriple payoff_general(const StateSpec& spec, const MeasurementConfig& cfg,
                            const GameMatrix& g) {
  const OutcomeDistribution d = distribution(spec, cfg);
  PayoffTriple pi{0, 0, 0};
  for (int oi = 0; oi < 8; ++oi)
    for (int p = 0; p < 3; ++p) pi[p] += g.payoff[oi][p] * d.p[oi];
  return pi;
}

PayoffTriple payoff_mixed(const StateSpec& spec, const EmbeddingConfig& emb, const GameMatrix& g,
                          const StrategyProfile& s) {
  if (!rotors_match(spec.rotors, emb.rotors, 1e-12))
    throw std::invalid_argument("payoff_mixed: state rotors and embedding rotors differ");
  check_probability(s.x, "x");
  check_probability(s.y, "y");
  check_probability(s.z, "z");

  PayoffTriple pi{0, 0, 0};
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k) {
        const double w = (i == 1 ? s.x : 1 - s.x) * (j == 1 ? s.y : 1 - s.y) *
                         (k == 1 ? s.z : 1 - s.z);
        if (w == 0.0) continue;
        const PayoffTriple pure = payoff_general(spec, emb.measurement(i, j, k), g);
        for (int p = 0; p < 3; ++p) pi[p] += w * pure[p];
      }
  return pi;
}

PayoffTriple payoff_ghz_closed(const GameMatrix& g, double gamma, const StrategyProfile& s) {
  require_symmetric(g);
  const PayoffCoefficients pc = coefficients(g);
  const double cg = std::cos(gamma);
  const double g000 = g.payoff[0][0], g111 = g.payoff[7][0];
  return {ghz_mixed_row(pc.a, g000, g111, cg, s.x, s.y, s.z),
          ghz_mixed_row(pc.a, g000, g111, cg, s.y, s.x, s.z),
          ghz_mixed_row(pc.a, g000, g111, cg, s.z, s.x, s.y)};
}

PayoffTriple payoff_w_closed(const GameMatrix& g, const RotorTriple& rotors,
                             const MeasurementConfig& cfg) {
  const ClosedFormTerms t = closed_form_terms(rotors, cfg);
  const PayoffCoefficients pc = coefficients(g);
  const double triple = 2 * (t.X * t.G * t.H + t.F * t.Y * t.H + t.F * t.G * t.Z +
                             t.X * t.V * t.W + t.U * t.Y * t.W + t.U * t.V * t.Z) -
                        3 * t.X * t.Y * t.Z;
  const double ab = 2 * t.F * t.G + 2 * t.U * t.V - t.X * t.Y;
  const double ac = 2 * t.F * t.H + 2 * t.U * t.W - t.X * t.Z;
  const double bc = 2 * t.G * t.H + 2 * t.V * t.W - t.Y * t.Z;
  PayoffTriple pi;
  for (int p = 0; p < 3; ++p) {
    const auto& k = pc.player(p);
    pi[p] = (3 * k[0] + k[4] * t.X + k[2] * t.Y + k[1] * t.Z + k[3] * bc + k[6] * ab +
             k[5] * ac + k[7] * triple) /
            3.0;
  }
  return pi;
}

PayoffTriple symmetric_closed_payoff(const PayoffCoefficients& pc, double cos_gamma,
                                     double cos_phi, double cos_delta,
                                     const StrategyProfile& s) {
  return {symmetric_closed_row(pc.a, cos_gamma, cos_phi, cos_delta, s.x, s.y, s.z),
          symmetric_closed_row(pc.b, cos_gamma, cos_phi, cos_delta, s.x, s.y, s.z),
          symmetric_closed_row(pc.c, cos_gamma, cos_phi, cos_delta, s.x, s.y, s.z)};
}

PayoffTriple payoff_general_symmetric_closed(const GameMatrix& g, double gamma, double phi,
                                             double delta, const StrategyProfile& s) {
  require_symmetric(g);
  return symmetric_closed_payoff(coefficients(g), std::cos(gamma), std::cos(phi),
                                 std::cos(delta), s);
}

}  // namespace eprgames
