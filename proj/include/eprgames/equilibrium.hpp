#pragma once

#include "eprgames/games.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace eprgames {

// Default slack for Nash-equilibrium checks: payoffs are O(10), so this
// separates float noise from genuine ties.
inline constexpr double kNeTol = 1e-9;

using PayoffFn = std::function<PayoffTriple(const StrategyProfile&)>;

struct NeCheck {
  bool is_ne = false;
  double margin = 0;  // minimum best-response slack over players and endpoint deviations
};

// A profile is an NE when no unilateral deviation to an endpoint gains more
// than tol; endpoints suffice because payoffs are multilinear in each
// player's own strategy weight.
NeCheck is_ne(const StrategyProfile& s, const PayoffFn& payoff, double tol = kNeTol);

struct NEResult {
  StrategyProfile profile;
  PayoffTriple payoffs{};
  enum Kind { kPureCorner, kInteriorMixed } kind = kPureCorner;
  double margin = 0;
};

// Every game family the equilibrium analysis accepts is played under the
// canonical classical embedding; the closed-form payoff used per family is
// the symmetric-family expression (which reduces to the GHZ expression at
// phi = 0).  The angles enter as cosines.
struct FamilyAngles {
  double cos_gamma = 1, cos_phi = 1, cos_delta = 1;
};
FamilyAngles family_angles(const StateFamily& family);

// Closed-form mixed payoff function for a symmetric game and a state family
// under the canonical embedding.
PayoffFn closed_form_payoff_fn(const GameMatrix& g, const StateFamily& family);

// Tests all eight corner profiles; results sorted lexicographically.
std::vector<NEResult> pure_ne_enumerate(const PayoffFn& payoff, double tol = kNeTol);
std::vector<NEResult> pure_ne_enumerate(const GameMatrix& g, const StateFamily& family,
                                        double tol = kNeTol);

// Per-player deviation brackets.  A profile s* is an NE iff for every player
// the bracket is >= 0 when the component is 1, <= 0 when it is 0, and free
// when the component is interior (indifference).
PayoffTriple ne_brackets_ghz(const PayoffCoefficients& pc, double cos_gamma,
                             const StrategyProfile& s);
// Bracket of the general symmetric family (reduces to 6x the GHZ bracket at
// phi = 0).
PayoffTriple ne_brackets_symmetric(const PayoffCoefficients& pc, double cos_gamma,
                                   double cos_phi, double cos_delta, const StrategyProfile& s);
PayoffTriple ne_condition_general(const GameMatrix& g, double gamma, double phi, double delta,
                                  const StrategyProfile& s);

struct MixedNeResult {
  std::vector<NEResult> points;
  bool every_profile_ne = false;  // the stationarity bracket vanishes identically
};

// Symmetric interior equilibria x* = y* = z* for the GHZ family:
//   x* = (-a110 + cg a111 +- sqrt(a110^2 - cg a100 a111)) / (2 cg a111),
// falling back to the linear stationarity condition when a111 cg = 0.  Roots
// are kept only when they land in [0,1] and verify as equilibria.
MixedNeResult mixed_ne_symmetric(const GameMatrix& g, double gamma, double tol = kNeTol);
// Same for the symmetric (gamma, phi, delta) family.
MixedNeResult mixed_ne_symmetric_family(const GameMatrix& g, const FamilyAngles& ang,
                                        double tol = kNeTol);

// Entanglement threshold of the Table-1 Prisoners' Dilemma where the
// defect-everywhere equilibrium gives way to the single-cooperator ones:
//   cos g = (2 - cos d)/3 + (2 cos d - 1)/(3 (1 + cos p)).
// Throws std::domain_error at phi = pi where the expression degenerates.
double pd_transition_threshold(double phi, double delta);

struct SweepAxis {
  std::string name = "cos_gamma";  // "cos_gamma" or "gamma"
  double lo = -1, hi = 1, step = 0.01;
};

struct SweepPoint {
  double axis_value = 0;
  double cos_gamma = 1;
  std::vector<NEResult> equilibria;
  bool every_profile_ne = false;
};

struct PhaseDiagram {
  SweepAxis axis;
  FamilyAngles fixed;  // cos_phi / cos_delta shared by all points
  bool has_phi_delta = false;
  std::vector<SweepPoint> points;
};

// Evaluates pure and interior equilibria with payoffs over the inclusive
// axis grid.  Grid points are independent; evaluation is parallelized up to
// the EPRGAMES_THREADS cap with a deterministic index-ordered merge.
PhaseDiagram sweep(const GameMatrix& g, const StateFamily& family, const SweepAxis& axis,
                   double tol = kNeTol);

// Axis values at which the pure-NE set changes between neighbouring grid
// points, reported as the pair bracketing the change.
struct Transition {
  double below = 0, above = 0;  // axis values on each side
  std::vector<StrategyProfile> set_below, set_above;
};
std::vector<Transition> detect_transitions(const PhaseDiagram& diagram);

struct MaxPayoffResult {
  double value = 0;
  SymmetricFamily params;
  StrategyProfile profile;
};

// Maximizes one player's equilibrium payoff over the family parameters by a
// dense grid plus local refinement.  include_w sweeps the full
// (gamma, phi, delta) family; otherwise phi = delta = 0 (the GHZ family).
MaxPayoffResult max_payoff_search(const GameMatrix& g, bool include_w, int player = 0,
                                  int grid_per_axis = 20, bool refine = true);

}  // namespace eprgames
