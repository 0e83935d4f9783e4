#include "eprgames/equilibrium.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

namespace eprgames {

namespace {

bool profile_less(const StrategyProfile& a, const StrategyProfile& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.y != b.y) return a.y < b.y;
  return a.z < b.z;
}

bool profile_close(const StrategyProfile& a, const StrategyProfile& b, double tol = 1e-9) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol && std::abs(a.z - b.z) <= tol;
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// Real roots of A u^2 + B u + C, degenerating gracefully.  Returns also a
// flag for the identically-zero polynomial.
struct QuadRoots {
  std::vector<double> roots;
  bool identically_zero = false;
};

QuadRoots solve_quadratic(double A, double B, double C) {
  const double scale = std::max({std::abs(A), std::abs(B), std::abs(C), 1.0});
  const double eps = 1e-13 * scale;
  QuadRoots out;
  if (std::abs(A) <= eps) {
    if (std::abs(B) <= eps) {
      out.identically_zero = std::abs(C) <= eps;
      return out;
    }
    out.roots.push_back(-C / B);
    return out;
  }
  const double disc = B * B - 4 * A * C;
  if (disc < 0) return out;
  const double sq = std::sqrt(disc);
  out.roots.push_back((-B + sq) / (2 * A));
  out.roots.push_back((-B - sq) / (2 * A));
  return out;
}

int thread_cap() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("EPRGAMES_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1 && (unsigned long)v < n) n = unsigned(v);
  }
  return int(n);
}

std::vector<double> axis_grid(const SweepAxis& axis) {
  if (!(axis.step > 0)) throw std::invalid_argument("sweep step must be positive");
  if (axis.hi < axis.lo) throw std::invalid_argument("sweep range is empty");
  std::vector<double> values;
  const double span = axis.hi - axis.lo;
  const long steps = std::lround(std::floor(span / axis.step + 1e-9));
  for (long i = 0; i <= steps; ++i) {
    const double v = axis.lo + double(i) * axis.step;
    // Snap accumulated binary error so decimal grids sample clean values.
    values.push_back(std::round(v * 1e12) / 1e12);
  }
  return values;
}

std::vector<StrategyProfile> pure_set(const std::vector<NEResult>& list) {
  std::vector<StrategyProfile> out;
  for (const auto& ne : list)
    if (ne.kind == NEResult::kPureCorner) out.push_back(ne.profile);
  return out;
}

bool same_profile_set(const std::vector<StrategyProfile>& a,
                      const std::vector<StrategyProfile>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!profile_close(a[i], b[i])) return false;
  return true;
}

}  // namespace

NeCheck is_ne(const StrategyProfile& s, const PayoffFn& payoff, double tol) {
  const PayoffTriple base = payoff(s);
  double margin = std::numeric_limits<double>::infinity();
  for (int p = 0; p < 3; ++p) {
    for (double endpoint : {0.0, 1.0}) {
      if (endpoint == s.component(p)) continue;
      const PayoffTriple dev = payoff(s.with_component(p, endpoint));
      margin = std::min(margin, base[p] - dev[p]);
    }
  }
  if (!std::isfinite(margin)) margin = 0;  // nothing to deviate to
  return {margin >= -tol, margin};
}

FamilyAngles family_angles(const StateFamily& family) {
  if (const auto* g = std::get_if<GhzFamily>(&family))
    return {std::cos(g->gamma), 1.0, 1.0};
  if (std::get_if<WFamily>(&family)) return {0.0, -1.0, -1.0};          // phi = pi, delta = pi
  if (std::get_if<InvertedWFamily>(&family)) return {0.0, -1.0, 1.0};   // phi = pi, delta = 0
  if (const auto* s = std::get_if<SymmetricFamily>(&family))
    return {std::cos(s->gamma), std::cos(s->phi), std::cos(s->delta)};
  throw std::domain_error("equilibrium analysis accepts the ghz/w/wbar/symmetric families only");
}

PayoffFn closed_form_payoff_fn(const GameMatrix& g, const StateFamily& family) {
  if (!is_symmetric(g))
    throw std::domain_error("equilibrium analysis of a shared symmetric state requires a "
                            "player-symmetric game");
  const FamilyAngles ang = family_angles(family);
  const PayoffCoefficients pc = coefficients(g);
  return [pc, ang](const StrategyProfile& s) {
    return symmetric_closed_payoff(pc, ang.cos_gamma, ang.cos_phi, ang.cos_delta, s);
  };
}

std::vector<NEResult> pure_ne_enumerate(const PayoffFn& payoff, double tol) {
  std::vector<NEResult> out;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int z = 0; z < 2; ++z) {
        const StrategyProfile s{double(x), double(y), double(z)};
        const NeCheck check = is_ne(s, payoff, tol);
        if (check.is_ne)
          out.push_back({s, payoff(s), NEResult::kPureCorner, check.margin});
      }
  std::sort(out.begin(), out.end(),
            [](const NEResult& a, const NEResult& b) { return profile_less(a.profile, b.profile); });
  return out;
}

std::vector<NEResult> pure_ne_enumerate(const GameMatrix& g, const StateFamily& family,
                                        double tol) {
  return pure_ne_enumerate(closed_form_payoff_fn(g, family), tol);
}

PayoffTriple ne_brackets_ghz(const PayoffCoefficients& pc, double cos_gamma,
                             const StrategyProfile& s) {
  const auto bracket = [&](const std::array<double, 8>& k, double own1, double own2) {
    // k[6]=own-pair coefficient, k[4]=own linear, k[7]=triple; the symmetric
    // reduction uses Alice's coefficients for every player.
    return 2 * k[6] * (own1 + own2 - 1) +
           cos_gamma * (k[4] + k[7] * (2 * own1 - 1) * (2 * own2 - 1));
  };
  return {bracket(pc.a, s.y, s.z), bracket(pc.a, s.x, s.z), bracket(pc.a, s.x, s.y)};
}

PayoffTriple ne_brackets_symmetric(const PayoffCoefficients& pc, double cos_gamma,
                                   double cos_phi, double cos_delta, const StrategyProfile& s) {
  const auto bracket = [&](double own1, double own2) {
    const double u1 = 2 * pc.a[6] * (own1 + own2 - 1);
    const double u2 = pc.a[7] * (1 - 2 * own1) * (1 - 2 * own2);
    return 3 * (pc.a[4] + u2) * cos_gamma * (1 + cos_phi) + 2 * u1 * (1 + 2 * cos_phi) -
           (pc.a[4] - 3 * u2) * (1 - cos_phi) * cos_delta;
  };
  return {bracket(s.y, s.z), bracket(s.x, s.z), bracket(s.x, s.y)};
}

PayoffTriple ne_condition_general(const GameMatrix& g, double gamma, double phi, double delta,
                                  const StrategyProfile& s) {
  if (!is_symmetric(g))
    throw std::domain_error("the reduced NE brackets assume a player-symmetric game");
  return ne_brackets_symmetric(coefficients(g), std::cos(gamma), std::cos(phi), std::cos(delta),
                               s);
}

MixedNeResult mixed_ne_symmetric_family(const GameMatrix& g, const FamilyAngles& ang,
                                        double tol) {
  const PayoffCoefficients pc = coefficients(g);
  const PayoffFn payoff = [pc, ang](const StrategyProfile& s) {
    return symmetric_closed_payoff(pc, ang.cos_gamma, ang.cos_phi, ang.cos_delta, s);
  };
  // Stationarity of the symmetric bracket in u = 2x - 1.
  const double cg = ang.cos_gamma, cp = ang.cos_phi, cd = ang.cos_delta;
  const double A = pc.a[7] * (3 * cg * (1 + cp) + 3 * (1 - cp) * cd);
  const double B = 4 * pc.a[6] * (1 + 2 * cp);
  const double C = pc.a[4] * (3 * cg * (1 + cp) - (1 - cp) * cd);
  const QuadRoots roots = solve_quadratic(A, B, C);

  MixedNeResult out;
  out.every_profile_ne = roots.identically_zero;
  for (double u : roots.roots) {
    if (u < -1 - 1e-12 || u > 1 + 1e-12) continue;
    const double x = clamp01((1 + u) / 2);
    const StrategyProfile s{x, x, x};
    const NeCheck check = is_ne(s, payoff, tol);
    if (check.is_ne) out.points.push_back({s, payoff(s), NEResult::kInteriorMixed, check.margin});
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const NEResult& a, const NEResult& b) { return profile_less(a.profile, b.profile); });
  out.points.erase(std::unique(out.points.begin(), out.points.end(),
                               [](const NEResult& a, const NEResult& b) {
                                 return profile_close(a.profile, b.profile);
                               }),
                   out.points.end());
  return out;
}

MixedNeResult mixed_ne_symmetric(const GameMatrix& g, double gamma, double tol) {
  if (!is_symmetric(g))
    throw std::domain_error("mixed_ne_symmetric requires a player-symmetric game");
  const PayoffCoefficients pc = coefficients(g);
  const double cg = std::cos(gamma);
  const PayoffFn payoff = [&g, gamma](const StrategyProfile& s) {
    return payoff_ghz_closed(g, gamma, s);
  };

  MixedNeResult out;
  std::vector<double> candidates;
  const double a100 = pc.a[4], a110 = pc.a[6], a111 = pc.a[7];
  const double scale = std::max({std::abs(a100), std::abs(a110), std::abs(a111), 1.0});
  if (std::abs(a111 * cg) > 1e-13 * scale) {
    const double disc = a110 * a110 - cg * a100 * a111;
    if (disc >= 0) {
      const double sq = std::sqrt(disc);
      candidates.push_back((-a110 + cg * a111 + sq) / (2 * cg * a111));
      candidates.push_back((-a110 + cg * a111 - sq) / (2 * cg * a111));
    }
  } else if (std::abs(a110) > 1e-13 * scale) {
    // 2 a110 (2x - 1) + cg a100 = 0
    candidates.push_back(0.5 * (1 - cg * a100 / (2 * a110)));
  } else {
    out.every_profile_ne = std::abs(cg * a100) <= 1e-13 * scale;
  }

  for (double x : candidates) {
    if (x < -1e-12 || x > 1 + 1e-12) continue;
    const StrategyProfile s{clamp01(x), clamp01(x), clamp01(x)};
    const NeCheck check = is_ne(s, payoff, tol);
    if (check.is_ne) out.points.push_back({s, payoff(s), NEResult::kInteriorMixed, check.margin});
  }
  std::sort(out.points.begin(), out.points.end(),
            [](const NEResult& a, const NEResult& b) { return profile_less(a.profile, b.profile); });
  return out;
}

double pd_transition_threshold(double phi, double delta) {
  const double cp = std::cos(phi);
  if (std::abs(1 + cp) < 1e-12)
    throw std::domain_error("threshold undefined at phi = pi (W-type limit)");
  const double cd = std::cos(delta);
  return (2 - cd) / 3.0 + (2 * cd - 1) / (3 * (1 + cp));
}

PhaseDiagram sweep(const GameMatrix& g, const StateFamily& family, const SweepAxis& axis,
                   double tol) {
  if (axis.name != "cos_gamma" && axis.name != "gamma")
    throw std::invalid_argument("sweep axis must be cos_gamma or gamma");
  if (!is_symmetric(g))
    throw std::domain_error("sweep requires a player-symmetric game");

  FamilyAngles fixed = family_angles(family);
  PhaseDiagram diagram;
  diagram.axis = axis;
  diagram.fixed = fixed;
  diagram.has_phi_delta = std::holds_alternative<SymmetricFamily>(family) ||
                          std::holds_alternative<WFamily>(family) ||
                          std::holds_alternative<InvertedWFamily>(family);

  const std::vector<double> values = axis_grid(axis);
  const PayoffCoefficients pc = coefficients(g);
  diagram.points.resize(values.size());

  const auto eval_point = [&](size_t idx) {
    SweepPoint& pt = diagram.points[idx];
    pt.axis_value = values[idx];
    pt.cos_gamma = (axis.name == "gamma") ? std::cos(values[idx]) : values[idx];
    if (pt.cos_gamma < -1 - 1e-9 || pt.cos_gamma > 1 + 1e-9)
      throw std::invalid_argument("cos_gamma axis value outside [-1, 1]");
    pt.cos_gamma = std::min(1.0, std::max(-1.0, pt.cos_gamma));

    FamilyAngles ang = fixed;
    ang.cos_gamma = pt.cos_gamma;
    const PayoffFn payoff = [&pc, ang](const StrategyProfile& s) {
      return symmetric_closed_payoff(pc, ang.cos_gamma, ang.cos_phi, ang.cos_delta, s);
    };
    pt.equilibria = pure_ne_enumerate(payoff, tol);
    MixedNeResult mixed = mixed_ne_symmetric_family(g, ang, tol);
    pt.every_profile_ne = mixed.every_profile_ne;
    for (const auto& ne : mixed.points) {
      bool duplicate = false;
      for (const auto& existing : pt.equilibria)
        if (profile_close(existing.profile, ne.profile)) duplicate = true;
      if (!duplicate) pt.equilibria.push_back(ne);
    }
    std::sort(pt.equilibria.begin(), pt.equilibria.end(),
              [](const NEResult& a, const NEResult& b) {
                return profile_less(a.profile, b.profile);
              });
  };

  const int threads = std::min<int>(thread_cap(), int(values.size()));
  if (threads <= 1) {
    for (size_t i = 0; i < values.size(); ++i) eval_point(i);
  } else {
    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < values.size(); i = next.fetch_add(1))
          eval_point(i);
      });
    for (auto& th : pool) th.join();
  }
  return diagram;
}

std::vector<Transition> detect_transitions(const PhaseDiagram& diagram) {
  std::vector<Transition> out;
  for (size_t i = 1; i < diagram.points.size(); ++i) {
    const auto below = pure_set(diagram.points[i - 1].equilibria);
    const auto above = pure_set(diagram.points[i].equilibria);
    if (!same_profile_set(below, above))
      out.push_back({diagram.points[i - 1].axis_value, diagram.points[i].axis_value, below, above});
  }
  return out;
}

namespace {

// Best equilibrium payoff for one player at fixed family angles; -inf when
// the point has no equilibrium.
double best_ne_payoff(const PayoffCoefficients& pc, const GameMatrix& g, const FamilyAngles& ang,
                      int player, StrategyProfile* argmax) {
  const PayoffFn payoff = [&pc, ang](const StrategyProfile& s) {
    return symmetric_closed_payoff(pc, ang.cos_gamma, ang.cos_phi, ang.cos_delta, s);
  };
  double best = -std::numeric_limits<double>::infinity();
  const auto consider = [&](const NEResult& ne) {
    if (ne.payoffs[player] > best) {
      best = ne.payoffs[player];
      if (argmax) *argmax = ne.profile;
    }
  };
  for (const auto& ne : pure_ne_enumerate(payoff)) consider(ne);
  for (const auto& ne : mixed_ne_symmetric_family(g, ang).points) consider(ne);
  return best;
}

}  // namespace

MaxPayoffResult max_payoff_search(const GameMatrix& g, bool include_w, int player,
                                  int grid_per_axis, bool refine) {
  if (!is_symmetric(g)) throw std::domain_error("max_payoff_search requires a symmetric game");
  if (grid_per_axis < 2) throw std::invalid_argument("grid must have at least 2 points per axis");
  const PayoffCoefficients pc = coefficients(g);

  const int nphi = include_w ? grid_per_axis : 1;
  const int ndelta = include_w ? grid_per_axis : 1;

  MaxPayoffResult result;
  result.value = -std::numeric_limits<double>::infinity();
  double best_c = 1, best_phi = 0, best_delta = 0;

  for (int ic = 0; ic < grid_per_axis; ++ic) {
    const double c = -1 + 2.0 * ic / (grid_per_axis - 1);
    for (int ip = 0; ip < nphi; ++ip) {
      const double phi = include_w ? M_PI * ip / (nphi - 1) : 0.0;
      for (int id = 0; id < ndelta; ++id) {
        const double delta = include_w ? M_PI * id / (ndelta - 1) : 0.0;
        FamilyAngles ang{c, std::cos(phi), std::cos(delta)};
        StrategyProfile arg;
        const double v = best_ne_payoff(pc, g, ang, player, &arg);
        if (v > result.value) {
          result.value = v;
          result.profile = arg;
          best_c = c;
          best_phi = phi;
          best_delta = delta;
        }
      }
    }
  }

  if (refine && std::isfinite(result.value)) {
    double wc = 2.0 / (grid_per_axis - 1);
    double wp = include_w ? M_PI / (grid_per_axis - 1) : 0.0;
    const int k = 8;  // samples per side and round
    for (int round = 0; round < 40; ++round) {
      double cand_c = best_c, cand_phi = best_phi, cand_delta = best_delta;
      StrategyProfile cand_profile = result.profile;
      double cand_v = result.value;
      for (int ic = -k; ic <= k; ++ic) {
        const double c = std::min(1.0, std::max(-1.0, best_c + wc * ic / k));
        for (int ip = (include_w ? -k : 0); ip <= (include_w ? k : 0); ++ip) {
          const double phi = std::min(M_PI, std::max(0.0, best_phi + wp * ip / k));
          for (int id = (include_w ? -k : 0); id <= (include_w ? k : 0); ++id) {
            const double delta = std::min(M_PI, std::max(0.0, best_delta + wp * id / k));
            FamilyAngles ang{c, std::cos(phi), std::cos(delta)};
            StrategyProfile arg;
            const double v = best_ne_payoff(pc, g, ang, player, &arg);
            if (v > cand_v) {
              cand_v = v;
              cand_c = c;
              cand_phi = phi;
              cand_delta = delta;
              cand_profile = arg;
            }
          }
        }
      }
      result.value = cand_v;
      result.profile = cand_profile;
      best_c = cand_c;
      best_phi = cand_phi;
      best_delta = cand_delta;
      wc *= 0.5;
      wp *= 0.5;
    }
  }

  result.params.gamma = std::acos(std::min(1.0, std::max(-1.0, best_c)));
  result.params.phi = best_phi;
  result.params.delta = best_delta;
  return result;
}

}  // namespace eprgames
