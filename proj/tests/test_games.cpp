#include "eprgames/games.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace eprgames;
using namespace eprgames::testing;

TEST_CASE("Prisoners' Dilemma coefficient values") {
  const PayoffCoefficients pc = coefficients(pd_game());
  const std::array<double, 8> expected = {4.0, 14.0 / 8, 14.0 / 8, 0.0, -1.0, -2.0 / 8,
                                          -2.0 / 8, 0.0};
  for (int i = 0; i < 8; ++i) CHECK(pc.a[i] == expected[i]);
}

TEST_CASE("constant game keeps only the leading coefficient") {
  const PayoffCoefficients pc = coefficients(GameMatrix::constant(2.5));
  CHECK(pc.a[0] == 2.5);
  for (int i = 1; i < 8; ++i) {
    CHECK(pc.a[i] == 0.0);
    CHECK(pc.b[i] == 0.0);
    CHECK(pc.c[i] == 0.0);
  }
}

TEST_CASE("signed coefficient sums invert back to the game matrix") {
  auto rng = make_rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const GameMatrix g = random_game(rng);
    const PayoffCoefficients pc = coefficients(g);
    for (int l = 0; l < 2; ++l)
      for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n) {
          const int oi = OutcomeDistribution::index(l, m, n);
          CHECK(std::abs(reconstruct_payoff(pc.a, l, m, n) - g.payoff[oi][0]) <= 1e-12);
          CHECK(std::abs(reconstruct_payoff(pc.b, l, m, n) - g.payoff[oi][1]) <= 1e-12);
          CHECK(std::abs(reconstruct_payoff(pc.c, l, m, n) - g.payoff[oi][2]) <= 1e-12);
        }
  }
}

TEST_CASE("symmetry detection") {
  CHECK(is_symmetric(pd_game()));
  CHECK(is_symmetric(GameMatrix::constant(1.0)));
  CHECK(is_symmetric(cubic_symmetric_game()));
  GameMatrix g = pd_game();
  g.payoff[3][0] += 0.25;  // perturb player A only
  CHECK_FALSE(is_symmetric(g));
}

TEST_CASE("canonical embedding satisfies the classical constraints") {
  const EmbeddingConfig emb = canonical_embedding();
  CHECK(validate_embedding(emb));
  const ClosedFormTerms t1 = closed_form_terms(emb.rotors, emb.measurement(1, 1, 1));
  CHECK(std::abs(t1.X - 1.0) <= 1e-15);
  const ClosedFormTerms t2 = closed_form_terms(emb.rotors, emb.measurement(2, 2, 2));
  CHECK(std::abs(t2.X + 1.0) <= 1e-15);
  CHECK(std::abs(t2.Y + 1.0) <= 1e-15);
  CHECK(std::abs(t2.Z + 1.0) <= 1e-15);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      for (int k = 1; k <= 2; ++k)
        CHECK(std::abs(closed_form_terms(emb.rotors, emb.measurement(i, j, k)).Theta) <= 1e-15);
}

TEST_CASE("second embedding class validates as well") {
  EmbeddingConfig emb = canonical_embedding();
  const double a1 = 0.8, a2 = 1.7;
  emb.rotors[0] = EulerRotor{a1, a2, 0.0};
  emb.kappa[0] = {a1, a1 - M_PI};
  CHECK(validate_embedding(emb));

  emb.kappa[0] = {a1, a1 - M_PI / 2};  // directions no longer pi out of phase
  CHECK_FALSE(validate_embedding(emb));
}

TEST_CASE("pure-direction payoffs at the classical corners") {
  const GameMatrix g = pd_game();
  const EmbeddingConfig emb = canonical_embedding();
  const StateSpec spec{GhzFamily{0.0}, {}};
  const PayoffTriple first = payoff_general(spec, emb.measurement(1, 1, 1), g);
  for (double v : first) CHECK(std::abs(v - 6.0) <= 1e-12);
  const PayoffTriple second = payoff_general(spec, emb.measurement(2, 2, 2), g);
  for (double v : second) CHECK(std::abs(v - 1.0) <= 1e-12);
}

TEST_CASE("maximal entanglement pays the corner average at the all-same profiles") {
  const EmbeddingConfig emb = canonical_embedding();
  const StateSpec spec{GhzFamily{M_PI / 2}, {}};
  auto rng = make_rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const GameMatrix g = trial == 0 ? pd_game() : random_symmetric_game(rng);
    const double expected = 0.5 * (g.payoff[0][0] + g.payoff[7][0]);
    for (double corner : {0.0, 1.0}) {
      const PayoffTriple pi = payoff_mixed(spec, emb, g, {corner, corner, corner});
      for (double v : pi) CHECK(std::abs(v - expected) <= 1e-12);
    }
  }
}

TEST_CASE("classical branch of the PD payoff") {
  const GameMatrix g = pd_game();
  const EmbeddingConfig emb = canonical_embedding();
  for (int k = 0; k <= 20; ++k) {
    const double c = -1.0 + 0.1 * k;
    const double gamma = std::acos(c);
    const PayoffTriple mixed = payoff_mixed({GhzFamily{gamma}, {}}, emb, g, {0, 0, 0});
    const PayoffTriple closed = payoff_ghz_closed(g, gamma, {0, 0, 0});
    CHECK(std::abs(mixed[0] - (3.5 - 2.5 * c)) <= 1e-12);
    CHECK(std::abs(closed[0] - (3.5 - 2.5 * c)) <= 1e-12);
  }
}

TEST_CASE("PD payoff values quoted along the phase diagram") {
  const GameMatrix g = pd_game();
  // (1,1,1): falls from 2.25 at cos g = -1/2 to 1 at cos g = -1.
  CHECK(std::abs(payoff_ghz_closed(g, std::acos(-0.5), {1, 1, 1})[0] - 2.25) <= 1e-12);
  CHECK(std::abs(payoff_ghz_closed(g, std::acos(-1.0), {1, 1, 1})[0] - 1.0) <= 1e-12);
  // Coalition branch (1,0,0) at cos g = 1/2.
  const PayoffTriple coalition = payoff_ghz_closed(g, std::acos(0.5), {1, 0, 0});
  CHECK(std::abs(coalition[0] - 2.25) <= 1e-12);
  CHECK(std::abs(coalition[1] - 4.5) <= 1e-12);
  CHECK(std::abs(coalition[2] - 4.5) <= 1e-12);
}

TEST_CASE("closed GHZ payoff agrees with the probability route") {
  auto rng = make_rng(43);
  const EmbeddingConfig emb = canonical_embedding();
  for (int trial = 0; trial < 60; ++trial) {
    const GameMatrix g = random_symmetric_game(rng);
    const double gamma = uniform(rng, 0, M_PI);
    const StrategyProfile s = random_profile(rng);
    const PayoffTriple closed = payoff_ghz_closed(g, gamma, s);
    const PayoffTriple mixed = payoff_mixed({GhzFamily{gamma}, {}}, emb, g, s);
    for (int p = 0; p < 3; ++p) CHECK(std::abs(closed[p] - mixed[p]) <= 1e-12);
  }
  CHECK_THROWS_AS(payoff_ghz_closed(random_game(rng), 0.3, {0, 0, 0}), std::domain_error);
}

TEST_CASE("closed GHZ payoff reduces to the classical trilinear form at gamma = 0") {
  auto rng = make_rng(44);
  for (int trial = 0; trial < 100; ++trial) {
    const GameMatrix g = random_symmetric_game(rng);
    const StrategyProfile s = random_profile(rng);
    const PayoffTriple closed = payoff_ghz_closed(g, 0.0, s);
    const PayoffTriple classical = classical_trilinear(g, s);
    for (int p = 0; p < 3; ++p) CHECK(std::abs(closed[p] - classical[p]) <= 1e-12);
  }
}

TEST_CASE("mixed payoff equals the classical trilinear form at gamma = 0 for any game") {
  auto rng = make_rng(45);
  const EmbeddingConfig emb = canonical_embedding();
  for (int trial = 0; trial < 60; ++trial) {
    const GameMatrix g = random_game(rng);
    const StrategyProfile s = random_profile(rng);
    const PayoffTriple mixed = payoff_mixed({GhzFamily{0.0}, {}}, emb, g, s);
    const PayoffTriple classical = classical_trilinear(g, s);
    for (int p = 0; p < 3; ++p) CHECK(std::abs(mixed[p] - classical[p]) <= 1e-12);
  }
}

TEST_CASE("player symmetry of the mixed payoff") {
  auto rng = make_rng(46);
  const EmbeddingConfig emb = canonical_embedding();
  for (int trial = 0; trial < 30; ++trial) {
    const GameMatrix g = random_symmetric_game(rng);
    const double gamma = uniform(rng, 0, M_PI);
    const StrategyProfile s = random_profile(rng);
    const StateSpec spec{GhzFamily{gamma}, {}};
    const PayoffTriple base = payoff_mixed(spec, emb, g, s);
    const PayoffTriple swapped = payoff_mixed(spec, emb, g, {s.y, s.x, s.z});
    CHECK(std::abs(base[0] - swapped[1]) <= 1e-12);
    CHECK(std::abs(base[1] - swapped[0]) <= 1e-12);
  }
}

TEST_CASE("W closed payoff at the computational basis of Table 1") {
  const GameMatrix g = pd_game();
  MeasurementConfig cfg;
  const PayoffTriple pi = payoff_w_closed(g, {}, cfg);
  for (double v : pi) CHECK(std::abs(v - 5.0) <= 1e-12);  // (9+3+3)/3
}

TEST_CASE("W closed payoff agrees with the probability route") {
  auto rng = make_rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const GameMatrix g = random_game(rng);
    const RotorTriple rotors = random_rotors(rng);
    const MeasurementConfig cfg = random_config(rng);
    const PayoffTriple closed = payoff_w_closed(g, rotors, cfg);
    const PayoffTriple general = payoff_general({WFamily{}, rotors}, cfg, g);
    for (int p = 0; p < 3; ++p) CHECK(std::abs(closed[p] - general[p]) <= 1e-12);
  }
}

TEST_CASE("W payoff ignores the free embedding angles") {
  auto rng = make_rng(48);
  const GameMatrix g = pd_game();
  EmbeddingConfig emb = canonical_embedding();
  MeasurementConfig cfg = emb.measurement(1, 2, 1);
  const PayoffTriple base = payoff_w_closed(g, {}, cfg);
  for (int trial = 0; trial < 30; ++trial) {
    RotorTriple rotors;
    for (auto& r : rotors) r = EulerRotor{0.0, uniform(rng, 0, 2 * M_PI), uniform(rng, 0, 2 * M_PI)};
    const PayoffTriple varied = payoff_w_closed(g, rotors, cfg);
    for (int p = 0; p < 3; ++p) CHECK(std::abs(varied[p] - base[p]) <= 1e-12);
  }
}

TEST_CASE("symmetric-family closed payoff") {
  const GameMatrix g = pd_game();

  SUBCASE("uniform superposition pays the matrix average regardless of strategy") {
    auto rng = make_rng(49);
    for (int trial = 0; trial < 50; ++trial) {
      const PayoffTriple pi = payoff_general_symmetric_closed(
          g, M_PI / 2, 2 * M_PI / 3, M_PI / 2, random_profile(rng));
      for (double v : pi) CHECK(std::abs(v - 4.0) <= 1e-12);
    }
  }

  SUBCASE("phi = pi, delta = 0, cos gamma = 1 pays 10/3 at all-ones") {
    const PayoffTriple pi = payoff_general_symmetric_closed(g, 0.0, M_PI, 0.0, {1, 1, 1});
    for (double v : pi) CHECK(std::abs(v - 10.0 / 3) <= 1e-12);
  }

  SUBCASE("phi = 0 recovers the GHZ closed form") {
    auto rng = make_rng(50);
    for (int trial = 0; trial < 50; ++trial) {
      const GameMatrix game = random_symmetric_game(rng);
      const double gamma = uniform(rng, 0, M_PI);
      const StrategyProfile s = random_profile(rng);
      const PayoffTriple sym =
          payoff_general_symmetric_closed(game, gamma, 0.0, uniform(rng, 0, M_PI), s);
      const PayoffTriple ghz = payoff_ghz_closed(game, gamma, s);
      for (int p = 0; p < 3; ++p) CHECK(std::abs(sym[p] - ghz[p]) <= 1e-12);
    }
  }

  SUBCASE("matches the probability route on the realized symmetric state") {
    auto rng = make_rng(51);
    const EmbeddingConfig emb = canonical_embedding();
    for (int trial = 0; trial < 40; ++trial) {
      const GameMatrix game = random_symmetric_game(rng);
      const double gamma = uniform(rng, 0, M_PI);
      const double phi = uniform(rng, 0, M_PI);
      const double delta = uniform(rng, 0, M_PI);
      const StrategyProfile s = random_profile(rng);
      const PayoffTriple closed = payoff_general_symmetric_closed(game, gamma, phi, delta, s);
      const PayoffTriple mixed =
          payoff_mixed({SymmetricFamily{gamma, phi, delta}, {}}, emb, game, s);
      for (int p = 0; p < 3; ++p) CHECK(std::abs(closed[p] - mixed[p]) <= 1e-12);
    }
  }

  SUBCASE("rejects asymmetric games") {
    auto rng = make_rng(52);
    CHECK_THROWS_AS(payoff_general_symmetric_closed(random_game(rng), 1.0, 1.0, 1.0, {0, 0, 0}),
                    std::domain_error);
  }
}

TEST_CASE("payoff_mixed rejects mismatched rotors") {
  const GameMatrix g = pd_game();
  EmbeddingConfig emb = canonical_embedding();
  StateSpec spec{GhzFamily{0.5}, {}};
  spec.rotors[0].theta1 = 0.3;
  CHECK_THROWS_AS(payoff_mixed(spec, emb, g, {0, 0, 0}), std::invalid_argument);
}
