#include "eprgames/states.hpp"

#include "eprgames/measurement.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace eprgames;
using namespace eprgames::testing;

TEST_CASE("spinor mapping of the computational basis") {
  CHECK(max_abs_diff(spinor_to_mv({1, 0, 0, 0}), Multivector::scalar(1, 1.0)) == 0.0);
  CHECK(max_abs_diff(spinor_to_mv({0, 0, -1, 0}), -iota_sigma(1, 0, 2)) == 0.0);
}

TEST_CASE("spinor round trip") {
  auto rng = make_rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Spinor s{uniform(rng, -1, 1), uniform(rng, -1, 1), uniform(rng, -1, 1),
                   uniform(rng, -1, 1)};
    const Spinor back = mv_to_spinor(spinor_to_mv(s));
    CHECK(back.a0 == s.a0);
    CHECK(back.a1 == s.a1);
    CHECK(back.a2 == s.a2);
    CHECK(back.a3 == s.a3);
  }
  CHECK_THROWS_AS(mv_to_spinor(sigma(1, 0, 1)), std::invalid_argument);
}

TEST_CASE("three-qubit basis signs") {
  // The per-particle factors 1 / -iota sigma_2 give signs -,+,- for one, two
  // and three excited bits.
  const Multivector p1 = iota_sigma(3, 0, 2);
  const Multivector p2 = iota_sigma(3, 1, 2);
  const Multivector p3 = iota_sigma(3, 2, 2);
  CHECK(max_abs_diff(basis_state(0, 0, 0), Multivector::scalar(3, 1.0)) == 0.0);
  CHECK(max_abs_diff(basis_state(0, 0, 1), -p3) == 0.0);
  CHECK(max_abs_diff(basis_state(0, 1, 0), -p2) == 0.0);
  CHECK(max_abs_diff(basis_state(1, 0, 0), -p1) == 0.0);
  CHECK(max_abs_diff(basis_state(0, 1, 1), p2 * p3) == 0.0);
  CHECK(max_abs_diff(basis_state(1, 0, 1), p1 * p3) == 0.0);
  CHECK(max_abs_diff(basis_state(1, 1, 0), p1 * p2) == 0.0);
  CHECK(max_abs_diff(basis_state(1, 1, 1), -(p1 * p2 * p3)) == 0.0);
  CHECK_THROWS_AS(basis_state(0, 2, 0), std::invalid_argument);
}

TEST_CASE("euler rotors are unit") {
  auto rng = make_rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const EulerRotor r = random_rotor(rng);
    const Multivector m = r.realize(3, trial % 3);
    CHECK(max_abs_diff(m * reversion(m), Multivector::scalar(3, 1.0)) <= 1e-12);
  }
}

TEST_CASE("GHZ family core") {
  StateSpec spec{GhzFamily{0.0}, {}};
  CHECK(max_abs_diff(realize_state(spec), Multivector::scalar(3, 1.0)) == 0.0);

  const double gamma = 1.1;
  spec.family = GhzFamily{gamma};
  const Multivector psi = realize_state(spec);
  Multivector expected = Multivector::scalar(3, std::cos(gamma / 2)) +
                         iota_sigma(3, 0, 2) * iota_sigma(3, 1, 2) * iota_sigma(3, 2, 2) *
                             (-std::sin(gamma / 2));
  CHECK(max_abs_diff(psi, expected) <= 1e-15);
}

TEST_CASE("symmetric family reduces to GHZ at phi = 0 independently of delta") {
  const double gamma = 0.73;
  const Multivector ghz = realize_state({GhzFamily{gamma}, {}});
  for (double delta : {0.0, 0.4, 1.9, M_PI}) {
    const Multivector sym = realize_state({SymmetricFamily{gamma, 0.0, delta}, {}});
    CHECK(max_abs_diff(sym, ghz) <= 1e-15);
  }
}

TEST_CASE("uniform-superposition point is a single-qubit product state") {
  const Multivector psi =
      realize_state({SymmetricFamily{M_PI / 2, 2 * M_PI / 3, M_PI / 2}, {}});
  // (1 + iota sigma_2)/sqrt(2) per qubit, i.e. the Hadamard image of |1>.
  Multivector product = Multivector::scalar(3, 1.0);
  for (int p = 0; p < 3; ++p) {
    Multivector h = iota_sigma(3, p, 2);
    h[0] += 1.0;
    product = product * h * (1.0 / std::sqrt(2.0));
  }
  CHECK(max_abs_diff(psi, product) <= 1e-15);

  MeasurementConfig cfg;  // kappa = 0 everywhere
  const OutcomeDistribution d = distribution({SymmetricFamily{M_PI / 2, 2 * M_PI / 3, M_PI / 2}, {}}, cfg);
  for (double p : d.p) CHECK(std::abs(p - 0.125) <= 1e-12);
}

TEST_CASE("every family yields a normalized outcome distribution") {
  auto rng = make_rng(23);
  const std::array<StateFamily, 5> families = {
      GhzFamily{1.3}, WFamily{}, InvertedWFamily{}, SymmetricFamily{0.9, 1.7, 0.5},
      PureFamily{{0.5, 0.5, 0.5, 0.35355339059327373, 0.35355339059327373}, 1.0}};
  for (const auto& family : families) {
    for (int trial = 0; trial < 10; ++trial) {
      StateSpec spec{family, random_rotors(rng)};
      const OutcomeDistribution d = distribution(spec, random_config(rng));
      CHECK(std::abs(d.sum() - 1.0) <= 1e-12);
      for (double p : d.p) {
        CHECK(p >= 0.0);
        CHECK(p <= 1.0);
      }
    }
  }
}

TEST_CASE("inverted W equals W after outcome bit flips") {
  auto rng = make_rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const RotorTriple rotors = random_rotors(rng);
    const MeasurementConfig cfg = random_config(rng);
    const OutcomeDistribution dw = distribution({WFamily{}, rotors}, cfg);
    const OutcomeDistribution dwbar = distribution({InvertedWFamily{}, rotors}, cfg);
    for (int l = 0; l < 2; ++l)
      for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n)
          CHECK(std::abs(dwbar.at(l, m, n) - dw.at(1 - l, 1 - m, 1 - n)) <= 1e-12);
  }
}

TEST_CASE("realized states are invariant in probability under global sign") {
  auto rng = make_rng(25);
  const StateSpec spec{SymmetricFamily{1.1, 0.8, 2.0}, random_rotors(rng)};
  const Multivector psi = realize_state(spec);
  const OverlapEvaluator plus(psi), minus(-psi);
  for (int trial = 0; trial < 20; ++trial) {
    const MeasurementConfig cfg = random_config(rng);
    const Multivector phi = bivector_exp(3, 0, 2, cfg.chosen_kappa(0)) *
                            bivector_exp(3, 1, 2, cfg.chosen_kappa(1)) *
                            bivector_exp(3, 2, 2, cfg.chosen_kappa(2)) *
                            basis_state(trial % 2, (trial / 2) % 2, (trial / 4) % 2);
    CHECK(std::abs(plus.probability(phi) - minus.probability(phi)) <= 1e-14);
  }
}

TEST_CASE("pure-state validation") {
  StateSpec spec{PureFamily{{1, 1, 0, 0, 0}, 0.0}, {}};
  CHECK_THROWS_AS(realize_state(spec), std::invalid_argument);
  spec.family = PureFamily{{0, -1, 0, 0, 0}, 0.0};  // lambda_1 < 0
  CHECK_THROWS_AS(realize_state(spec), std::invalid_argument);
  spec.family = PureFamily{{1, 0, 0, 0, 0}, 4.0};  // phase out of range
  CHECK_THROWS_AS(realize_state(spec), std::invalid_argument);
}

TEST_CASE("symmetric amplitudes round trip") {
  auto rng = make_rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    const SymmetricFamily f{uniform(rng, 0, M_PI), uniform(rng, 0, M_PI),
                            uniform(rng, 0, M_PI)};
    const auto rho = symmetric_amplitudes(f);
    const SymmetricFamily back = symmetric_from_amplitudes(rho[0], rho[1], rho[2], rho[3]);
    const auto rho_back = symmetric_amplitudes(back);
    for (int i = 0; i < 4; ++i) CHECK(std::abs(rho[i] - rho_back[i]) <= 1e-12);
  }
  CHECK_THROWS_AS(symmetric_from_amplitudes(1.0, 1.0, 0.0, 0.0), std::invalid_argument);
  // All-positive group amplitudes are not in the angle family.
  CHECK_THROWS_AS(symmetric_from_amplitudes(0.5, 0.5 / std::sqrt(3.0), 0.5 / std::sqrt(3.0),
                                            0.5),
                  std::invalid_argument);
}
