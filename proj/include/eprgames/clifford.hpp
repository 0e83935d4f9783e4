#pragma once

#include <Eigen/Core>

#include <array>
#include <cstdint>

namespace eprgames {

// Real Clifford algebra Cl(3,0) tensored over N particles, N in {1,2,3}.
//
// A blade is indexed by one 3-bit mask per particle, particle 0 in the low
// bits: bit b of a mask marks a sigma_{b+1} factor of that particle.  Blades
// of distinct particles commute; within a particle the usual Cl(3,0) product
// rules apply (unit vectors square to +1, distinct vectors anticommute).
//
// Everything is real.  The role of the imaginary unit is played by the
// per-particle pseudoscalar iota = sigma_1 sigma_2 sigma_3, which squares to
// -1 and commutes with every blade of its own particle.

inline constexpr int kMaxParticles = 3;
inline constexpr int kBladesPerParticle = 8;

// Dense multivector: 8^N real coefficients.  Immutable by convention once
// built; all operations below are pure.
class Multivector {
 public:
  explicit Multivector(int particles);

  static Multivector scalar(int particles, double value);
  // Single blade with the given packed index (3 bits per particle).
  static Multivector blade(int particles, unsigned index, double coeff = 1.0);

  int particles() const noexcept { return particles_; }
  Eigen::Index dimension() const noexcept { return coeffs_.size(); }

  double operator[](Eigen::Index i) const { return coeffs_[i]; }
  double& operator[](Eigen::Index i) { return coeffs_[i]; }
  const Eigen::VectorXd& coeffs() const noexcept { return coeffs_; }

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s);

 private:
  int particles_;
  Eigen::VectorXd coeffs_;
};

Multivector operator+(Multivector lhs, const Multivector& rhs);
Multivector operator-(Multivector lhs, const Multivector& rhs);
Multivector operator*(Multivector lhs, double s);
Multivector operator*(double s, Multivector rhs);
Multivector operator-(Multivector m);

// The geometric (Clifford) product.  Throws std::invalid_argument when the
// operands live in algebras of different particle count.
Multivector geometric_product(const Multivector& a, const Multivector& b);
Multivector operator*(const Multivector& a, const Multivector& b);

// Reversion (the dagger): reverses factor order, i.e. a per-particle blade of
// grade g picks up (-1)^{g(g-1)/2}, signs multiplied across particles.
Multivector reversion(const Multivector& a);

// Coefficient of the identity blade.
double scalar_part(const Multivector& a);

// <ab>_0 without forming the full product.
double scalar_part_of_product(const Multivector& a, const Multivector& b);

// Packed blade index from per-particle masks.
constexpr unsigned blade_index(unsigned m0, unsigned m1 = 0, unsigned m2 = 0) {
  return m0 | (m1 << 3) | (m2 << 6);
}

// sigma_axis on one particle; axis in {1,2,3}.
Multivector sigma(int particles, int particle, int axis);
// iota * sigma_axis on one particle (a bivector); axis in {1,2,3}.
Multivector iota_sigma(int particles, int particle, int axis);
// iota = sigma_1 sigma_2 sigma_3 of one particle.
Multivector pseudoscalar(int particles, int particle);

// exp(-angle/2 * iota sigma_axis) = cos(angle/2) - sin(angle/2) iota sigma_axis.
Multivector bivector_exp(int particles, int particle, int axis, double angle);

// The correlator pair E = prod_{i>=2} (1 - i. sigma_3^1 i. sigma_3^i)/2 and
// J = E * iota sigma_3^1 used by the N-particle overlap probability.
struct Correlators {
  Multivector e;
  Multivector j;
};
Correlators correlators(int particles);

double max_abs_diff(const Multivector& a, const Multivector& b);
bool approx_equal(const Multivector& a, const Multivector& b, double tol = 1e-12);

namespace detail {

// Product sign of two single-particle blade masks: reorder the concatenation
// of the two ascending factor lists, contracting squares to +1.
constexpr int mask_product_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned j = 0; j < 3; ++j) {
    if (b & (1u << j)) {
      unsigned above = a >> (j + 1);
      swaps += (above & 1u) + ((above >> 1) & 1u);
    }
  }
  return (swaps & 1) ? -1 : 1;
}

constexpr std::array<std::array<std::int8_t, 8>, 8> make_sign_table() {
  std::array<std::array<std::int8_t, 8>, 8> t{};
  for (unsigned a = 0; a < 8; ++a)
    for (unsigned b = 0; b < 8; ++b)
      t[a][b] = static_cast<std::int8_t>(mask_product_sign(a, b));
  return t;
}

inline constexpr auto kMaskSign = make_sign_table();

inline int product_sign(unsigned ia, unsigned ib, int particles) {
  int s = kMaskSign[ia & 7][ib & 7];
  if (particles > 1) s *= kMaskSign[(ia >> 3) & 7][(ib >> 3) & 7];
  if (particles > 2) s *= kMaskSign[(ia >> 6) & 7][(ib >> 6) & 7];
  return s;
}

constexpr int grade(unsigned mask) {
  return int(mask & 1u) + int((mask >> 1) & 1u) + int((mask >> 2) & 1u);
}

// (-1)^{g(g-1)/2}: +1 for grades 0,1 and -1 for grades 2,3.
constexpr int reversion_sign(unsigned mask) {
  const int g = grade(mask);
  return (g == 2 || g == 3) ? -1 : 1;
}

}  // namespace detail

}  // namespace eprgames
