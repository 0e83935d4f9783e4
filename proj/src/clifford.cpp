#include "eprgames/clifford.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace eprgames {

namespace {

void check_particles(int particles) {
  if (particles < 1 || particles > kMaxParticles)
    throw std::invalid_argument("particle count must be 1, 2 or 3");
}

void check_same_algebra(const Multivector& a, const Multivector& b) {
  if (a.particles() != b.particles())
    throw std::invalid_argument("multivectors belong to algebras of different particle count");
}

void check_particle_axis(int particles, int particle, int axis) {
  check_particles(particles);
  if (particle < 0 || particle >= particles)
    throw std::invalid_argument("particle index out of range");
  if (axis < 1 || axis > 3) throw std::invalid_argument("axis must be 1, 2 or 3");
}

}  // namespace

Multivector::Multivector(int particles) : particles_(particles) {
  check_particles(particles);
  coeffs_ = Eigen::VectorXd::Zero(Eigen::Index(1) << (3 * particles));
}

Multivector Multivector::scalar(int particles, double value) {
  Multivector m(particles);
  m.coeffs_[0] = value;
  return m;
}

Multivector Multivector::blade(int particles, unsigned index, double coeff) {
  Multivector m(particles);
  if (index >= unsigned(m.dimension())) throw std::invalid_argument("blade index out of range");
  m.coeffs_[index] = coeff;
  return m;
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  check_same_algebra(*this, rhs);
  coeffs_ += rhs.coeffs_;
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  check_same_algebra(*this, rhs);
  coeffs_ -= rhs.coeffs_;
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  coeffs_ *= s;
  return *this;
}

Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
Multivector operator-(Multivector lhs, const Multivector& rhs) { return lhs -= rhs; }
Multivector operator*(Multivector lhs, double s) { return lhs *= s; }
Multivector operator*(double s, Multivector rhs) { return rhs *= s; }

Multivector operator-(Multivector m) { return m *= -1.0; }

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  check_same_algebra(a, b);
  const int n = a.particles();
  Multivector out(n);

  // Skip-zero iteration; states and rotors are sparse in the 512-slot array.
  std::vector<std::pair<unsigned, double>> bnz;
  bnz.reserve(64);
  for (Eigen::Index ib = 0; ib < b.dimension(); ++ib)
    if (b[ib] != 0.0) bnz.emplace_back(unsigned(ib), b[ib]);

  for (Eigen::Index ia = 0; ia < a.dimension(); ++ia) {
    const double va = a[ia];
    if (va == 0.0) continue;
    for (const auto& [ib, vb] : bnz) {
      const int s = detail::product_sign(unsigned(ia), ib, n);
      out[Eigen::Index(unsigned(ia) ^ ib)] += s * va * vb;
    }
  }
  return out;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

Multivector reversion(const Multivector& a) {
  const int n = a.particles();
  Multivector out(n);
  for (Eigen::Index i = 0; i < a.dimension(); ++i) {
    if (a[i] == 0.0) continue;
    int s = detail::reversion_sign(unsigned(i) & 7);
    if (n > 1) s *= detail::reversion_sign((unsigned(i) >> 3) & 7);
    if (n > 2) s *= detail::reversion_sign((unsigned(i) >> 6) & 7);
    out[i] = s * a[i];
  }
  return out;
}

double scalar_part(const Multivector& a) { return a[0]; }

double scalar_part_of_product(const Multivector& a, const Multivector& b) {
  check_same_algebra(a, b);
  // Only equal blade indices land on the identity; blade*blade = square sign.
  const int n = a.particles();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < a.dimension(); ++i) {
    const double va = a[i];
    if (va == 0.0) continue;
    const double vb = b[i];
    if (vb == 0.0) continue;
    acc += detail::product_sign(unsigned(i), unsigned(i), n) * va * vb;
  }
  return acc;
}

Multivector sigma(int particles, int particle, int axis) {
  check_particle_axis(particles, particle, axis);
  const unsigned mask = 1u << (axis - 1);
  return Multivector::blade(particles, mask << (3 * particle), 1.0);
}

Multivector iota_sigma(int particles, int particle, int axis) {
  check_particle_axis(particles, particle, axis);
  // iota sigma_1 = sigma_2 sigma_3, iota sigma_2 = -sigma_1 sigma_3,
  // iota sigma_3 = sigma_1 sigma_2.
  static constexpr unsigned kMask[4] = {0, 0b110, 0b101, 0b011};
  static constexpr double kCoeff[4] = {0, 1.0, -1.0, 1.0};
  return Multivector::blade(particles, kMask[axis] << (3 * particle), kCoeff[axis]);
}

Multivector pseudoscalar(int particles, int particle) {
  check_particle_axis(particles, particle, 1);
  return Multivector::blade(particles, 0b111u << (3 * particle), 1.0);
}

Multivector bivector_exp(int particles, int particle, int axis, double angle) {
  check_particle_axis(particles, particle, axis);
  Multivector m = iota_sigma(particles, particle, axis) * (-std::sin(angle / 2));
  m[0] += std::cos(angle / 2);
  return m;
}

Correlators correlators(int particles) {
  check_particles(particles);
  Multivector e = Multivector::scalar(particles, 1.0);
  for (int i = 1; i < particles; ++i) {
    Multivector factor = Multivector::scalar(particles, 1.0) -
                         iota_sigma(particles, 0, 3) * iota_sigma(particles, i, 3);
    e = e * factor * 0.5;
  }
  Multivector j = e * iota_sigma(particles, 0, 3);
  return {std::move(e), std::move(j)};
}

double max_abs_diff(const Multivector& a, const Multivector& b) {
  check_same_algebra(a, b);
  return (a.coeffs() - b.coeffs()).lpNorm<Eigen::Infinity>();
}

bool approx_equal(const Multivector& a, const Multivector& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

}  // namespace eprgames
