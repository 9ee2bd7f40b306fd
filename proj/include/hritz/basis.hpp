#pragma once

#include <cstddef>
#include <vector>

namespace hritz {

/// Largest basis index accepted anywhere in the library.
inline constexpr std::size_t kMaxBasisIndex = 1024;

/// Largest degree for the unnormalized Hermite path. Higher degrees overflow
/// long before they are useful; use the normalized basis functions instead.
inline constexpr std::size_t kMaxHermiteDegree = 30;

struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;
};

/// Physical constants plus the Gaussian width parameter alpha of the
/// Hermite-Gaussian family. All three must be strictly positive.
class BasisSpec {
 public:
  BasisSpec(double alpha, double hbar = 1.0, double mass = 1.0);
  BasisSpec(double alpha, PhysicalConstants constants);

  double alpha() const noexcept { return alpha_; }
  double hbar() const noexcept { return hbar_; }
  double mass() const noexcept { return mass_; }
  PhysicalConstants constants() const noexcept { return {hbar_, mass_}; }

 private:
  double alpha_;
  double hbar_;
  double mass_;
};

/// Throws RangeError unless r < kMaxBasisIndex.
void check_basis_index(std::size_t r);

/// Physicists' Hermite polynomial H_s(y) by upward recurrence (s <= 30).
double hermite_eval(std::size_t s, double y);

/// phi_r(x) = A_r exp(-alpha x^2 / 2) H_r(x sqrt(alpha)), orthonormal on the
/// real line. Evaluated with the normalized three-term recurrence so that no
/// factorials or large Hermite values appear.
double basis_value(const BasisSpec& spec, std::size_t r, double x);

/// phi_0(x) .. phi_{count-1}(x) in one recurrence pass.
std::vector<double> basis_values(const BasisSpec& spec, std::size_t count, double x);

/// d phi_r / dx = sqrt(2 alpha)/2 (sqrt(r) phi_{r-1} - sqrt(r+1) phi_{r+1}).
double basis_derivative(const BasisSpec& spec, std::size_t r, double x);

struct LadderCoefficients {
  double up;    // multiplies phi_{r+1}
  double down;  // multiplies phi_{r-1}
};

/// Coefficients with x phi_r = up phi_{r+1} + down phi_{r-1}.
LadderCoefficients x_recurrence_coeffs(std::size_t r, double alpha);

}  // namespace hritz
