#pragma once

#include <cstddef>
#include <vector>

#include "hritz/basis.hpp"
#include "hritz/operators.hpp"

namespace hritz {

enum class ChannelParity { even, odd };

/// Outward shooting on [0, x_max] for one parity channel of an even
/// potential.
struct ShootingConfig {
  double x_max = 0.0;
  std::size_t steps = 20000;
  double energy_lo = 0.0;
  double energy_hi = 0.0;
  ChannelParity parity = ChannelParity::even;
};

inline constexpr std::size_t kMinShootingSteps = 1000;

/// Airy length (hbar^2 / (2 m V'(x_t)))^(1/3) at the outer turning point of
/// the given energy: the scale over which a bound state decays past x_t.
double decay_length(const PotentialSpec& pot, PhysicalConstants constants, double energy);

/// x_max = x_t(energy_hi) + 8 decay lengths, 20000 steps.
ShootingConfig default_shooting_config(const PotentialSpec& pot, PhysicalConstants constants,
                                       double energy_lo, double energy_hi, ChannelParity parity);

/// Throws ValidationError unless steps >= 1000, energy_lo < energy_hi and
/// x_max reaches at least 5 decay lengths past the turning point at energy_hi.
void validate_config(const ShootingConfig& config, const PotentialSpec& pot,
                     PhysicalConstants constants);

struct ShootProfile {
  double tail = 0.0;        // psi(x_max) / max |psi| over [0, x_max]
  std::size_t nodes = 0;    // sign changes of psi on (0, x_max]
};

/// Integrates psi'' = (2m / hbar^2)(V - E) psi outward from x = 0 with the
/// Numerov scheme, starting from psi(0) = 1, psi'(0) = 0 (even) or
/// psi(0) = 0, psi'(0) = 1 (odd). Values are rescaled internally, so the
/// tail is reported relative to the largest amplitude met on the way.
ShootProfile shoot_profile(const PotentialSpec& pot, PhysicalConstants constants,
                           const ShootingConfig& config, double energy);

/// psi at x_i = i * x_max / steps, i = 0..steps, scaled so max |psi| = 1.
std::vector<double> shoot_wavefunction(const PotentialSpec& pot, PhysicalConstants constants,
                                       const ShootingConfig& config, double energy);

/// The normalized endpoint value psi(x_max) / max|psi|; its sign changes
/// across each eigenvalue of the channel.
double shoot(const PotentialSpec& pot, PhysicalConstants constants, const ShootingConfig& config,
             double energy);

/// Bisection on the sign of shoot() inside [energy_lo, energy_hi] down to a
/// bracket width of 1e-10. Throws BracketingError without a sign change.
double eigenvalue(const PotentialSpec& pot, PhysicalConstants constants,
                  const ShootingConfig& config);

struct RichardsonEstimate {
  double coarse = 0.0;  // steps
  double fine = 0.0;    // 2 steps
  double finer = 0.0;   // 4 steps
  double extrapolated = 0.0;        // from coarse and fine
  double extrapolated_finer = 0.0;  // from fine and finer

  double change() const { return std::abs(extrapolated_finer - extrapolated); }
};

/// Eigenvalue at three step sizes with fourth-order Richardson extrapolation.
RichardsonEstimate richardson_eigenvalue(const PotentialSpec& pot, PhysicalConstants constants,
                                         const ShootingConfig& config);

/// All eigenvalues below e_cap from both parity channels, ascending. The
/// template supplies the step count; x_max is widened if it is too short for
/// e_cap. Cells of the energy grid holding more than one level are split;
/// NumericalError if a cell cannot be resolved.
std::vector<double> spectrum_below(const PotentialSpec& pot, PhysicalConstants constants,
                                   const ShootingConfig& config_template, double e_cap);

}  // namespace hritz
