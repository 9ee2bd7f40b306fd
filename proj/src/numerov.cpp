#include "hritz/numerov.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hritz/errors.hpp"

namespace hritz {

namespace {

double potential_slope(const PotentialSpec& pot, double x, double mass) {
  const auto c = pot.even_coefficients(mass);
  double slope = 0.0;
  for (std::size_t k = 1; k < c.size(); ++k)
    slope += 2.0 * static_cast<double>(k) * c[k] * std::pow(x, static_cast<double>(2 * k - 1));
  return slope;
}

void check_constants(PhysicalConstants constants) {
  if (!(constants.hbar > 0.0) || !(constants.mass > 0.0))
    throw ValidationError("numerov: hbar and mass must be positive");
}

double minimum_potential(const PotentialSpec& pot, double mass, double x_hi) {
  double vmin = pot.value(0.0, mass);
  constexpr int kScan = 4096;
  for (int i = 1; i <= kScan; ++i) vmin = std::min(vmin, pot.value(x_hi * i / kScan, mass));
  return vmin;
}

}  // namespace

double decay_length(const PotentialSpec& pot, PhysicalConstants constants, double energy) {
  check_constants(constants);
  const double xt = pot.outer_turning_point(energy, constants.mass);
  // A turning point at the origin has zero slope; fall back to a point
  // slightly outside so the length stays finite.
  const double x = std::max(xt, 1e-3);
  const double slope = std::max(potential_slope(pot, x, constants.mass), 1e-12);
  return std::cbrt(constants.hbar * constants.hbar / (2.0 * constants.mass * slope));
}

ShootingConfig default_shooting_config(const PotentialSpec& pot, PhysicalConstants constants,
                                       double energy_lo, double energy_hi, ChannelParity parity) {
  ShootingConfig cfg;
  cfg.energy_lo = energy_lo;
  cfg.energy_hi = energy_hi;
  cfg.parity = parity;
  cfg.steps = 20000;
  cfg.x_max = pot.outer_turning_point(energy_hi, constants.mass) +
              8.0 * decay_length(pot, constants, energy_hi);
  return cfg;
}

void validate_config(const ShootingConfig& config, const PotentialSpec& pot,
                     PhysicalConstants constants) {
  check_constants(constants);
  if (config.steps < kMinShootingSteps)
    throw ValidationError("numerov: steps must be at least " + std::to_string(kMinShootingSteps));
  if (!std::isfinite(config.energy_lo) || !std::isfinite(config.energy_hi) ||
      !(config.energy_lo < config.energy_hi))
    throw ValidationError("numerov: energy bracket must satisfy lo < hi");
  const double needed = pot.outer_turning_point(config.energy_hi, constants.mass) +
                        5.0 * decay_length(pot, constants, config.energy_hi);
  if (!(config.x_max >= needed))
    throw ValidationError("numerov: x_max " + std::to_string(config.x_max) +
                          " is short of the turning point plus 5 decay lengths (" +
                          std::to_string(needed) + ")");
}

namespace {

// Shared integrator; fills `samples` with psi at x_i = i h when given.
ShootProfile integrate(const PotentialSpec& pot, PhysicalConstants constants,
                       const ShootingConfig& config, double energy, std::vector<double>* samples) {
  validate_config(config, pot, constants);
  const double h = config.x_max / static_cast<double>(config.steps);
  const double h12 = h * h / 12.0;
  const double k = 2.0 * constants.mass / (constants.hbar * constants.hbar);
  auto f = [&](std::size_t i) { return k * (pot.value(h * static_cast<double>(i), constants.mass) - energy); };

  double f_prev = f(0);
  double f_cur = f(1);
  double psi_prev;
  double psi_cur;
  if (config.parity == ChannelParity::even) {
    psi_prev = 1.0;
    // Mirror symmetry psi(-h) = psi(h) closes the first Numerov step.
    psi_cur = psi_prev * (1.0 + 5.0 * h12 * f_prev) / (1.0 - h12 * f_cur);
  } else {
    psi_prev = 0.0;
    psi_cur = h * (1.0 + f_prev * h * h / 6.0);
  }

  if (samples) {
    samples->clear();
    samples->reserve(config.steps + 1);
    samples->push_back(psi_prev);
    samples->push_back(psi_cur);
  }

  constexpr double kRescaleAbove = 1e150;
  double peak = std::max(std::abs(psi_prev), std::abs(psi_cur));
  std::size_t nodes = 0;
  for (std::size_t i = 1; i < config.steps; ++i) {
    const double f_next = f(i + 1);
    const double psi_next =
        (2.0 * psi_cur * (1.0 + 5.0 * h12 * f_cur) - psi_prev * (1.0 - h12 * f_prev)) /
        (1.0 - h12 * f_next);
    if (!std::isfinite(psi_next))
      throw NumericalError("numerov: integration overflowed despite rescaling");
    if ((psi_next > 0.0 && psi_cur < 0.0) || (psi_next < 0.0 && psi_cur > 0.0)) ++nodes;
    psi_prev = psi_cur;
    psi_cur = psi_next;
    f_prev = f_cur;
    f_cur = f_next;
    if (samples) samples->push_back(psi_cur);
    peak = std::max(peak, std::abs(psi_cur));
    if (peak > kRescaleAbove) {
      psi_prev /= peak;
      psi_cur /= peak;
      if (samples)
        for (double& v : *samples) v /= peak;
      peak = 1.0;
    }
  }
  if (samples)
    for (double& v : *samples) v /= peak;
  return {psi_cur / peak, nodes};
}

}  // namespace

ShootProfile shoot_profile(const PotentialSpec& pot, PhysicalConstants constants,
                           const ShootingConfig& config, double energy) {
  return integrate(pot, constants, config, energy, nullptr);
}

std::vector<double> shoot_wavefunction(const PotentialSpec& pot, PhysicalConstants constants,
                                       const ShootingConfig& config, double energy) {
  std::vector<double> samples;
  integrate(pot, constants, config, energy, &samples);
  return samples;
}

double shoot(const PotentialSpec& pot, PhysicalConstants constants, const ShootingConfig& config,
             double energy) {
  return shoot_profile(pot, constants, config, energy).tail;
}

double eigenvalue(const PotentialSpec& pot, PhysicalConstants constants,
                  const ShootingConfig& config) {
  double lo = config.energy_lo;
  double hi = config.energy_hi;
  double f_lo = shoot(pot, constants, config, lo);
  const double f_hi = shoot(pot, constants, config, hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo > 0.0) == (f_hi > 0.0))
    throw BracketingError("numerov: no sign change of psi(x_max) on [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = shoot(pot, constants, config, mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

RichardsonEstimate richardson_eigenvalue(const PotentialSpec& pot, PhysicalConstants constants,
                                         const ShootingConfig& config) {
  RichardsonEstimate est;
  ShootingConfig cfg = config;
  est.coarse = eigenvalue(pot, constants, cfg);
  cfg.steps = 2 * config.steps;
  est.fine = eigenvalue(pot, constants, cfg);
  cfg.steps = 4 * config.steps;
  est.finer = eigenvalue(pot, constants, cfg);
  est.extrapolated = (16.0 * est.fine - est.coarse) / 15.0;
  est.extrapolated_finer = (16.0 * est.finer - est.fine) / 15.0;
  return est;
}

namespace {

void collect_levels(const PotentialSpec& pot, PhysicalConstants constants,
                    const ShootingConfig& base, double lo, std::size_t nodes_lo, double hi,
                    std::size_t nodes_hi, int depth, std::vector<double>& out) {
  if (nodes_hi == nodes_lo) return;
  if (nodes_hi < nodes_lo)
    throw NumericalError("numerov: node count decreased with energy; integration is unresolved");
  if (nodes_hi - nodes_lo == 1) {
    ShootingConfig cfg = base;
    cfg.energy_lo = lo;
    cfg.energy_hi = hi;
    out.push_back(eigenvalue(pot, constants, cfg));
    return;
  }
  if (depth >= 40)
    throw NumericalError("numerov: energy grid too coarse; " +
                         std::to_string(nodes_hi - nodes_lo) + " levels in [" +
                         std::to_string(lo) + ", " + std::to_string(hi) + "]");
  const double mid = 0.5 * (lo + hi);
  const auto nodes_mid = shoot_profile(pot, constants, base, mid).nodes;
  collect_levels(pot, constants, base, lo, nodes_lo, mid, nodes_mid, depth + 1, out);
  collect_levels(pot, constants, base, mid, nodes_mid, hi, nodes_hi, depth + 1, out);
}

}  // namespace

std::vector<double> spectrum_below(const PotentialSpec& pot, PhysicalConstants constants,
                                   const ShootingConfig& config_template, double e_cap) {
  check_constants(constants);
  if (!std::isfinite(e_cap)) throw ValidationError("spectrum_below: e_cap must be finite");
  const double x_turn = pot.outer_turning_point(e_cap, constants.mass);
  const double v_min = minimum_potential(pot, constants.mass, std::max(x_turn, 1.0));
  if (e_cap <= v_min) return {};

  std::vector<double> levels;
  for (auto parity : {ChannelParity::even, ChannelParity::odd}) {
    ShootingConfig base = default_shooting_config(pot, constants, v_min, e_cap, parity);
    base.steps = std::max(config_template.steps, kMinShootingSteps);
    base.x_max = std::max(base.x_max, config_template.x_max);

    constexpr int kCells = 64;
    double lo = v_min;
    std::size_t nodes_lo = shoot_profile(pot, constants, base, lo).nodes;
    for (int c = 1; c <= kCells; ++c) {
      const double hi = v_min + (e_cap - v_min) * c / kCells;
      const std::size_t nodes_hi = shoot_profile(pot, constants, base, hi).nodes;
      collect_levels(pot, constants, base, lo, nodes_lo, hi, nodes_hi, 0, levels);
      lo = hi;
      nodes_lo = nodes_hi;
    }
  }
  std::sort(levels.begin(), levels.end());
  return levels;
}

}  // namespace hritz
