#include "hritz/basis.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hritz/errors.hpp"

namespace hritz {

BasisSpec::BasisSpec(double alpha, double hbar, double mass)
    : alpha_(alpha), hbar_(hbar), mass_(mass) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw ValidationError("basis: alpha must be a positive finite number");
  if (!(hbar > 0.0) || !std::isfinite(hbar))
    throw ValidationError("basis: hbar must be a positive finite number");
  if (!(mass > 0.0) || !std::isfinite(mass))
    throw ValidationError("basis: mass must be a positive finite number");
}

BasisSpec::BasisSpec(double alpha, PhysicalConstants constants)
    : BasisSpec(alpha, constants.hbar, constants.mass) {}

void check_basis_index(std::size_t r) {
  if (r >= kMaxBasisIndex)
    throw RangeError("basis index " + std::to_string(r) + " exceeds cap " +
                     std::to_string(kMaxBasisIndex));
}

double hermite_eval(std::size_t s, double y) {
  if (s > kMaxHermiteDegree)
    throw RangeError("hermite_eval: degree " + std::to_string(s) +
                     " above unnormalized cap " + std::to_string(kMaxHermiteDegree));
  double prev = 1.0;
  if (s == 0) return prev;
  double cur = 2.0 * y;
  for (std::size_t k = 1; k < s; ++k) {
    const double next = 2.0 * y * cur - 2.0 * static_cast<double>(k) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

namespace {

// Normalized recurrence phi_{r+1} = (x sqrt(2a) phi_r - sqrt(r) phi_{r-1}) / sqrt(r+1).
std::vector<double> recur(double alpha, std::size_t count, double x) {
  std::vector<double> phi(count);
  const double scaled = x * std::sqrt(2.0 * alpha);
  phi[0] = std::pow(alpha / std::numbers::pi, 0.25) * std::exp(-0.5 * alpha * x * x);
  if (count > 1) phi[1] = scaled * phi[0];
  for (std::size_t r = 1; r + 1 < count; ++r) {
    const double rr = static_cast<double>(r);
    phi[r + 1] = (scaled * phi[r] - std::sqrt(rr) * phi[r - 1]) / std::sqrt(rr + 1.0);
  }
  return phi;
}

}  // namespace

std::vector<double> basis_values(const BasisSpec& spec, std::size_t count, double x) {
  if (count == 0) return {};
  check_basis_index(count - 1);
  return recur(spec.alpha(), count, x);
}

double basis_value(const BasisSpec& spec, std::size_t r, double x) {
  check_basis_index(r);
  return recur(spec.alpha(), r + 1, x)[r];
}

double basis_derivative(const BasisSpec& spec, std::size_t r, double x) {
  check_basis_index(r);
  // phi_{r+1} may sit one past the cap; the recurrence itself has no limit.
  const auto phi = recur(spec.alpha(), r + 2, x);
  const double rr = static_cast<double>(r);
  const double lower = r == 0 ? 0.0 : std::sqrt(rr) * phi[r - 1];
  return 0.5 * std::sqrt(2.0 * spec.alpha()) * (lower - std::sqrt(rr + 1.0) * phi[r + 1]);
}

LadderCoefficients x_recurrence_coeffs(std::size_t r, double alpha) {
  if (!(alpha > 0.0)) throw ValidationError("x_recurrence_coeffs: alpha must be positive");
  const double rr = static_cast<double>(r);
  const double scale = std::sqrt(2.0 * alpha);
  return {std::sqrt(rr + 1.0) / scale, std::sqrt(rr) / scale};
}

}  // namespace hritz
