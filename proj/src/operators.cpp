#include "hritz/operators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hritz/errors.hpp"

namespace hritz {

PotentialSpec PotentialSpec::harmonic(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega))
    throw ValidationError("harmonic potential: omega must be positive");
  PotentialSpec p;
  p.kind_ = PotentialKind::harmonic;
  p.omega_ = omega;
  return p;
}

PotentialSpec PotentialSpec::quartic(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw ValidationError("quartic potential: lambda must be positive");
  PotentialSpec p;
  p.kind_ = PotentialKind::quartic;
  p.lambda_ = lambda;
  return p;
}

PotentialSpec PotentialSpec::even_polynomial(std::vector<double> coeffs) {
  for (double c : coeffs)
    if (!std::isfinite(c)) throw ValidationError("even polynomial: non-finite coefficient");
  auto last = std::find_if(coeffs.rbegin(), coeffs.rend(), [](double c) { return c != 0.0; });
  if (last == coeffs.rend())
    throw ValidationError("even polynomial: at least one coefficient must be nonzero");
  const auto top = static_cast<std::size_t>(coeffs.rend() - last) - 1;
  if (top == 0 || coeffs[top] < 0.0)
    throw ValidationError("even polynomial: potential is not confining "
                          "(leading coefficient must be positive with degree >= 2)");
  coeffs.resize(top + 1);
  PotentialSpec p;
  p.kind_ = PotentialKind::even_polynomial;
  p.coeffs_ = std::move(coeffs);
  return p;
}

std::size_t PotentialSpec::degree() const {
  switch (kind_) {
    case PotentialKind::harmonic: return 2;
    case PotentialKind::quartic: return 4;
    case PotentialKind::even_polynomial: return 2 * (coeffs_.size() - 1);
  }
  return 0;
}

std::vector<double> PotentialSpec::even_coefficients(double mass) const {
  switch (kind_) {
    case PotentialKind::harmonic: return {0.0, 0.5 * mass * omega_ * omega_};
    case PotentialKind::quartic: return {0.0, 0.0, lambda_};
    case PotentialKind::even_polynomial: return coeffs_;
  }
  return {};
}

double PotentialSpec::value(double x, double mass) const {
  const double x2 = x * x;
  switch (kind_) {
    case PotentialKind::harmonic: return 0.5 * mass * omega_ * omega_ * x2;
    case PotentialKind::quartic: return lambda_ * x2 * x2;
    case PotentialKind::even_polynomial: {
      double v = 0.0;
      for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * x2 + *it;
      return v;
    }
  }
  return 0.0;
}

double PotentialSpec::outer_turning_point(double energy, double mass) const {
  // Grow an upper point past which V stays above the energy; V is dominated
  // by its positive leading term there.
  double hi = 1.0;
  while (value(hi, mass) <= energy || value(2.0 * hi, mass) <= energy) hi *= 2.0;
  // Last point below the energy on a coarse scan, then bisect the crossing.
  constexpr int kScan = 4096;
  double lo = -1.0;
  for (int i = kScan; i >= 0; --i) {
    const double x = hi * static_cast<double>(i) / kScan;
    if (value(x, mass) <= energy) {
      lo = x;
      break;
    }
  }
  if (lo < 0.0) return 0.0;
  double upper = std::min(hi, lo + hi / kScan);
  for (int it = 0; it < 200 && upper - lo > 1e-15 * (1.0 + upper); ++it) {
    const double mid = 0.5 * (lo + upper);
    (value(mid, mass) <= energy ? lo : upper) = mid;
  }
  return 0.5 * (lo + upper);
}

std::string PotentialSpec::name() const {
  std::ostringstream os;
  os.precision(12);
  switch (kind_) {
    case PotentialKind::harmonic: os << "harmonic(omega=" << omega_ << ")"; break;
    case PotentialKind::quartic: os << "quartic(lambda=" << lambda_ << ")"; break;
    case PotentialKind::even_polynomial: {
      os << "even_polynomial(";
      for (std::size_t k = 0; k < coeffs_.size(); ++k) os << (k ? "," : "") << coeffs_[k];
      os << ")";
      break;
    }
  }
  return os.str();
}

BandedSymMatrix kinetic_matrix(const BasisSpec& spec, std::size_t dim) {
  if (dim == 0) throw ValidationError("kinetic_matrix: dim must be positive");
  check_basis_index(dim - 1);
  const double scale = spec.alpha() * spec.hbar() * spec.hbar() / (4.0 * spec.mass());
  BandedSymMatrix t(dim, 2);
  auto diag = t.band(0);
  for (std::size_t r = 0; r < dim; ++r) diag[r] = scale * (2.0 * r + 1.0);
  if (dim > 2) {
    auto b2 = t.band(2);
    for (std::size_t r = 0; r + 2 < dim; ++r)
      b2[r] = -scale * std::sqrt((r + 1.0) * (r + 2.0));
  }
  return t;
}

namespace {

BandedSymMatrix harmonic_potential(const BasisSpec& spec, double omega, std::size_t dim) {
  const double scale = spec.mass() * omega * omega / (4.0 * spec.alpha());
  BandedSymMatrix v(dim, 2);
  auto diag = v.band(0);
  for (std::size_t r = 0; r < dim; ++r) diag[r] = scale * (2.0 * r + 1.0);
  if (dim > 2) {
    auto b2 = v.band(2);
    for (std::size_t r = 0; r + 2 < dim; ++r) b2[r] = scale * std::sqrt((r + 1.0) * (r + 2.0));
  }
  return v;
}

BandedSymMatrix quartic_potential(const BasisSpec& spec, double lambda, std::size_t dim,
                                  QuarticBand4 band4) {
  const double a2 = spec.alpha() * spec.alpha();
  BandedSymMatrix v(dim, 4);
  auto diag = v.band(0);
  for (std::size_t r = 0; r < dim; ++r) {
    const double rr = static_cast<double>(r);
    diag[r] = 3.0 * lambda / (4.0 * a2) * (2.0 * rr * rr + 2.0 * rr + 1.0);
  }
  if (dim > 2) {
    auto b2 = v.band(2);
    for (std::size_t r = 0; r + 2 < dim; ++r) {
      const double rr = static_cast<double>(r);
      b2[r] = (2.0 * rr + 3.0) * lambda / (2.0 * a2) * std::sqrt((rr + 1.0) * (rr + 2.0));
    }
  }
  if (dim > 4) {
    auto b4 = v.band(4);
    for (std::size_t r = 0; r + 4 < dim; ++r) {
      const double rr = static_cast<double>(r);
      if (band4 == QuarticBand4::corrected) {
        b4[r] = lambda / (4.0 * a2) * std::sqrt((rr + 1.0) * (rr + 2.0) * (rr + 3.0) * (rr + 4.0));
      } else {
        b4[r] = lambda / (4.0 * a2) *
                (std::sqrt((rr - 1.0) * rr * (rr + 5.0) * (rr + 6.0)) +
                 std::sqrt((rr - 5.0) * (rr - 4.0) * (rr + 1.0) * (rr + 2.0)));
      }
    }
  }
  return v;
}

}  // namespace

BandedSymMatrix polynomial_matrix(const BasisSpec& spec, const std::vector<double>& coeffs,
                                  std::size_t dim) {
  if (dim == 0) throw ValidationError("polynomial_matrix: dim must be positive");
  check_basis_index(dim - 1);
  if (coeffs.empty()) return BandedSymMatrix(dim, 0);

  const std::size_t top = coeffs.size() - 1;
  // Paths of 2*top ladder steps between indices below dim never climb past
  // dim - 1 + top, so this enlarged space makes the truncation exact.
  const std::size_t n = dim + top;
  const double inv = 1.0 / std::sqrt(2.0 * spec.alpha());
  std::vector<double> up(n), down(n);
  for (std::size_t i = 0; i < n; ++i) {
    up[i] = std::sqrt(i + 1.0) * inv;  // <i+1| x |i>
    down[i] = std::sqrt(static_cast<double>(i)) * inv;  // <i-1| x |i>
  }

  BandedSymMatrix out(dim, 2 * top);
  std::vector<double> v(n), next(n);
  for (std::size_t s = 0; s < dim; ++s) {
    std::fill(v.begin(), v.end(), 0.0);
    v[s] = 1.0;
    std::vector<double> column(dim, 0.0);
    for (std::size_t k = 0; k <= top; ++k) {
      if (k > 0) {
        for (int step = 0; step < 2; ++step) {
          std::fill(next.begin(), next.end(), 0.0);
          for (std::size_t i = 0; i < n; ++i) {
            if (v[i] == 0.0) continue;
            if (i + 1 < n) next[i + 1] += up[i] * v[i];
            if (i > 0) next[i - 1] += down[i] * v[i];
          }
          std::swap(v, next);
        }
      }
      if (coeffs[k] != 0.0)
        for (std::size_t r = 0; r < dim; ++r) column[r] += coeffs[k] * v[r];
    }
    for (std::size_t r = 0; r <= s; ++r)
      if (s - r <= out.bandwidth()) out.band(s - r)[r] = column[r];
  }
  return out;
}

BandedSymMatrix potential_matrix(const BasisSpec& spec, const PotentialSpec& pot,
                                 std::size_t dim, QuarticBand4 band4) {
  if (dim == 0) throw ValidationError("potential_matrix: dim must be positive");
  check_basis_index(dim - 1);
  switch (pot.kind()) {
    case PotentialKind::harmonic: return harmonic_potential(spec, pot.omega(), dim);
    case PotentialKind::quartic: return quartic_potential(spec, pot.lambda(), dim, band4);
    case PotentialKind::even_polynomial: return polynomial_matrix(spec, pot.coeffs(), dim);
  }
  throw ValidationError("potential_matrix: unknown potential kind");
}

BandedSymMatrix hamiltonian_matrix(const BasisSpec& spec, const PotentialSpec& pot,
                                   std::size_t dim, QuarticBand4 band4) {
  return kinetic_matrix(spec, dim) + potential_matrix(spec, pot, dim, band4);
}

}  // namespace hritz
