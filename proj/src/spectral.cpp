#include "hritz/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hritz/errors.hpp"

namespace hritz {

void ConvergenceTable::validate() const {
  if (dims.empty()) throw ValidationError("convergence table: no truncations");
  if (dims.size() != spectra.size())
    throw ValidationError("convergence table: dims and spectra differ in length");
  for (std::size_t k = 0; k < dims.size(); ++k) {
    if (dims[k] == 0) throw ValidationError("convergence table: zero dimension");
    if (k > 0 && dims[k] <= dims[k - 1])
      throw ValidationError("convergence table: dims must be strictly increasing");
    if (spectra[k].size() != dims[k])
      throw ValidationError("convergence table: spectrum " + std::to_string(k) + " has " +
                            std::to_string(spectra[k].size()) + " values for dim " +
                            std::to_string(dims[k]));
    for (std::size_t i = 0; i < spectra[k].size(); ++i) {
      if (!std::isfinite(spectra[k][i]))
        throw ValidationError("convergence table: non-finite eigenvalue");
      if (i > 0 && spectra[k][i] < spectra[k][i - 1])
        throw ValidationError("convergence table: spectrum " + std::to_string(k) +
                              " is not ascending");
    }
  }
}

std::string to_string(MhuCheck check) {
  switch (check) {
    case MhuCheck::monotonicity: return "monotonicity";
    case MhuCheck::interlacing: return "interlacing";
    case MhuCheck::upper_bound: return "upper_bound";
  }
  return "unknown";
}

MhuReport check_mhu(const ConvergenceTable& table, std::optional<std::span<const double>> exact) {
  table.validate();
  MhuReport report;

  // `lhs <= rhs` up to tolerance; records a violation otherwise.
  auto expect_le = [&](double lhs, double rhs, MhuCheck check, std::size_t level,
                       std::size_t dim, std::size_t reference) {
    ++report.comparisons;
    const double slack = lhs - rhs;
    if (slack <= mhu_tolerance(std::max(std::abs(lhs), std::abs(rhs)))) return true;
    report.violations.push_back({check, level, dim, reference, slack});
    return false;
  };

  for (std::size_t k = 0; k + 1 < table.dims.size(); ++k) {
    const auto& small = table.spectra[k];
    const auto& large = table.spectra[k + 1];
    const std::size_t n = table.dims[k];
    const std::size_t n_next = table.dims[k + 1];
    const std::size_t gap = n_next - n;
    for (std::size_t i = 0; i < n; ++i) {
      // The lower half of the interlacing inequality is the monotonicity check.
      if (!expect_le(large[i], small[i], MhuCheck::monotonicity, i, n_next, n)) {
        report.monotonicity = false;
        report.interlacing = false;
      }
      if (!expect_le(small[i], large[i + gap], MhuCheck::interlacing, i, n, n_next))
        report.interlacing = false;
    }
  }

  if (exact) {
    bool ok = true;
    for (std::size_t k = 0; k < table.dims.size(); ++k) {
      const auto& eps = table.spectra[k];
      const std::size_t levels = std::min(eps.size(), exact->size());
      for (std::size_t i = 0; i < levels; ++i)
        if (!expect_le((*exact)[i], eps[i], MhuCheck::upper_bound, i, table.dims[k], i))
          ok = false;
    }
    report.upper_bound = ok;
  }
  return report;
}

std::size_t count_nodes(std::span<const double> values, double amplitude_floor) {
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  const double floor = amplitude_floor * peak;
  int last_sign = 0;
  std::size_t nodes = 0;
  bool any = false;
  for (double v : values) {
    if (!(std::abs(v) > floor) || v == 0.0) continue;
    any = true;
    const int sign = v > 0.0 ? 1 : -1;
    if (last_sign != 0 && sign != last_sign) ++nodes;
    last_sign = sign;
  }
  if (!any) throw DegenerateInputError("count_nodes: every sample is below the amplitude floor");
  return nodes;
}

std::vector<double> locate_nodes(std::span<const double> grid, std::span<const double> values,
                                 double amplitude_floor) {
  if (grid.size() != values.size())
    throw ValidationError("locate_nodes: grid and values differ in length");
  double peak = 0.0;
  for (double v : values) peak = std::max(peak, std::abs(v));
  const double floor = amplitude_floor * peak;

  std::vector<double> nodes;
  std::size_t last = values.size();
  for (std::size_t j = 0; j < values.size(); ++j) {
    const double v = values[j];
    if (!(std::abs(v) > floor) || v == 0.0) continue;
    if (last != values.size() && (v > 0.0) != (values[last] > 0.0)) {
      // Prefer an exact zero sample between the two, else interpolate.
      double pos = grid[last] - values[last] * (grid[j] - grid[last]) / (v - values[last]);
      for (std::size_t m = last + 1; m < j; ++m)
        if (values[m] == 0.0) {
          pos = grid[m];
          break;
        }
      nodes.push_back(pos);
    }
    last = j;
  }
  return nodes;
}

WavefunctionSamples reconstruct(const BasisSpec& spec, std::span<const double> coeffs,
                                std::span<const double> grid, double amplitude_floor) {
  for (double c : coeffs)
    if (!std::isfinite(c)) throw ValidationError("reconstruct: non-finite coefficient");
  WavefunctionSamples out;
  out.grid.assign(grid.begin(), grid.end());
  out.values.resize(grid.size(), 0.0);
  if (coeffs.empty()) return out;

  bool nonzero = false;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const auto phi = basis_values(spec, coeffs.size(), grid[j]);
    double psi = 0.0;
    for (std::size_t r = 0; r < coeffs.size(); ++r) psi += coeffs[r] * phi[r];
    out.values[j] = psi;
    nonzero = nonzero || psi != 0.0;
  }
  out.node_count = nonzero ? count_nodes(out.values, amplitude_floor) : 0;
  return out;
}

std::vector<double> node_grid(const BasisSpec& spec, const PotentialSpec& pot, double energy,
                              std::size_t points) {
  if (points < 2) throw ValidationError("node_grid: need at least two points");
  const double half = pot.outer_turning_point(energy, spec.mass()) + 5.0 / std::sqrt(spec.alpha());
  std::vector<double> grid(points);
  for (std::size_t j = 0; j < points; ++j)
    grid[j] = -half + 2.0 * half * static_cast<double>(j) / static_cast<double>(points - 1);
  if (points % 2 == 1) grid[points / 2] = 0.0;
  return grid;
}

Parity parity_classify(std::span<const double> coeffs, double tol) {
  double norm2 = 0.0;
  double even_max = 0.0;
  double odd_max = 0.0;
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    norm2 += coeffs[r] * coeffs[r];
    double& side = r % 2 == 0 ? even_max : odd_max;
    side = std::max(side, std::abs(coeffs[r]));
  }
  if (norm2 == 0.0) throw DegenerateInputError("parity_classify: zero coefficient vector");
  const double limit = tol * std::sqrt(norm2);
  if (odd_max <= limit) return Parity::even;
  if (even_max <= limit) return Parity::odd;
  return Parity::mixed;
}

const char* parity_symbol(Parity p) {
  switch (p) {
    case Parity::even: return "e";
    case Parity::odd: return "o";
    case Parity::mixed: return "m";
  }
  return "?";
}

}  // namespace hritz
