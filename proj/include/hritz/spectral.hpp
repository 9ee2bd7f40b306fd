#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hritz/basis.hpp"
#include "hritz/operators.hpp"

namespace hritz {

/// Ascending eigenvalue lists from successively larger truncations of the
/// same Hamiltonian (same basis parameter, constants and potential).
struct ConvergenceTable {
  std::vector<std::size_t> dims;
  std::vector<std::vector<double>> spectra;
  double alpha;
  PhysicalConstants constants;
  PotentialSpec potential;

  /// Throws ValidationError unless dims are strictly increasing and spectra[k]
  /// is an ascending list of dims[k] finite values.
  void validate() const;
};

/// Tolerance used by every comparison in check_mhu.
inline double mhu_tolerance(double eigenvalue) { return 1e-10 * (1.0 + std::abs(eigenvalue)); }

enum class MhuCheck { monotonicity, interlacing, upper_bound };

std::string to_string(MhuCheck check);

struct MhuViolation {
  MhuCheck check;
  std::size_t level;      // eigenvalue index i
  std::size_t dim;        // truncation whose eigenvalue is out of place
  std::size_t reference;  // truncation (or exact level) it was compared with
  double slack;           // amount by which the inequality fails, > 0
};

struct MhuReport {
  bool monotonicity = true;
  bool interlacing = true;
  std::optional<bool> upper_bound;  // empty when no exact values were given
  std::vector<MhuViolation> violations;
  std::size_t comparisons = 0;

  bool pass() const { return monotonicity && interlacing && upper_bound.value_or(true); }
};

/// For consecutive table entries n < n' (gap g = n' - n) checks
///   monotonicity  e_i(n') <= e_i(n)
///   interlacing   e_i(n') <= e_i(n) <= e_{i+g}(n')
/// and, with exact levels E, the bound e_i(n) >= E_i for every truncation.
/// All comparisons use mhu_tolerance.
MhuReport check_mhu(const ConvergenceTable& table,
                    std::optional<std::span<const double>> exact = std::nullopt);

inline constexpr double kDefaultAmplitudeFloor = 1e-8;

struct WavefunctionSamples {
  std::vector<double> grid;
  std::vector<double> values;
  std::size_t node_count = 0;
};

/// Sign changes between consecutive samples whose magnitude exceeds
/// amplitude_floor * max|psi|. Samples under the floor (tails, exact zeros)
/// are skipped. Throws DegenerateInputError when every sample is under it.
std::size_t count_nodes(std::span<const double> values,
                        double amplitude_floor = kDefaultAmplitudeFloor);

/// Positions of the nodes counted by count_nodes, by linear interpolation
/// between the bracketing samples (exact grid zeros are reported as is).
std::vector<double> locate_nodes(std::span<const double> grid, std::span<const double> values,
                                 double amplitude_floor = kDefaultAmplitudeFloor);

/// psi(x) = sum_r coeffs[r] phi_r(x) on the grid. An identically zero
/// expansion reports zero nodes.
WavefunctionSamples reconstruct(const BasisSpec& spec, std::span<const double> coeffs,
                                std::span<const double> grid,
                                double amplitude_floor = kDefaultAmplitudeFloor);

inline constexpr std::size_t kNodeGridPoints = 2001;

/// Uniform grid over |x| <= x_turn + 5 / sqrt(alpha), where x_turn is the
/// outer classical turning point at the given energy.
std::vector<double> node_grid(const BasisSpec& spec, const PotentialSpec& pot, double energy,
                              std::size_t points = kNodeGridPoints);

enum class Parity { even, odd, mixed };

/// even if every odd-index |c_r| <= tol * ||c||_2, odd if every even-index one
/// is, mixed otherwise. Throws DegenerateInputError for a zero vector.
Parity parity_classify(std::span<const double> coeffs, double tol);

/// "e", "o" or "m".
const char* parity_symbol(Parity p);

}  // namespace hritz
