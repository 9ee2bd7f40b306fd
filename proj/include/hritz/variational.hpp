#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hritz/basis.hpp"
#include "hritz/eigensolver.hpp"
#include "hritz/operators.hpp"
#include "hritz/spectral.hpp"

namespace hritz {

/// alpha = m omega / hbar, the width that makes the harmonic Hamiltonian
/// matrix diagonal.
double exact_diagonal_alpha(PhysicalConstants constants, double omega);

/// Builds and diagonalizes the dim x dim Hamiltonian at the given alpha.
Spectrum solve_hamiltonian(const PotentialSpec& pot, PhysicalConstants constants, double alpha,
                           std::size_t dim);

struct AlphaScanResult {
  std::vector<double> alphas;
  std::vector<std::vector<double>> energies;  // one ascending spectrum per alpha
  double argmin_alpha = 0.0;                  // grid minimizer of the ground level
  std::size_t dim = 0;
};

/// Full spectrum at every alpha of a strictly ascending positive grid. Solves
/// run concurrently; results keep the grid order. A failed solve is rethrown
/// as ConvergenceError naming the alpha.
AlphaScanResult scan_alpha(const PotentialSpec& pot, PhysicalConstants constants, std::size_t dim,
                           std::span<const double> alphas);

struct AlphaObjective {
  enum class Kind { ground_state, lowest_sum };
  Kind kind = Kind::ground_state;
  std::size_t levels = 1;  // lowest_sum only
};

struct AlphaMinimum {
  double alpha_star = 0.0;
  double energy = 0.0;     // ground level at alpha_star
  double objective = 0.0;  // objective value at alpha_star
  bool boundary = false;   // search collapsed onto an end of the bracket
  std::size_t evaluations = 0;
};

/// Golden-section search for the alpha minimizing the objective on
/// [lo, hi]. Objective values closer than the eigensolver's rounding level
/// are ordered by the next eigenvalues in turn, which keeps the search
/// well-defined where the ground level has converged to machine precision.
AlphaMinimum minimize_alpha(const PotentialSpec& pot, PhysicalConstants constants,
                            std::size_t dim, double lo, double hi, AlphaObjective objective = {});

/// Spectra at fixed alpha for each (strictly ascending) dimension.
ConvergenceTable convergence_table(const PotentialSpec& pot, PhysicalConstants constants,
                                   double alpha, std::span<const std::size_t> dims);

}  // namespace hritz
