#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hritz/matrix.hpp"

namespace hritz {

/// Full eigen-decomposition of a real symmetric matrix.
///
/// Eigenvalues are ascending. Column j of `eigenvectors` is the unit
/// eigenvector for eigenvalue j, signed so that its largest-magnitude
/// component is positive. Within a numerically degenerate cluster the
/// vectors are orthonormal but otherwise arbitrary.
struct SymmetricEigenResult {
  std::vector<double> eigenvalues;
  DenseMatrix eigenvectors;
  /// max_i || A v_i - lambda_i v_i ||_2 against the input matrix.
  double residual_norm = 0.0;

  std::size_t size() const noexcept { return eigenvalues.size(); }
  std::vector<double> eigenvector(std::size_t j) const;
};

/// Eigen-decomposition of a truncated Hamiltonian; same object under the
/// name used by the spectral tools.
using Spectrum = SymmetricEigenResult;

/// Householder reduction to tridiagonal form, then implicit-shift QL.
/// Throws ConvergenceError after 30 * dim QL sweeps and NumericalError if the
/// final residual exceeds 1e-10 * (1 + ||A||_inf). A dense input must be
/// exactly symmetric (ValidationError otherwise).
SymmetricEigenResult eigh(const BandedSymMatrix& m);
SymmetricEigenResult eigh(const DenseMatrix& a);

/// Symmetric tridiagonal matrix with the given diagonal and off-diagonal
/// (off-diagonal is one shorter).
SymmetricEigenResult eigh_tridiagonal(std::span<const double> diag,
                                      std::span<const double> offdiag);

}  // namespace hritz
