#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hritz/basis.hpp"
#include "hritz/matrix.hpp"

namespace hritz {

enum class PotentialKind { harmonic, quartic, even_polynomial };

/// An even, confining potential V(x):
///   harmonic         V = m omega^2 x^2 / 2
///   quartic          V = lambda x^4
///   even_polynomial  V = sum_k c_k x^(2k)
class PotentialSpec {
 public:
  static PotentialSpec harmonic(double omega);
  static PotentialSpec quartic(double lambda);
  /// coeffs[k] multiplies x^(2k). The highest nonzero coefficient must be
  /// positive and have k >= 1.
  static PotentialSpec even_polynomial(std::vector<double> coeffs);

  PotentialKind kind() const noexcept { return kind_; }
  double omega() const noexcept { return omega_; }
  double lambda() const noexcept { return lambda_; }
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }

  /// Polynomial degree in x (2, 4 or 2K).
  std::size_t degree() const;

  /// Coefficients of x^(2k) with the mass folded in.
  std::vector<double> even_coefficients(double mass) const;

  double value(double x, double mass) const;

  /// Smallest x >= 0 beyond which V(x) > energy everywhere.
  double outer_turning_point(double energy, double mass) const;

  std::string name() const;

 private:
  PotentialSpec() = default;

  PotentialKind kind_ = PotentialKind::harmonic;
  double omega_ = 0.0;
  double lambda_ = 0.0;
  std::vector<double> coeffs_;
};

/// Which expression fills the fourth band of the quartic potential matrix.
/// `printed` reproduces the historically typeset form (both terms attached to
/// (r, r+4)); it exists only to demonstrate that it disagrees with quadrature.
enum class QuarticBand4 { corrected, printed };

/// T_rr = (alpha hbar^2 / 4m)(2r+1), T_{r,r+2} = -(alpha hbar^2 / 4m) sqrt((r+1)(r+2)).
BandedSymMatrix kinetic_matrix(const BasisSpec& spec, std::size_t dim);

BandedSymMatrix potential_matrix(const BasisSpec& spec, const PotentialSpec& pot,
                                 std::size_t dim,
                                 QuarticBand4 band4 = QuarticBand4::corrected);

/// Kinetic plus potential matrix, entrywise.
BandedSymMatrix hamiltonian_matrix(const BasisSpec& spec, const PotentialSpec& pot,
                                   std::size_t dim,
                                   QuarticBand4 band4 = QuarticBand4::corrected);

/// Matrix of sum_k c_k x^(2k) obtained by repeated application of the
/// tridiagonal position operator in an enlarged basis, then truncated.
BandedSymMatrix polynomial_matrix(const BasisSpec& spec, const std::vector<double>& coeffs,
                                  std::size_t dim);

}  // namespace hritz
