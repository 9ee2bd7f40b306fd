#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "hritz/basis.hpp"
#include "hritz/operators.hpp"

namespace hritz {

inline constexpr std::size_t kMaxRuleOrder = 512;

/// Gauss-Hermite rule for the weight exp(-y^2): exact for polynomials of
/// degree <= 2 * order - 1.
struct QuadratureRule {
  std::vector<double> nodes;    // ascending, symmetric about 0
  std::vector<double> weights;  // positive, symmetric, sum sqrt(pi)
  /// weights[i] * exp(nodes[i]^2); zero where the weight underflows.
  std::vector<double> scaled_weights;
  std::size_t order = 0;
};

/// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
/// Hermite recurrence (zero diagonal, off-diagonals sqrt(k/2)), refined by
/// Newton steps. Weights follow from the recurrence at the refined nodes;
/// they equal sqrt(pi) times the squared first eigenvector components, with
/// full relative accuracy down to the smallest weight.
QuadratureRule gauss_hermite_rule(std::size_t order);

using RealFunction = std::function<double(double)>;

/// (f, g) = integral of f(x) g(x) dx for integrands decaying like the squared
/// basis Gaussian exp(-alpha x^2). Throws NumericalError on a non-finite
/// integrand value.
double inner_product(const BasisSpec& spec, const RealFunction& f, const RealFunction& g,
                     const QuadratureRule& rule);

struct ElementPair {
  double kinetic;    // (hbar^2 / 2m) (phi_r', phi_s')
  double potential;  // (phi_r, V phi_s)
};

/// Smallest rule order accepted by element_oracle for (r, s, V).
std::size_t minimum_oracle_order(std::size_t r, std::size_t s, std::size_t degree);
/// Order used when none is given: r + s + deg V + 4.
std::size_t default_oracle_order(std::size_t r, std::size_t s, std::size_t degree);

/// Matrix elements by direct quadrature of their defining integrals.
ElementPair element_oracle(const BasisSpec& spec, const PotentialSpec& pot, std::size_t r,
                           std::size_t s);
ElementPair element_oracle(const BasisSpec& spec, const PotentialSpec& pot, std::size_t r,
                           std::size_t s, const QuadratureRule& rule);

/// -(hbar^2 / 2m) (phi_r, phi_s''), with phi_s'' = (alpha^2 x^2 - alpha (2s+1)) phi_s.
double kinetic_second_derivative_form(const BasisSpec& spec, std::size_t r, std::size_t s,
                                      const QuadratureRule& rule);

struct OracleComparison {
  double max_discrepancy = 0.0;  // over T, V and H entries
  std::size_t worst_r = 0;
  std::size_t worst_s = 0;
  double analytic_value = 0.0;  // H entry at the worst position
  double oracle_value = 0.0;
};

/// Compares every entry (r <= s < dim) of the analytic kinetic, potential and
/// Hamiltonian matrices against element_oracle.
OracleComparison compare_with_oracle(const BasisSpec& spec, const PotentialSpec& pot,
                                     std::size_t dim,
                                     QuarticBand4 band4 = QuarticBand4::corrected);

}  // namespace hritz
