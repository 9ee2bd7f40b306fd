#pragma once

// Reference computations used only by tests. Nothing here calls into the
// code paths it is used to check.

#include <cmath>
#include <cstddef>
#include <algorithm>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include "hritz/matrix.hpp"

namespace hritz::testing {

/// H_n(y) from its explicit power series
/// n! sum_m (-1)^m (2y)^(n-2m) / (m! (n-2m)!).
inline double hermite_series(int n, double y) {
  double sum = 0.0;
  for (int m = 0; 2 * m <= n; ++m) {
    const double term = std::exp(std::lgamma(n + 1.0) - std::lgamma(m + 1.0) -
                                 std::lgamma(n - 2.0 * m + 1.0)) *
                        std::pow(2.0 * y, n - 2 * m);
    sum += (m % 2 == 0 ? 1.0 : -1.0) * term;
  }
  return sum;
}

/// Sum of the absolute terms of the same series.
inline double hermite_series_abs(int n, double y) {
  double sum = 0.0;
  for (int m = 0; 2 * m <= n; ++m)
    sum += std::exp(std::lgamma(n + 1.0) - std::lgamma(m + 1.0) - std::lgamma(n - 2.0 * m + 1.0)) *
           std::pow(2.0 * std::abs(y), n - 2 * m);
  return sum;
}

/// phi_r(x) = A_r exp(-alpha x^2 / 2) H_r(x sqrt(alpha)), A_r^2 = sqrt(alpha/pi) / (2^r r!).
inline double basis_direct(double alpha, int r, double x) {
  const double log_a2 = 0.5 * std::log(alpha / std::numbers::pi) - r * std::log(2.0) -
                        std::lgamma(r + 1.0);
  return std::exp(0.5 * log_a2 - 0.5 * alpha * x * x) * hermite_series(r, x * std::sqrt(alpha));
}

/// Rounding scale of basis_direct: the same product with the absolute series.
inline double basis_direct_scale(double alpha, int r, double x) {
  const double log_a2 = 0.5 * std::log(alpha / std::numbers::pi) - r * std::log(2.0) -
                        std::lgamma(r + 1.0);
  return std::exp(0.5 * log_a2 - 0.5 * alpha * x * x) * hermite_series_abs(r, x * std::sqrt(alpha));
}

inline double central_difference(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

/// Composite trapezoid rule on [-half, half]; spectrally accurate for
/// smooth integrands that decay to negligible values at the ends.
inline double trapezoid(const std::function<double(double)>& f, double half, int intervals) {
  const double h = 2.0 * half / intervals;
  double s = 0.5 * (f(-half) + f(half));
  for (int i = 1; i < intervals; ++i) s += f(-half + i * h);
  return s * h;
}

/// det(a - lambda I) by the Leibniz expansion; meant for n <= 4.
inline double characteristic_polynomial(const DenseMatrix& a, double lambda) {
  const std::size_t n = a.size();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  double det = 0.0;
  do {
    double term = 1.0;
    for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]) - (i == perm[i] ? lambda : 0.0);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    det += inversions % 2 == 0 ? term : -term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Roots of the characteristic polynomial: sign changes on a fine scan of
/// the Gershgorin interval, each refined by bisection. Returns fewer than n
/// values if two roots share a scan cell.
inline std::vector<double> characteristic_roots(const DenseMatrix& a, std::size_t cells = 20000) {
  const std::size_t n = a.size();
  double lo = 0.0, hi = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double radius = 0.0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) radius += std::abs(a(i, j));
    lo = std::min(lo, a(i, i) - radius);
    hi = std::max(hi, a(i, i) + radius);
  }
  lo -= 1e-3;
  hi += 1e-3;
  auto p = [&](double x) { return characteristic_polynomial(a, x); };
  std::vector<double> roots;
  double x0 = lo, p0 = p(lo);
  for (std::size_t c = 1; c <= cells; ++c) {
    const double x1 = lo + (hi - lo) * static_cast<double>(c) / static_cast<double>(cells);
    const double p1 = p(x1);
    if (p0 == 0.0) {
      roots.push_back(x0);
    } else if ((p0 > 0.0) != (p1 > 0.0) && p1 != 0.0) {
      double l = x0, h = x1, pl = p0;
      for (int it = 0; it < 200 && h - l > 1e-15 * (1.0 + std::abs(l)); ++it) {
        const double m = 0.5 * (l + h);
        const double pm = p(m);
        if ((pm > 0.0) == (pl > 0.0)) {
          l = m;
          pl = pm;
        } else {
          h = m;
        }
      }
      roots.push_back(0.5 * (l + h));
    }
    x0 = x1;
    p0 = p1;
  }
  return roots;
}

inline DenseMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  DenseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = u(rng);
  return a;
}

}  // namespace hritz::testing
