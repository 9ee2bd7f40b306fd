#include "hritz/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "hritz/errors.hpp"

namespace hritz {

std::vector<double> SymmetricEigenResult::eigenvector(std::size_t j) const {
  const std::size_t n = eigenvectors.size();
  std::vector<double> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = eigenvectors(k, j);
  return v;
}

namespace {

// Householder tridiagonalization of the symmetric matrix held in v. On exit
// v holds the accumulated orthogonal transform, d the diagonal and e the
// subdiagonal with e[i] coupling rows i-1 and i (e[0] = 0). After the
// Algol procedure tred2 (Bowdler, Martin, Reinsch, Wilkinson).
void tridiagonalize(DenseMatrix& v, std::vector<double>& d, std::vector<double>& e) {
  const std::size_t n = v.size();
  for (std::size_t j = 0; j < n; ++j) d[j] = v(n - 1, j);

  for (std::size_t i = n - 1; i > 0; --i) {
    double scale = 0.0;
    double h = 0.0;
    for (std::size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
    if (scale == 0.0) {
      e[i] = d[i - 1];
      for (std::size_t j = 0; j < i; ++j) {
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
        v(j, i) = 0.0;
      }
    } else {
      for (std::size_t k = 0; k < i; ++k) {
        d[k] /= scale;
        h += d[k] * d[k];
      }
      double f = d[i - 1];
      double g = std::sqrt(h);
      if (f > 0) g = -g;
      e[i] = scale * g;
      h -= f * g;
      d[i - 1] = f - g;
      for (std::size_t j = 0; j < i; ++j) e[j] = 0.0;

      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        v(j, i) = f;
        g = e[j] + v(j, j) * f;
        for (std::size_t k = j + 1; k <= i - 1; ++k) {
          g += v(k, j) * d[k];
          e[k] += v(k, j) * f;
        }
        e[j] = g;
      }
      f = 0.0;
      for (std::size_t j = 0; j < i; ++j) {
        e[j] /= h;
        f += e[j] * d[j];
      }
      const double hh = f / (h + h);
      for (std::size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
      for (std::size_t j = 0; j < i; ++j) {
        f = d[j];
        g = e[j];
        for (std::size_t k = j; k <= i - 1; ++k) v(k, j) -= (f * e[k] + g * d[k]);
        d[j] = v(i - 1, j);
        v(i, j) = 0.0;
      }
    }
    d[i] = h;
  }

  // Accumulate transformations.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    v(n - 1, i) = v(i, i);
    v(i, i) = 1.0;
    const double h = d[i + 1];
    if (h != 0.0) {
      for (std::size_t k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
      for (std::size_t j = 0; j <= i; ++j) {
        double g = 0.0;
        for (std::size_t k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
        for (std::size_t k = 0; k <= i; ++k) v(k, j) -= g * d[k];
      }
    }
    for (std::size_t k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
  }
  for (std::size_t j = 0; j < n; ++j) {
    d[j] = v(n - 1, j);
    v(n - 1, j) = 0.0;
  }
  v(n - 1, n - 1) = 1.0;
  e[0] = 0.0;
}

// Implicit QL iteration with a shift from the leading 2x2 block. d is the
// diagonal, e[i] couples rows i and i+1 (e[n-1] is workspace). Rotations are
// applied to the columns of z.
void implicit_ql(std::vector<double>& d, std::vector<double>& e, DenseMatrix& z) {
  const std::size_t n = d.size();
  if (n == 0) return;
  e[n - 1] = 0.0;
  const std::size_t max_sweeps = 30 * n;
  std::size_t sweeps = 0;

  double f = 0.0;
  double tst1 = 0.0;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }

    if (m > l) {
      do {
        if (++sweeps > max_sweeps)
          throw ConvergenceError("eigensolver: no convergence after " +
                                     std::to_string(max_sweeps) + " QL sweeps (dim " +
                                     std::to_string(n) + ")",
                                 n);
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = std::hypot(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        f += h;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = std::hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
          for (std::size_t k = 0; k < z.size(); ++k) {
            h = z(k, ii + 1);
            z(k, ii + 1) = s * z(k, ii) + c * h;
            z(k, ii) = c * z(k, ii) - s * h;
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

// Sort ascending, fix signs.
SymmetricEigenResult finish(std::vector<double> d, const DenseMatrix& z) {
  const std::size_t n = d.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  SymmetricEigenResult out;
  out.eigenvalues.resize(n);
  out.eigenvectors = DenseMatrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.eigenvalues[j] = d[src];
    std::size_t pivot = 0;
    for (std::size_t k = 1; k < n; ++k)
      if (std::abs(z(k, src)) > std::abs(z(pivot, src))) pivot = k;
    const double sign = z(pivot, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t k = 0; k < n; ++k) out.eigenvectors(k, j) = sign * z(k, src);
  }
  return out;
}

template <class Apply>
double max_residual(const SymmetricEigenResult& res, Apply&& apply) {
  const std::size_t n = res.size();
  double worst = 0.0;
  std::vector<double> v(n), av(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) v[k] = res.eigenvectors(k, j);
    apply(v, av);
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const double d = av[k] - res.eigenvalues[j] * v[k];
      s += d * d;
    }
    worst = std::max(worst, std::sqrt(s));
  }
  return worst;
}

void check_residual(const SymmetricEigenResult& res, double norm_inf) {
  const double limit = 1e-10 * (1.0 + norm_inf);
  if (!(res.residual_norm <= limit))
    throw NumericalError("eigensolver: residual " + std::to_string(res.residual_norm) +
                         " exceeds " + std::to_string(limit));
}

SymmetricEigenResult solve_tridiagonal(std::vector<double> d, std::vector<double> e) {
  const std::size_t n = d.size();
  DenseMatrix z = DenseMatrix::identity(n);
  implicit_ql(d, e, z);
  return finish(std::move(d), z);
}

}  // namespace

SymmetricEigenResult eigh_tridiagonal(std::span<const double> diag,
                                      std::span<const double> offdiag) {
  const std::size_t n = diag.size();
  if (n == 0) throw ValidationError("eigh_tridiagonal: empty matrix");
  if (offdiag.size() + 1 != n)
    throw ValidationError("eigh_tridiagonal: off-diagonal must be one shorter than diagonal");
  for (double x : diag)
    if (!std::isfinite(x)) throw ValidationError("eigh_tridiagonal: non-finite entry");
  for (double x : offdiag)
    if (!std::isfinite(x)) throw ValidationError("eigh_tridiagonal: non-finite entry");

  std::vector<double> e(n, 0.0);
  std::copy(offdiag.begin(), offdiag.end(), e.begin());
  auto res = solve_tridiagonal({diag.begin(), diag.end()}, std::move(e));

  double norm = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double row = std::abs(diag[i]);
    if (i > 0) row += std::abs(offdiag[i - 1]);
    if (i + 1 < n) row += std::abs(offdiag[i]);
    norm = std::max(norm, row);
  }
  res.residual_norm = max_residual(res, [&](const std::vector<double>& v, std::vector<double>& av) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = diag[i] * v[i];
      if (i > 0) s += offdiag[i - 1] * v[i - 1];
      if (i + 1 < n) s += offdiag[i] * v[i + 1];
      av[i] = s;
    }
  });
  check_residual(res, norm);
  return res;
}

SymmetricEigenResult eigh(const DenseMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw ValidationError("eigh: empty matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (double x : a.row(i))
      if (!std::isfinite(x)) throw ValidationError("eigh: non-finite entry");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a(i, j) != a(j, i)) throw ValidationError("eigh: matrix is not symmetric");

  DenseMatrix z = a;
  std::vector<double> d(n), e(n);
  tridiagonalize(z, d, e);
  // Shift to e[i] coupling i and i+1.
  for (std::size_t i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  implicit_ql(d, e, z);
  auto res = finish(std::move(d), z);

  res.residual_norm = max_residual(res, [&](const std::vector<double>& v, std::vector<double>& av) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      const auto row = a.row(i);
      for (std::size_t k = 0; k < n; ++k) s += row[k] * v[k];
      av[i] = s;
    }
  });
  check_residual(res, a.norm_inf());
  return res;
}

SymmetricEigenResult eigh(const BandedSymMatrix& m) {
  if (m.bandwidth() <= 1) {
    const auto diag = m.band(0);
    std::vector<double> off(m.dim() - 1, 0.0);
    if (m.bandwidth() == 1) std::copy(m.band(1).begin(), m.band(1).end(), off.begin());
    return eigh_tridiagonal(diag, off);
  }
  return eigh(m.to_dense());
}

}  // namespace hritz
