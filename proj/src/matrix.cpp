#include "hritz/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hritz/errors.hpp"

namespace hritz {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double DenseMatrix::norm_inf() const {
  double m = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double s = 0.0;
    for (double v : row(i)) s += std::abs(v);
    m = std::max(m, s);
  }
  return m;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw ValidationError("matrix product: size mismatch");
  const std::size_t n = a.size();
  DenseMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw ValidationError("matrix difference: size mismatch");
  DenseMatrix c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

BandedSymMatrix::BandedSymMatrix(std::size_t dim, std::size_t bandwidth) : dim_(dim) {
  if (dim == 0) throw ValidationError("banded matrix: dim must be positive");
  const std::size_t b = std::min(bandwidth, dim - 1);
  bands_.reserve(b + 1);
  for (std::size_t k = 0; k <= b; ++k) bands_.emplace_back(dim - k, 0.0);
}

BandedSymMatrix BandedSymMatrix::from_bands(std::vector<std::vector<double>> bands) {
  if (bands.empty() || bands.front().empty())
    throw ValidationError("banded matrix: main diagonal must be non-empty");
  const std::size_t dim = bands.front().size();
  if (bands.size() > dim) throw ValidationError("banded matrix: more bands than dim");
  for (std::size_t k = 0; k < bands.size(); ++k) {
    if (bands[k].size() != dim - k)
      throw ValidationError("banded matrix: band " + std::to_string(k) + " has length " +
                            std::to_string(bands[k].size()) + ", expected " +
                            std::to_string(dim - k));
    for (double v : bands[k])
      if (!std::isfinite(v)) throw ValidationError("banded matrix: non-finite entry");
  }
  BandedSymMatrix m(dim, 0);
  m.bands_ = std::move(bands);
  return m;
}

double BandedSymMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw RangeError("banded matrix: index out of range");
  const std::size_t lo = std::min(i, j);
  const std::size_t k = std::max(i, j) - lo;
  return k < bands_.size() ? bands_[k][lo] : 0.0;
}

void BandedSymMatrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= dim_ || j >= dim_) throw RangeError("banded matrix: index out of range");
  const std::size_t lo = std::min(i, j);
  const std::size_t k = std::max(i, j) - lo;
  if (k >= bands_.size()) throw RangeError("banded matrix: entry outside stored band");
  if (!std::isfinite(value)) throw ValidationError("banded matrix: non-finite entry");
  bands_[k][lo] = value;
}

DenseMatrix BandedSymMatrix::to_dense() const {
  DenseMatrix d(dim_);
  for (std::size_t k = 0; k < bands_.size(); ++k)
    for (std::size_t i = 0; i + k < dim_; ++i) {
      d(i, i + k) = bands_[k][i];
      d(i + k, i) = bands_[k][i];
    }
  return d;
}

double BandedSymMatrix::max_abs_off_diagonal() const {
  double m = 0.0;
  for (std::size_t k = 1; k < bands_.size(); ++k)
    for (double v : bands_[k]) m = std::max(m, std::abs(v));
  return m;
}

BandedSymMatrix operator+(const BandedSymMatrix& a, const BandedSymMatrix& b) {
  if (a.dim() != b.dim()) throw ValidationError("banded sum: dimension mismatch");
  BandedSymMatrix c(a.dim(), std::max(a.bandwidth(), b.bandwidth()));
  for (std::size_t k = 0; k <= c.bandwidth(); ++k) {
    auto out = c.band(k);
    for (std::size_t i = 0; i < out.size(); ++i) {
      const double av = k <= a.bandwidth() ? a.band(k)[i] : 0.0;
      const double bv = k <= b.bandwidth() ? b.band(k)[i] : 0.0;
      out[i] = av + bv;
    }
  }
  return c;
}

BandedSymMatrix extract_bands(const DenseMatrix& dense, std::size_t bandwidth) {
  BandedSymMatrix m(dense.size(), bandwidth);
  for (std::size_t k = 0; k <= m.bandwidth(); ++k) {
    auto out = m.band(k);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = dense(i, i + k);
  }
  return m;
}

}  // namespace hritz
