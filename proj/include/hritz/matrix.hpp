#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hritz {

/// Square row-major matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }

  DenseMatrix transposed() const;
  double max_abs() const;
  /// max_i sum_j |a_ij|
  double norm_inf() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);

/// Symmetric matrix stored by its main diagonal and `bandwidth` upper
/// diagonals. Band k holds entries (i, i+k) and has length dim - k.
class BandedSymMatrix {
 public:
  BandedSymMatrix(std::size_t dim, std::size_t bandwidth);

  /// Takes ownership of explicit bands; band k must have length dim - k and
  /// every entry must be finite.
  static BandedSymMatrix from_bands(std::vector<std::vector<double>> bands);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t bandwidth() const noexcept { return bands_.size() - 1; }

  std::span<const double> band(std::size_t k) const { return bands_.at(k); }
  std::span<double> band(std::size_t k) { return bands_.at(k); }

  /// Entry (i, j) of the full matrix, zero outside the stored band.
  double at(std::size_t i, std::size_t j) const;
  /// Sets entry (i, j) and, implicitly, (j, i).
  void set(std::size_t i, std::size_t j, double value);

  DenseMatrix to_dense() const;

  /// max |a_ij| over i != j.
  double max_abs_off_diagonal() const;

 private:
  std::size_t dim_;
  std::vector<std::vector<double>> bands_;
};

/// Entrywise sum; the result carries the wider of the two bandwidths.
BandedSymMatrix operator+(const BandedSymMatrix& a, const BandedSymMatrix& b);

/// Upper bands of a dense matrix (assumed symmetric) up to `bandwidth`.
BandedSymMatrix extract_bands(const DenseMatrix& dense, std::size_t bandwidth);

}  // namespace hritz
