#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "valleyscape/point.hpp"

namespace valleyscape {

/// Dense square matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  Matrix(std::size_t n, std::vector<double> row_major);

  static Matrix identity(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const { return std::span<const double>(data_).subspan(i * n_, n_); }

  Vector multiply(std::span<const double> v) const;

  /// Largest |A(i,j) - A(j,i)|.
  double asymmetry() const noexcept;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

inline constexpr double kSymmetryTolerance = 1e-12;

struct EigenDecomposition {
  Vector values;              ///< descending
  std::vector<Vector> vectors;  ///< vectors[i] pairs with values[i]; unit, orthogonal
  int sweeps = 0;             ///< Jacobi sweeps used
};

/// Full spectrum of a symmetric matrix by cyclic Jacobi rotations.
///
/// Eigenpairs are sorted by descending eigenvalue (ties keep the lower
/// column first) and each eigenvector is sign-normalized so that its
/// largest-magnitude component (first one on ties) is positive.
/// InputError when the input is asymmetric beyond 1e-12 or non-finite.
EigenDecomposition eigendecompose_symmetric(const Matrix& sym);

/// Flips `v` so its largest-magnitude component is positive.
void normalize_sign(Vector& v);

}  // namespace valleyscape
