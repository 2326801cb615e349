#include "valleyscape/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "valleyscape/errors.hpp"

namespace valleyscape {

Matrix::Matrix(std::size_t n, std::vector<double> row_major) : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) throw InputError("matrix data does not match its size");
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Vector Matrix::multiply(std::span<const double> v) const {
  Vector out(n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) out[i] = dot(row(i), v);
  return out;
}

double Matrix::asymmetry() const noexcept {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
  }
  return worst;
}

void normalize_sign(Vector& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (std::abs(v[i]) > std::abs(v[best])) best = i;
  }
  if (!v.empty() && v[best] < 0.0) {
    for (double& x : v) x = -x;
  }
}

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) s += a(i, j) * a(i, j);
  }
  return std::sqrt(2.0 * s);
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (double v : a.row(i)) s += v * v;
  }
  return std::sqrt(s);
}

// Zeroes a(p,q) with one plane rotation and accumulates it into v.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.size();

  for (std::size_t k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = a(p, k) = c * akp - s * akq;
    a(k, q) = a(q, k) = s * akp + c * akq;
  }
  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

EigenDecomposition eigendecompose_symmetric(const Matrix& sym) {
  const std::size_t n = sym.size();
  if (n == 0) throw InputError("cannot decompose an empty matrix");
  for (std::size_t i = 0; i < n; ++i) require_finite(sym.row(i), "matrix");
  if (sym.asymmetry() > kSymmetryTolerance) throw InputError("matrix is not symmetric");

  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = 0.5 * (sym(i, j) + sym(j, i));
  }
  Matrix v = Matrix::identity(n);

  const double scale = frobenius_norm(a);
  int sweep = 0;
  for (; sweep < kMaxSweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off == 0.0 || off <= 1e-15 * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) != 0.0) rotate(a, v, p, q);
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigenDecomposition out;
  out.sweeps = sweep;
  for (std::size_t idx : order) {
    out.values.push_back(a(idx, idx));
    Vector col(n);
    for (std::size_t k = 0; k < n; ++k) col[k] = v(k, idx);
    normalize_sign(col);
    out.vectors.push_back(std::move(col));
  }
  return out;
}

}  // namespace valleyscape
