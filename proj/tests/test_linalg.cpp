#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>

#include "valleyscape/errors.hpp"
#include "valleyscape/linalg.hpp"

using namespace valleyscape;

namespace {

Matrix random_symmetric(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix a(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      a(i, j) = g(rng);
      a(j, i) = a(i, j);
    }
  }
  return a;
}

void expect_vec_near(const Vector& v, const Vector& expected, double tol) {
  ASSERT_EQ(v.size(), expected.size());
  for (std::size_t i = 0; i < v.size(); ++i) EXPECT_NEAR(v[i], expected[i], tol) << "component " << i;
}

}  // namespace

TEST(Eigen2x2, Diagonal) {
  const auto e = eigendecompose_symmetric(Matrix(2, {0.5, 0, 0, 2}));
  expect_vec_near(e.values, {2.0, 0.5}, 1e-15);
  expect_vec_near(e.vectors[0], {0.0, 1.0}, 1e-15);
  expect_vec_near(e.vectors[1], {1.0, 0.0}, 1e-15);
  const auto f = eigendecompose_symmetric(Matrix(2, {2, 0, 0, 0.5}));
  expect_vec_near(f.vectors[0], {1.0, 0.0}, 1e-15);
  expect_vec_near(f.vectors[1], {0.0, 1.0}, 1e-15);
}

TEST(Eigen2x2, TextbookPair) {
  const double r = 1.0 / std::sqrt(2.0);
  const auto e = eigendecompose_symmetric(Matrix(2, {2, 1, 1, 2}));
  expect_vec_near(e.values, {3.0, 1.0}, 1e-14);
  expect_vec_near(e.vectors[0], {r, r}, 1e-14);
  // Largest-magnitude component ties: the first one is made positive.
  expect_vec_near(e.vectors[1], {r, -r}, 1e-14);
}

TEST(Eigen2x2, RankOne) {
  const double r = 1.0 / std::sqrt(2.0);
  const auto e = eigendecompose_symmetric(Matrix(2, {2, 2, 2, 2}));
  expect_vec_near(e.values, {4.0, 0.0}, 1e-14);
  expect_vec_near(e.vectors[0], {r, r}, 1e-14);
}

TEST(Eigen, Errors) {
  EXPECT_THROW(eigendecompose_symmetric(Matrix(2, {1, 1e-9, 0, 1})), InputError);
  EXPECT_THROW(eigendecompose_symmetric(Matrix(2, {NAN, 0, 0, 1})), InputError);
  EXPECT_THROW(eigendecompose_symmetric(Matrix()), InputError);
  EXPECT_NO_THROW(eigendecompose_symmetric(Matrix(2, {1, 1e-13, 0, 1})));
}

TEST(Eigen, OneByOne) {
  const auto e = eigendecompose_symmetric(Matrix(1, {-3.0}));
  EXPECT_EQ(e.values[0], -3.0);
  EXPECT_EQ(e.vectors[0][0], 1.0);
}

TEST(Eigen, NormalizeSign) {
  Vector v = {0.1, -0.9, 0.3};
  normalize_sign(v);
  expect_vec_near(v, {-0.1, 0.9, -0.3}, 0.0);
  Vector tie = {-0.5, 0.5};
  normalize_sign(tie);
  expect_vec_near(tie, {0.5, -0.5}, 0.0);
}

TEST(Eigen, RandomInvariants) {
  std::mt19937_64 rng(20240501);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 1 + trial % 10;
    const Matrix a = random_symmetric(d, rng);
    const auto e = eigendecompose_symmetric(a);
    ASSERT_EQ(e.values.size(), d);
    for (std::size_t i = 0; i < d; ++i) {
      if (i + 1 < d) EXPECT_GE(e.values[i], e.values[i + 1]);
      const Vector av = a.multiply(e.vectors[i]);
      double residual = 0.0;
      for (std::size_t k = 0; k < d; ++k) residual = std::max(residual, std::abs(av[k] - e.values[i] * e.vectors[i][k]));
      EXPECT_LE(residual, 1e-9 * (1.0 + std::abs(e.values[i])));
      EXPECT_NEAR(norm2(e.vectors[i]), 1.0, 1e-12);
      for (std::size_t j = i + 1; j < d; ++j) EXPECT_LE(std::abs(dot(e.vectors[i], e.vectors[j])), 1e-9);
    }
  }
}

TEST(Eigen, AgreesWithReferenceSolver) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + trial % 9;
    const Matrix a = random_symmetric(d, rng);
    Eigen::MatrixXd m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = a(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(m);
    const auto e = eigendecompose_symmetric(a);
    for (std::size_t i = 0; i < d; ++i) {
      EXPECT_NEAR(e.values[i], ref.eigenvalues()[d - 1 - i], 1e-10 * (1.0 + std::abs(e.values[i])));
    }
    // Top eigenvector matches up to sign (eigenvalues of a Gaussian matrix are distinct a.s.).
    Eigen::VectorXd top = ref.eigenvectors().col(d - 1);
    double overlap = 0.0;
    for (std::size_t k = 0; k < d; ++k) overlap += top[k] * e.vectors[0][k];
    EXPECT_NEAR(std::abs(overlap), 1.0, 1e-9);
  }
}

TEST(Eigen, MultiplyAndAsymmetry) {
  const Matrix a(2, {1, 2, 3, 4});
  const Vector v = {1.0, -1.0};
  expect_vec_near(a.multiply(v), {-1.0, -1.0}, 0.0);
  EXPECT_EQ(a.asymmetry(), 1.0);
  EXPECT_EQ(Matrix::identity(3).asymmetry(), 0.0);
}
