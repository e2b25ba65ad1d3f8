#include <doctest.h>

#include <cmath>
#include <random>

#include "angulon/eigensolve.hpp"
#include "angulon/errors.hpp"

using namespace angulon;

TEST_CASE("jacobi solves a 2x2 symmetric matrix exactly") {
  RealMatrix a(2, 2);
  a(0, 0) = 2.0;
  a(0, 1) = 1.0;
  a(1, 0) = 1.0;
  a(1, 1) = 2.0;
  const EigenDecomposition eig = jacobi_symmetric(a);
  REQUIRE(eig.values.size() == 2);
  CHECK(eig.values[0].real() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(eig.values[1].real() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(eig.has_vectors);
  CHECK(eig.residual < 1e-14);
}

TEST_CASE("jacobi vectors are orthonormal and satisfy the eigen relation") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 6;
  RealMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      a(i, j) = u(rng);
      a(j, i) = a(i, j);
    }
  const EigenDecomposition eig = jacobi_symmetric(a);
  CHECK(eig.residual < 1e-12);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        dot += eig.vectors(k, i) * eig.vectors(k, j);
      CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) < 1e-12);
    }
  for (std::size_t j = 1; j < n; ++j)
    CHECK(eig.values[j - 1].real() <= eig.values[j].real());
}

TEST_CASE("jacobi rejects asymmetric input") {
  RealMatrix a(2, 2);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS(jacobi_symmetric(a), InvalidArgumentError);
}

TEST_CASE("qr finds the imaginary pair of a rotation generator") {
  ComplexMatrix a(2, 2);
  a(0, 1) = -1.0;
  a(1, 0) = 1.0;
  const EigenDecomposition eig = hessenberg_qr(a);
  REQUIRE(eig.values.size() == 2);
  CHECK(std::abs(eig.values[0] - cplx(0.0, -1.0)) < 1e-12);
  CHECK(std::abs(eig.values[1] - cplx(0.0, 1.0)) < 1e-12);
}

TEST_CASE("qr finds cube roots of unity from the cyclic shift") {
  ComplexMatrix a(3, 3);
  a(0, 2) = 1.0;
  a(1, 0) = 1.0;
  a(2, 1) = 1.0;
  const EigenDecomposition eig = hessenberg_qr(a);
  REQUIRE(eig.values.size() == 3);
  const double re = -0.5;
  const double im = std::sqrt(3.0) / 2.0;
  CHECK(std::abs(eig.values[0] - cplx(re, -im)) < 1e-10);
  CHECK(std::abs(eig.values[1] - cplx(re, im)) < 1e-10);
  CHECK(std::abs(eig.values[2] - cplx(1.0, 0.0)) < 1e-10);
}

TEST_CASE("qr agrees with jacobi on a symmetric matrix") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = 5;
  RealMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      a(i, j) = u(rng);
      a(j, i) = a(i, j);
    }
  const EigenDecomposition sym = jacobi_symmetric(a);
  const EigenDecomposition gen = hessenberg_qr(to_complex(a));
  for (std::size_t i = 0; i < n; ++i) {
    CHECK(std::abs(gen.values[i].real() - sym.values[i].real()) < 1e-9);
    CHECK(std::abs(gen.values[i].imag()) < 1e-9);
  }
}

TEST_CASE("exponential of a diagonal matrix exponentiates the diagonal") {
  ComplexMatrix a(3, 3);
  a(0, 0) = 1.0;
  a(1, 1) = -2.0;
  a(2, 2) = cplx(0.0, 0.5);
  const ComplexMatrix e = matrix_exponential(a);
  CHECK(std::abs(e(0, 0) - std::exp(cplx(1.0))) < 1e-14);
  CHECK(std::abs(e(1, 1) - std::exp(cplx(-2.0))) < 1e-14);
  CHECK(std::abs(e(2, 2) - std::exp(cplx(0.0, 0.5))) < 1e-14);
  CHECK(std::abs(e(0, 1)) < 1e-15);
}

TEST_CASE("exponential of the 2x2 spin generator is a rotation") {
  const double t = 0.7;
  ComplexMatrix a(2, 2);
  a(0, 1) = -t;
  a(1, 0) = t;
  const ComplexMatrix e = matrix_exponential(a);
  CHECK(std::abs(e(0, 0) - std::cos(t)) < 1e-14);
  CHECK(std::abs(e(0, 1) + std::sin(t)) < 1e-14);
  CHECK(std::abs(e(1, 0) - std::sin(t)) < 1e-14);
  CHECK(std::abs(e(1, 1) - std::cos(t)) < 1e-14);
}

TEST_CASE("exponential handles large norms by scaling and squaring") {
  const double t = 40.0;
  ComplexMatrix a(2, 2);
  a(0, 1) = -t;
  a(1, 0) = t;
  const ComplexMatrix e = matrix_exponential(a);
  ComplexMatrix neg = cplx(-1.0) * a;
  const ComplexMatrix inv = matrix_exponential(neg);
  CHECK((e * inv - ComplexMatrix::identity(2)).max_abs() < 1e-10);
  CHECK(std::abs(e(0, 0) - std::cos(t)) < 1e-10);
}

TEST_CASE("exponential of a nilpotent matrix truncates exactly") {
  ComplexMatrix a(2, 2);
  a(0, 1) = 3.0;
  const ComplexMatrix e = matrix_exponential(a);
  CHECK(std::abs(e(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(e(0, 1) - 3.0) < 1e-13);
  CHECK(std::abs(e(1, 0)) < 1e-15);
  CHECK(std::abs(e(1, 1) - 1.0) < 1e-15);
}
