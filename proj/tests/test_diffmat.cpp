#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "angulon/diffmat.hpp"
#include "angulon/errors.hpp"
#include "angulon/nodes.hpp"

using namespace angulon;

namespace {
constexpr double kPi = std::numbers::pi;

double max_abs_diff(const std::vector<double>& a,
                    const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}
}  // namespace

TEST_CASE("polynomial matrix differentiates monomials up to degree n-1") {
  const NodeSet nodes{NodeKind::general, {-1.0, -0.3, 0.4, 1.0}};
  const OperatorMatrix op = poly_diff_matrix(nodes);
  CHECK(op.exactness.kind == ExactnessClass::polynomial);
  CHECK(op.exactness.degree == 3);
  const RealMatrix d = op.real();

  std::vector<double> f(4), fp(4);
  for (int p = 0; p <= 3; ++p) {
    for (int j = 0; j < 4; ++j) {
      f[j] = std::pow(nodes.points[j], p);
      fp[j] = p == 0 ? 0.0 : p * std::pow(nodes.points[j], p - 1);
    }
    CHECK(max_abs_diff(d.apply(f), fp) < 1e-13);
  }
}

TEST_CASE("polynomial matrix rows sum to zero") {
  const NodeSet nodes{NodeKind::general, {-2.0, 0.1, 0.5, 1.3, 2.0}};
  const RealMatrix d = poly_diff_matrix(nodes).real();
  for (std::size_t i = 0; i < 5; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < 5; ++j) s += d(i, j);
    CHECK(std::abs(s) < 1e-13);
  }
}

TEST_CASE("matrix power gives exact higher derivatives") {
  const NodeSet nodes{NodeKind::general, {-1.0, -0.3, 0.4, 1.0}};
  const OperatorMatrix d2 = matrix_power(poly_diff_matrix(nodes), 2);
  CHECK(d2.exactness.kind == ExactnessClass::polynomial);
  std::vector<double> f(4), fpp(4);
  for (int j = 0; j < 4; ++j) {
    const double x = nodes.points[j];
    f[j] = x * x * x;
    fpp[j] = 6.0 * x;
  }
  CHECK(max_abs_diff(d2.real().apply(f), fpp) < 1e-12);
}

TEST_CASE("matrix power zero is the identity") {
  const NodeSet nodes{NodeKind::general, {-1.0, 0.0, 1.0}};
  const OperatorMatrix d0 = matrix_power(poly_diff_matrix(nodes), 0);
  CHECK((d0.entries - ComplexMatrix::identity(3)).max_abs() == 0.0);
}

TEST_CASE("periodic matrix entries match the closed equidistant form") {
  // adjacent off-diagonal entry is 1/(2 sin(pi/n))
  const ComplexMatrix d3 = trig_diff_matrix(equidistant_nodes(3)).entries;
  CHECK(d3(0, 1).real() ==
        doctest::Approx(0.57735026918962584).epsilon(1e-14));
  const ComplexMatrix d5 = trig_diff_matrix(equidistant_nodes(5)).entries;
  CHECK(d5(0, 1).real() ==
        doctest::Approx(0.85065080835203988).epsilon(1e-14));
  for (std::size_t j = 0; j < 5; ++j)
    CHECK(std::abs(d5(j, j)) < 1e-13);
}

TEST_CASE("periodic matrix is exact on low Fourier modes") {
  const NodeSet nodes = equidistant_nodes(5);
  const OperatorMatrix op = trig_diff_matrix(nodes);
  CHECK(op.exactness.kind == ExactnessClass::trigonometric);
  CHECK(op.exactness.degree == 2);
  const RealMatrix d = op.real();
  for (int q = 1; q <= 2; ++q) {
    std::vector<double> c(5), s(5), dc(5), ds(5);
    for (int j = 0; j < 5; ++j) {
      c[j] = std::cos(q * nodes.points[j]);
      s[j] = std::sin(q * nodes.points[j]);
      dc[j] = -q * s[j];
      ds[j] = q * c[j];
    }
    CHECK(max_abs_diff(d.apply(c), dc) < 1e-13);
    CHECK(max_abs_diff(d.apply(s), ds) < 1e-13);
  }
}

TEST_CASE("even periodic count with 0 and pi tags the half-integer class") {
  const NodeSet nodes = equidistant_nodes(4);
  const OperatorMatrix op = trig_diff_matrix(nodes);
  CHECK(op.exactness.kind == ExactnessClass::half_integer);
  CHECK(op.exactness.degree == 1);
  // exact on e^{ix/2}
  std::vector<cplx> f(4);
  for (int j = 0; j < 4; ++j) {
    const double x = nodes.points[j];
    f[j] = cplx(std::cos(x / 2), std::sin(x / 2));
  }
  const std::vector<cplx> df = op.entries.apply(f);
  for (int j = 0; j < 4; ++j)
    CHECK(std::abs(df[j] - cplx(0.0, 0.5) * f[j]) < 1e-13);
}

TEST_CASE("even periodic count with 0 but not pi tags the sine-half class") {
  const NodeSet nodes{NodeKind::periodic, {-2.0, -0.5, 0.0, 1.5}};
  const OperatorMatrix op = trig_diff_matrix(nodes);
  CHECK(op.exactness.kind == ExactnessClass::sine_half);
  // exact on sin(x/2)
  std::vector<double> f(4), fp(4);
  for (int j = 0; j < 4; ++j) {
    f[j] = std::sin(nodes.points[j] / 2);
    fp[j] = 0.5 * std::cos(nodes.points[j] / 2);
  }
  CHECK(max_abs_diff(op.real().apply(f), fp) < 1e-13);
}

TEST_CASE("even periodic count without 0 or pi is rejected") {
  const NodeSet nodes{NodeKind::periodic, {-2.0, -0.5, 0.1, 1.5}};
  CHECK_THROWS_AS(trig_diff_matrix(nodes), InvalidArgumentError);
}

TEST_CASE("periodic collisions are detected modulo the period") {
  const NodeSet nodes{NodeKind::periodic, {-kPi + 1e-12, 0.0, kPi}};
  CHECK_THROWS_AS(trig_diff_matrix(nodes), DegenerateNodesError);
}

TEST_CASE("full-angle scheme at condition nodes is exact on its "
          "odd-frequency span") {
  const int n = 5;
  const NodeSet nodes = solve_theta_nodes(n);
  const OperatorMatrix op = parity_diff_matrix(nodes);
  CHECK(op.exactness.kind == ExactnessClass::parity);
  CHECK(op.exactness.degree == n);
  const RealMatrix d = op.real();

  auto sin_err = [&](int k) {
    std::vector<double> f(n), fp(n);
    for (int j = 0; j < n; ++j) {
      f[j] = std::sin(k * nodes.points[j]);
      fp[j] = k * std::cos(k * nodes.points[j]);
    }
    return max_abs_diff(d.apply(f), fp);
  };
  auto cos_err = [&](int k) {
    std::vector<double> f(n), fp(n);
    for (int j = 0; j < n; ++j) {
      f[j] = std::cos(k * nodes.points[j]);
      fp[j] = -k * std::sin(k * nodes.points[j]);
    }
    return max_abs_diff(d.apply(f), fp);
  };

  // in the class: sin k for odd k <= n, cos k for odd k <= n-2
  CHECK(sin_err(1) < 1e-12);
  CHECK(cos_err(1) < 1e-12);
  CHECK(sin_err(3) < 1e-12);
  CHECK(cos_err(3) < 1e-12);
  CHECK(sin_err(5) < 1e-11);

  // outside: even frequencies and the top cosine; errors are order one
  CHECK(sin_err(2) > 1e-3);
  CHECK(cos_err(2) > 1e-3);
  CHECK(cos_err(5) > 1e-3);
}

TEST_CASE("scaled frame of the full-angle scheme has antisymmetric "
          "off-diagonal part") {
  const NodeSet nodes = solve_theta_nodes(4);
  const OperatorMatrix op = parity_diff_matrix(nodes);
  const RealMatrix sf = op.scaled_frame();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(std::abs(sf(i, j) + sf(j, i)) < 1e-12);
}

TEST_CASE("similarity weights are nonzero") {
  const OperatorMatrix op = trig_diff_matrix(equidistant_nodes(7));
  REQUIRE(op.similarity.size() == 7);
  for (double s : op.similarity) CHECK(s != 0.0);
}

TEST_CASE("coincident polynomial nodes are rejected") {
  const NodeSet nodes{NodeKind::general, {0.5, 0.5 + 1e-12, 1.0}};
  CHECK_THROWS_AS(poly_diff_matrix(nodes), DegenerateNodesError);
}
