#include <doctest.h>

#include <cmath>
#include <numbers>

#include "angulon/eigensolve.hpp"
#include "angulon/errors.hpp"
#include "angulon/lsquared.hpp"
#include "angulon/nodes.hpp"

using namespace angulon;

namespace {
constexpr double kPi = std::numbers::pi;

std::size_t count_near(const std::vector<double>& values, double target,
                       double tol) {
  std::size_t c = 0;
  for (double v : values)
    if (std::abs(v - target) <= tol) ++c;
  return c;
}
}  // namespace

TEST_CASE("direct assembly pins dimensions, window size, and certification") {
  const LSquaredOperator op = assemble_l2(solve_theta_nodes(3), 3);
  CHECK(op.matrix.entries.rows() == 9);
  CHECK(op.variant == L2Variant::direct);
  CHECK(variant_tag(op.variant) == "eq30");
  CHECK(op.exact_count == 4);
  CHECK(op.psd_certified);
  CHECK(op.warnings.empty());
}

TEST_CASE("direct spectrum on the 3x3 grid matches the pinned values") {
  const LSquaredOperator op = assemble_l2(solve_theta_nodes(3), 3);
  const LabeledSpectrum spec = labeled_spectrum(op);
  REQUIRE(spec.eigenvalues.size() == 9);

  // exact window: the n = 0 and n = 1 ladder values
  CHECK(spec.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-9));
  for (int i = 1; i <= 3; ++i)
    CHECK(spec.eigenvalues[i] == doctest::Approx(2.0).epsilon(1e-9));

  // remainder of the spectrum, pinned for regression
  CHECK(spec.eigenvalues[4] ==
        doctest::Approx(4.3027756377319948).epsilon(1e-8));
  CHECK(spec.eigenvalues[5] ==
        doctest::Approx(7.3027756377319948).epsilon(1e-8));
  CHECK(spec.eigenvalues[6] ==
        doctest::Approx(7.3027756377319992).epsilon(1e-8));
  CHECK(spec.eigenvalues[7] ==
        doctest::Approx(8.6055512754639842).epsilon(1e-8));
  CHECK(spec.eigenvalues[8] ==
        doctest::Approx(8.6055512754639913).epsilon(1e-8));
}

TEST_CASE("direct spectrum clusters carry ladder labels and oracle "
          "residuals") {
  const LSquaredOperator op = assemble_l2(solve_theta_nodes(3), 3);
  const LabeledSpectrum spec = labeled_spectrum(op);
  REQUIRE(spec.clusters.size() >= 2);

  CHECK(spec.clusters[0].multiplicity == 1);
  CHECK(spec.clusters[0].labeled);
  CHECK(spec.clusters[0].n_label == 0);
  CHECK(spec.clusters[1].multiplicity == 3);
  CHECK(spec.clusters[1].labeled);
  CHECK(spec.clusters[1].n_label == 1);

  for (const SpectrumCluster& c : spec.clusters)
    if (c.labeled) {
      CHECK(c.residual_available);
      CHECK(c.max_subspace_residual < 1e-8);
    }
  CHECK(spec.has_vectors);
  CHECK(spec.max_imag_abs == 0.0);
}

TEST_CASE("eigenvalue-to-cluster map is consistent") {
  const LSquaredOperator op = assemble_l2(solve_theta_nodes(3), 5);
  const LabeledSpectrum spec = labeled_spectrum(op);
  REQUIRE(spec.cluster_of.size() == spec.eigenvalues.size());
  std::size_t total = 0;
  for (const SpectrumCluster& c : spec.clusters) total += c.multiplicity;
  CHECK(total == spec.eigenvalues.size());
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    REQUIRE(spec.cluster_of[i] < spec.clusters.size());
    const SpectrumCluster& c = spec.clusters[spec.cluster_of[i]];
    CHECK(std::abs(spec.eigenvalues[i] - c.value) < 1e-5);
  }
}

TEST_CASE("a small azimuthal grid voids the exactness certificate") {
  const LSquaredOperator op = assemble_l2(solve_theta_nodes(5), 3);
  CHECK(op.exact_count == 9);
  REQUIRE(op.warnings.size() == 1);
  CHECK(op.warnings[0].find("m_phi") != std::string::npos);
}

TEST_CASE("even grid counts are rejected as the excluded spin ladder") {
  CHECK_THROWS_AS(assemble_l2(solve_theta_nodes(3), 4), InvalidArgumentError);
  const NodeSet even_theta{NodeKind::open, {0.5, 1.0, 1.5, 2.5}};
  CHECK_THROWS_AS(assemble_l2(even_theta, 3), InvalidArgumentError);
}

TEST_CASE("theta nodes on the coordinate singularity are rejected") {
  const NodeSet bad{NodeKind::open, {0.0, 1.0, 2.0}};
  CHECK_THROWS_AS(assemble_l2(bad, 3), EvaluationError);
  const NodeSet bad_pi{NodeKind::open, {0.5, 1.0, kPi}};
  CHECK_THROWS_AS(assemble_l2(bad_pi, 3), EvaluationError);
}

TEST_CASE("theta blocks at condition nodes are symmetrizable and "
          "isospectral to the plain form") {
  const NodeSet nodes = solve_theta_nodes(5);
  const ThetaBlock block = theta_block(nodes, 2);
  REQUIRE(block.symmetric_available);

  // symmetrized form is exactly symmetric
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j)
      CHECK(block.symmetrized(i, j) == block.symmetrized(j, i));

  const EigenDecomposition sym = jacobi_symmetric(block.symmetrized);
  const EigenDecomposition plain = hessenberg_qr(to_complex(block.plain));
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(std::abs(sym.values[i].real() - plain.values[i].real()) < 1e-9);
    CHECK(std::abs(plain.values[i].imag()) < 1e-9);
  }
  CHECK(sym.values[0].real() > -1e-10);
}

TEST_CASE("theta blocks away from condition nodes stay plain") {
  const NodeSet uneven{NodeKind::open, {kPi / 4, kPi / 2, 3 * kPi / 4}};
  const ThetaBlock block = theta_block(uneven, 1);
  CHECK_FALSE(block.symmetric_available);
  CHECK(block.plain.rows() == 3);
}

TEST_CASE("parity assembly carries the wide-grid window and the rank-one "
          "correction") {
  const NodeSet theta = solve_theta_nodes(3);
  const LSquaredOperator op = assemble_l2_parity(theta, 7);
  CHECK(op.matrix.entries.rows() == 21);
  CHECK(variant_tag(op.variant) == "eq35");
  CHECK(op.exact_count == 16);
  CHECK(op.warnings.empty());
}

TEST_CASE("parity assembly on a narrow azimuthal grid claims no window") {
  const LSquaredOperator op = assemble_l2_parity(solve_theta_nodes(3), 3);
  CHECK(op.exact_count == 0);
  REQUIRE(op.warnings.size() == 1);
  CHECK(op.warnings[0].find("2*n_theta + 1") != std::string::npos);
}

TEST_CASE("parity spectrum honestly reproduces its exact content") {
  // measured truth on the 3x7 grid: the odd-rung ladder values 2 and 12
  // appear exactly; the even rungs (0, 6, 20) do not.
  const LSquaredOperator op = assemble_l2_parity(solve_theta_nodes(3), 7);
  const LabeledSpectrum spec = labeled_spectrum(op);
  REQUIRE(spec.eigenvalues.size() == 21);
  CHECK(spec.max_imag_abs < 1e-8);
  CHECK(count_near(spec.eigenvalues, 2.0, 1e-8) == 3);
  CHECK(count_near(spec.eigenvalues, 12.0, 1e-8) == 4);
  CHECK(count_near(spec.eigenvalues, 0.0, 1e-6) == 0);
  CHECK(count_near(spec.eigenvalues, 6.0, 1e-6) == 0);
}

TEST_CASE("single-node parity assembly reduces to a closed form") {
  // N = 1 at theta = pi/2: operator is I - D_phi^2 kron 1, spectrum {1, 2, 2}
  const LSquaredOperator op = assemble_l2_parity(solve_theta_nodes(1), 3);
  const LabeledSpectrum spec = labeled_spectrum(op);
  REQUIRE(spec.eigenvalues.size() == 3);
  CHECK(spec.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(spec.eigenvalues[1] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(spec.eigenvalues[2] == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("nonpositive clustering tolerance is rejected") {
  const LSquaredOperator op = assemble_l2(solve_theta_nodes(3), 3);
  CHECK_THROWS_AS(labeled_spectrum(op, 0.0), InvalidArgumentError);
}
