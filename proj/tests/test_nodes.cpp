#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "angulon/errors.hpp"
#include "angulon/nodes.hpp"

using namespace angulon;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("equidistant angles step by 2pi/n and end at pi") {
  const NodeSet nodes = equidistant_nodes(4);
  REQUIRE(nodes.count() == 4);
  CHECK(nodes.kind == NodeKind::periodic);
  CHECK(nodes.points[0] == doctest::Approx(-kPi / 2).epsilon(1e-15));
  CHECK(nodes.points[1] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(nodes.points[2] == doctest::Approx(kPi / 2).epsilon(1e-15));
  CHECK(nodes.points[3] == doctest::Approx(kPi).epsilon(1e-15));
}

TEST_CASE("cotangent condition residual at a symmetric pair") {
  const NodeSet nodes{NodeKind::open, {kPi / 3.0, 2.0 * kPi / 3.0}};
  const NodeConditionResidual r = node_condition_residual(nodes, cot);
  const double expect = 2.0 / std::sqrt(3.0);
  REQUIRE(r.residuals.size() == 2);
  CHECK(r.residuals[0] == doctest::Approx(-expect).epsilon(1e-14));
  CHECK(r.residuals[1] == doctest::Approx(expect).epsilon(1e-14));
  CHECK(r.max_abs == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("general-kind residual uses reciprocal distances") {
  // two nodes at distance 2 with zero log-derivative: residuals +-1/2
  const NodeSet nodes{NodeKind::general, {-1.0, 1.0}};
  const NodeConditionResidual r =
      node_condition_residual(nodes, [](double) { return 0.0; });
  CHECK(r.residuals[0] == doctest::Approx(-0.5).epsilon(1e-15));
  CHECK(r.residuals[1] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("near-coincident nodes are rejected as degenerate") {
  const NodeSet nodes{NodeKind::open, {1.0, 1.0 + 1e-12}};
  CHECK_THROWS_AS(node_condition_residual(nodes, cot), DegenerateNodesError);
}

TEST_CASE("non-finite log-derivative values are rejected") {
  const NodeSet nodes{NodeKind::open, {1.0, 2.0}};
  CHECK_THROWS_AS(node_condition_residual(
                      nodes,
                      [](double) {
                        return std::numeric_limits<double>::infinity();
                      }),
                  EvaluationError);
}

TEST_CASE("single theta node sits at pi/2") {
  const NodeSet nodes = solve_theta_nodes(1);
  REQUIRE(nodes.count() == 1);
  CHECK(nodes.points[0] == doctest::Approx(kPi / 2).epsilon(1e-12));
}

TEST_CASE("two theta nodes sit at pi/4 and 3pi/4") {
  const NodeSet nodes = solve_theta_nodes(2);
  REQUIRE(nodes.count() == 2);
  CHECK(nodes.points[0] == doctest::Approx(kPi / 4).epsilon(1e-12));
  CHECK(nodes.points[1] == doctest::Approx(3 * kPi / 4).epsilon(1e-12));
}

TEST_CASE("three and five theta nodes match pinned solutions") {
  const NodeSet n3 = solve_theta_nodes(3);
  CHECK(n3.points[0] == doctest::Approx(0.4492149963592954).epsilon(1e-10));
  CHECK(n3.points[1] == doctest::Approx(1.5707963267948966).epsilon(1e-10));
  CHECK(n3.points[2] == doctest::Approx(2.6923776572304976).epsilon(1e-10));

  const NodeSet n5 = solve_theta_nodes(5);
  CHECK(n5.points[0] == doctest::Approx(0.19351768946092843).epsilon(1e-10));
  CHECK(n5.points[1] == doctest::Approx(0.80948614354712567).epsilon(1e-10));
  CHECK(n5.points[2] == doctest::Approx(1.5707963267948966).epsilon(1e-10));
  CHECK(n5.points[3] == doctest::Approx(2.3321065100426677).epsilon(1e-10));
  CHECK(n5.points[4] == doctest::Approx(2.9480749641288648).epsilon(1e-10));
}

TEST_CASE("solved nodes zero the cotangent condition") {
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 11u}) {
    const NodeSet nodes = solve_theta_nodes(n);
    REQUIRE(nodes.count() == n);
    CHECK(node_condition_residual(nodes, cot).max_abs < 1e-11);
    // strictly increasing inside (0, pi)
    double prev = 0.0;
    for (double t : nodes.points) {
      CHECK(t > prev);
      CHECK(t < kPi);
      prev = t;
    }
  }
}

TEST_CASE("solved nodes are reflection symmetric about pi/2") {
  const NodeSet nodes = solve_theta_nodes(7);
  for (std::size_t j = 0; j < 7; ++j)
    CHECK(nodes.points[j] + nodes.points[6 - j] ==
          doctest::Approx(kPi).epsilon(1e-14));
}

TEST_CASE("solver rejects a zero node count") {
  CHECK_THROWS_AS(solve_theta_nodes(0), InvalidArgumentError);
}
