#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace angulon {

enum class NodeKind { periodic, open, general };

// Ordered distinct collocation points. periodic: points in (-pi, pi];
// open: points strictly inside (0, pi); general: any real axis points.
struct NodeSet {
  NodeKind kind = NodeKind::general;
  std::vector<double> points;
  std::size_t count() const { return points.size(); }
};

struct NodeConditionResidual {
  std::vector<double> residuals;
  double max_abs = 0.0;
};

// x_j = -pi + 2*pi*j/n for j = 1..n. The last point is always pi; for even n
// the set contains both 0 and pi.
NodeSet equidistant_nodes(std::size_t n);

// Stationarity residual of the node placement, one value per node:
//   angular kinds:  residual_j = sum_{l != j} cot((x_j - x_l)/2) + g(x_j)
//   general kind:   residual_j = sum_{l != j} 1/(x_j - x_l)      + g(x_j)
// where g is the caller's log-derivative. Nodes closer than 1e-10 are
// rejected as degenerate.
NodeConditionResidual node_condition_residual(
    const NodeSet& nodes, const std::function<double(double)>& log_derivative);

// Convenience: the cotangent log-derivative used by the theta-node condition.
double cot(double x);

// Placement of n theta nodes in (0, pi) with zero cotangent-condition
// residual: the unique maximizer of
//   F(z) = sum_k log sin z_k + 2 * sum_{i > j} log sin((z_i - z_j)/2)
// over 0 < z_1 < ... < z_n < pi. F is strictly concave there and its gradient
// is exactly the cot-condition residual, so a damped Newton iteration from
// the uniform start converges to the unique symmetric root.
NodeSet solve_theta_nodes(std::size_t n, double tolerance = 1e-12);

}  // namespace angulon
