#include "angulon/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "angulon/dense.hpp"
#include "angulon/errors.hpp"

namespace angulon {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCollisionTol = 1e-10;

double pair_distance(double a, double b, NodeKind kind) {
  double d = std::abs(a - b);
  if (kind == NodeKind::periodic) d = std::min(d, 2.0 * kPi - d);
  return d;
}

void check_distinct(const NodeSet& nodes) {
  const std::size_t n = nodes.count();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pair_distance(nodes.points[i], nodes.points[j], nodes.kind) <
          kCollisionTol) {
        std::ostringstream msg;
        msg << "nodes " << i + 1 << " and " << j + 1 << " coincide";
        throw DegenerateNodesError(msg.str());
      }
}

// Solves (-H) d = g for the concave objective's Newton step; -H is symmetric
// positive definite at every ordered interior point.
std::vector<double> cholesky_solve(RealMatrix a, std::vector<double> b) {
  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    double diag = a(k, k);
    for (std::size_t p = 0; p < k; ++p) diag -= a(k, p) * a(k, p);
    if (diag <= 0.0)
      throw ConvergenceFailure("step system lost positive definiteness", 0.0,
                               0);
    a(k, k) = std::sqrt(diag);
    for (std::size_t i = k + 1; i < n; ++i) {
      double v = a(i, k);
      for (std::size_t p = 0; p < k; ++p) v -= a(i, p) * a(k, p);
      a(i, k) = v / a(k, k);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    double v = b[i];
    for (std::size_t p = 0; p < i; ++p) v -= a(i, p) * b[p];
    b[i] = v / a(i, i);
  }
  for (std::size_t ii = n; ii-- > 0;) {
    double v = b[ii];
    for (std::size_t p = ii + 1; p < n; ++p) v -= a(p, ii) * b[p];
    b[ii] = v / a(ii, ii);
  }
  return b;
}

double objective(const std::vector<double>& z) {
  const std::size_t n = z.size();
  double f = 0.0;
  for (double v : z) f += std::log(std::sin(v));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      f += 2.0 * std::log(std::sin((z[i] - z[j]) / 2.0));
  return f;
}

bool ordered_interior(const std::vector<double>& z) {
  if (z.empty() || z.front() <= 0.0 || z.back() >= kPi) return false;
  for (std::size_t i = 1; i < z.size(); ++i)
    if (z[i] <= z[i - 1]) return false;
  return true;
}

}  // namespace

double cot(double x) { return 1.0 / std::tan(x); }

NodeSet equidistant_nodes(std::size_t n) {
  if (n == 0) throw InvalidArgumentError("node count must be positive");
  NodeSet nodes;
  nodes.kind = NodeKind::periodic;
  nodes.points.resize(n);
  for (std::size_t j = 1; j <= n; ++j)
    nodes.points[j - 1] = -kPi + 2.0 * kPi * static_cast<double>(j) /
                                     static_cast<double>(n);
  return nodes;
}

NodeConditionResidual node_condition_residual(
    const NodeSet& nodes,
    const std::function<double(double)>& log_derivative) {
  check_distinct(nodes);
  const std::size_t n = nodes.count();
  const bool angular = nodes.kind != NodeKind::general;
  NodeConditionResidual out;
  out.residuals.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double xj = nodes.points[j];
    const double g = log_derivative(xj);
    if (!std::isfinite(g)) {
      std::ostringstream msg;
      msg << "log-derivative not finite at node " << j + 1;
      throw EvaluationError(msg.str());
    }
    double sum = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == j) continue;
      const double d = xj - nodes.points[l];
      sum += angular ? cot(d / 2.0) : 1.0 / d;
    }
    out.residuals[j] = sum + g;
    out.max_abs = std::max(out.max_abs, std::abs(out.residuals[j]));
  }
  return out;
}

NodeSet solve_theta_nodes(std::size_t n, double tolerance) {
  if (n == 0) throw InvalidArgumentError("node count must be positive");
  if (tolerance <= 0.0) throw InvalidArgumentError("tolerance must be positive");

  constexpr int kMaxIterations = 200;
  // Inside this basin the Newton step is an ascent direction up to roundoff,
  // so the line search is skipped and convergence is quadratic.
  constexpr double kFullStepResidual = 1e-6;

  std::vector<double> z(n);
  for (std::size_t j = 1; j <= n; ++j)
    z[j - 1] = kPi * static_cast<double>(j) / static_cast<double>(n + 1);

  NodeSet current;
  current.kind = NodeKind::open;

  auto residual = [&](const std::vector<double>& pts) {
    NodeSet s;
    s.kind = NodeKind::open;
    s.points = pts;
    return node_condition_residual(s, cot);
  };

  double best = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    const NodeConditionResidual g = residual(z);
    best = std::min(best, g.max_abs);
    if (g.max_abs < tolerance) {
      // The objective is invariant under reflection about pi/2; averaging
      // with the reflected set pins the symmetric root exactly.
      std::vector<double> sym(n);
      for (std::size_t j = 0; j < n; ++j)
        sym[j] = 0.5 * (z[j] + (kPi - z[n - 1 - j]));
      const NodeConditionResidual gs = residual(sym);
      current.points = gs.max_abs <= g.max_abs ? sym : z;
      return current;
    }

    RealMatrix neg_hessian(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      const double sj = std::sin(z[j]);
      double diag = 1.0 / (sj * sj);
      for (std::size_t l = 0; l < n; ++l) {
        if (l == j) continue;
        const double sh = std::sin((z[j] - z[l]) / 2.0);
        const double w = 0.5 / (sh * sh);
        diag += w;
        neg_hessian(j, l) = -w;
      }
      neg_hessian(j, j) = diag;
    }
    const std::vector<double> d = cholesky_solve(neg_hessian, g.residuals);

    if (g.max_abs < kFullStepResidual) {
      for (std::size_t j = 0; j < n; ++j) z[j] += d[j];
      continue;
    }

    const double f0 = objective(z);
    double alpha = 1.0;
    bool stepped = false;
    for (int halving = 0; halving < 60; ++halving) {
      std::vector<double> trial(n);
      for (std::size_t j = 0; j < n; ++j) trial[j] = z[j] + alpha * d[j];
      if (ordered_interior(trial) && objective(trial) > f0) {
        z = std::move(trial);
        stepped = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!stepped) {
      std::ostringstream msg;
      msg << "line search stalled after " << iter + 1
          << " iterations, best residual " << best;
      throw ConvergenceFailure(msg.str(), best, iter + 1);
    }
  }

  std::ostringstream msg;
  msg << "no convergence in " << kMaxIterations << " iterations, best residual "
      << best;
  throw ConvergenceFailure(msg.str(), best, kMaxIterations);
}

}  // namespace angulon
