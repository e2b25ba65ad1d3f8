#include "angulon/diffmat.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "angulon/errors.hpp"

namespace angulon {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kCollisionTol = 1e-10;
constexpr double kBoundaryTol = 1e-12;

struct LogWeights {
  std::vector<double> log_mag;  // log of |product of pair terms|
  std::vector<double> sign;     // +1 / -1
};

// Node-product weights in log-magnitude + sign form. Only pairwise ratios
// exp(log_mag[j] - log_mag[k]) enter matrix entries, so products of many
// near-zero factors never underflow.
template <typename PairTerm>
LogWeights log_weights(const std::vector<double>& x, PairTerm term) {
  const std::size_t n = x.size();
  LogWeights w{std::vector<double>(n, 0.0), std::vector<double>(n, 1.0)};
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l) {
      if (l == j) continue;
      const double t = term(x[j], x[l]);
      w.log_mag[j] += std::log(std::abs(t));
      if (t < 0.0) w.sign[j] = -w.sign[j];
    }
  return w;
}

std::vector<double> weights_to_diagonal(const LogWeights& w, double scale) {
  std::vector<double> d(w.log_mag.size());
  for (std::size_t j = 0; j < d.size(); ++j)
    d[j] = scale * w.sign[j] * std::exp(w.log_mag[j]);
  return d;
}

double ratio(const LogWeights& w, std::size_t j, std::size_t k) {
  return w.sign[j] * w.sign[k] * std::exp(w.log_mag[j] - w.log_mag[k]);
}

void require_pairwise(const std::vector<double>& x, double modulus,
                      const char* what) {
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      double d = std::abs(x[i] - x[j]);
      if (modulus > 0.0) {
        d = std::fmod(d, modulus);
        d = std::min(d, modulus - d);
      }
      if (d < kCollisionTol) {
        std::ostringstream msg;
        msg << what << ": nodes " << i + 1 << " and " << j + 1 << " coincide";
        throw DegenerateNodesError(msg.str());
      }
    }
}

bool contains_point(const std::vector<double>& x, double target) {
  for (double v : x)
    if (std::abs(v - target) < kBoundaryTol) return true;
  return false;
}

}  // namespace

std::string exactness_class_name(ExactnessClass kind) {
  switch (kind) {
    case ExactnessClass::polynomial: return "polynomial";
    case ExactnessClass::trigonometric: return "trigonometric";
    case ExactnessClass::half_integer: return "half-integer";
    case ExactnessClass::sine_half: return "sine-half";
    case ExactnessClass::parity: return "parity";
  }
  return "unknown";
}

RealMatrix OperatorMatrix::scaled_frame() const {
  const std::size_t n = entries.rows();
  RealMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r(i, j) = entries(i, j).real() * (similarity[j] / similarity[i]);
  return r;
}

OperatorMatrix poly_diff_matrix(const NodeSet& nodes) {
  const std::vector<double>& x = nodes.points;
  const std::size_t n = x.size();
  if (n == 0) throw InvalidArgumentError("empty node set");
  require_pairwise(x, 0.0, "poly_diff_matrix");

  const LogWeights w =
      log_weights(x, [](double a, double b) { return a - b; });

  OperatorMatrix op;
  op.nodes = nodes;
  op.exactness = {ExactnessClass::polynomial, static_cast<int>(n) - 1};
  op.similarity = weights_to_diagonal(w, 1.0);
  op.entries = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == j) continue;
      diag += 1.0 / (x[j] - x[l]);
      op.entries(j, l) = cplx(ratio(w, j, l) / (x[j] - x[l]), 0.0);
    }
    op.entries(j, j) = cplx(diag, 0.0);
  }
  return op;
}

OperatorMatrix trig_diff_matrix(const NodeSet& nodes) {
  const std::vector<double>& x = nodes.points;
  const std::size_t n = x.size();
  if (n == 0) throw InvalidArgumentError("empty node set");
  require_pairwise(x, 2.0 * kPi, "trig_diff_matrix");

  Exactness tag;
  if (n % 2 == 1) {
    tag = {ExactnessClass::trigonometric, static_cast<int>((n - 1) / 2)};
  } else {
    const bool has_zero = contains_point(x, 0.0);
    const bool has_pi = contains_point(x, kPi) || contains_point(x, -kPi);
    if (has_zero && has_pi)
      tag = {ExactnessClass::half_integer, static_cast<int>(n / 2) - 1};
    else if (has_zero)
      tag = {ExactnessClass::sine_half, static_cast<int>(n / 2) - 1};
    else
      throw InvalidArgumentError(
          "even node count requires 0 (and pi for the shifted class) among "
          "the nodes");
  }

  const LogWeights w = log_weights(
      x, [](double a, double b) { return std::sin((a - b) / 2.0); });

  OperatorMatrix op;
  op.nodes = nodes;
  op.exactness = tag;
  op.similarity = weights_to_diagonal(w, 0.5);
  op.entries = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == j) continue;
      const double half = (x[j] - x[l]) / 2.0;
      diag += 0.5 / std::tan(half);
      op.entries(j, l) = cplx(ratio(w, j, l) * 0.5 / std::sin(half), 0.0);
    }
    op.entries(j, j) = cplx(diag, 0.0);
  }
  return op;
}

OperatorMatrix parity_diff_matrix(const NodeSet& nodes) {
  const std::vector<double>& x = nodes.points;
  const std::size_t n = x.size();
  if (n == 0) throw InvalidArgumentError("empty node set");
  require_pairwise(x, kPi, "parity_diff_matrix");

  const LogWeights w =
      log_weights(x, [](double a, double b) { return std::sin(a - b); });

  OperatorMatrix op;
  op.nodes = nodes;
  op.exactness = {ExactnessClass::parity, static_cast<int>(n)};
  op.similarity = weights_to_diagonal(w, 1.0);
  op.entries = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = 0.0;
    for (std::size_t l = 0; l < n; ++l) {
      if (l == j) continue;
      const double d = x[j] - x[l];
      diag += 1.0 / std::tan(d);
      op.entries(j, l) = cplx(ratio(w, j, l) / std::tan(d), 0.0);
    }
    op.entries(j, j) = cplx(diag, 0.0);
  }
  return op;
}

OperatorMatrix matrix_power(const OperatorMatrix& op, unsigned k) {
  OperatorMatrix r = op;
  r.entries = matrix_pow(op.entries, k);
  return r;
}

}  // namespace angulon
