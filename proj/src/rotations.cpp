#include "angulon/rotations.hpp"

#include <cmath>
#include <numbers>

#include "angulon/eigensolve.hpp"
#include "angulon/errors.hpp"

namespace angulon {

namespace {
constexpr double kPi = std::numbers::pi;
}

RotationGenerator build_rotation_generator(std::size_t n) {
  if (n < 2) throw InvalidArgumentError("dimension must be at least 2");

  RotationGenerator gen;
  gen.n = n;
  gen.parity = (n % 2 == 1) ? Parity::odd : Parity::even;
  gen.epsilon = 2.0 * kPi / static_cast<double>(n);

  OperatorMatrix dphi = trig_diff_matrix(equidistant_nodes(n));

  gen.lz = dphi;
  gen.lz.entries = cplx(0.0, -1.0) * dphi.entries;

  // Closed-form hermitian generator, assembled independently of the
  // derivative matrix: entries i (-1)^{j-k} (pi/n) / sin(pi (j-k)/n).
  gen.a_matrix = dphi;
  gen.a_matrix.entries = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) {
      if (j == k) continue;
      const double diff =
          kPi * (static_cast<double>(j) - static_cast<double>(k)) /
          static_cast<double>(n);
      const double sign = ((j + k) % 2 == 0) ? 1.0 : -1.0;
      gen.a_matrix.entries(j, k) =
          cplx(0.0, sign * (kPi / static_cast<double>(n)) / std::sin(diff));
    }

  // Signed single-step circulant shift: corner sign -1 for even n makes the
  // n-th power -I, the two-valued branch.
  gen.delta.nodes = dphi.nodes;
  gen.delta.exactness = dphi.exactness;
  gen.delta.entries = ComplexMatrix(n, n);
  for (std::size_t j = 0; j + 1 < n; ++j) gen.delta.entries(j + 1, j) = 1.0;
  gen.delta.entries(0, n - 1) = (gen.parity == Parity::odd) ? 1.0 : -1.0;
  return gen;
}

LzEigensystem lz_eigensystem(std::size_t n) {
  if (n < 2) throw InvalidArgumentError("dimension must be at least 2");
  LzEigensystem sys;
  sys.phi_nodes = equidistant_nodes(n);
  sys.eigenvalues.resize(n);
  sys.eigenvectors = ComplexMatrix(n, n);
  const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t c = 0; c < n; ++c) {
    const double m =
        -0.5 * static_cast<double>(n - 1) + static_cast<double>(c);
    sys.eigenvalues[c] = m;
    for (std::size_t k = 0; k < n; ++k) {
      const double phase = m * sys.phi_nodes.points[k];
      sys.eigenvectors(k, c) =
          cplx(std::cos(phase), std::sin(phase)) * inv_sqrt;
    }
  }
  return sys;
}

double verify_exponential_relation(const RotationGenerator& gen) {
  ComplexMatrix arg = cplx(0.0, -gen.epsilon) * gen.lz.entries;
  ComplexMatrix e = matrix_exponential(arg);
  return (e - gen.delta.entries).max_abs();
}

}  // namespace angulon
