#pragma once

#include <cstddef>
#include <vector>

#include "angulon/dense.hpp"
#include "angulon/diffmat.hpp"
#include "angulon/nodes.hpp"

namespace angulon {

enum class Parity { odd, even };

// One-step cyclic rotation of the sampled circle and its generator.
// delta is the signed circulant shift: subdiagonal ones with corner entry
// +1 for odd n, -1 for even n, so delta^n = I (odd) or -I (even).
// a_matrix is the hermitian generator with entries
//   i (-1)^{j-k} (pi/n) / sin(pi (j-k)/n),  zero diagonal;
// it equals i * epsilon * d_phi = -epsilon * lz with epsilon = 2*pi/n.
struct RotationGenerator {
  OperatorMatrix delta;
  OperatorMatrix a_matrix;
  OperatorMatrix lz;  // -i times the periodic derivative projection
  std::size_t n = 0;
  Parity parity = Parity::odd;
  double epsilon = 0.0;
};

// Analytic eigensystem of lz on the equidistant grid. Eigenvalues are the
// ascending ladder m = -(n-1)/2 .. (n-1)/2 in unit steps: integers for odd
// n, half-integers for even n. Column for m holds e^{i m phi_k}/sqrt(n) at
// phi_k = -pi + 2 pi k / n; the matrix is unitary.
struct LzEigensystem {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
  NodeSet phi_nodes;
};

RotationGenerator build_rotation_generator(std::size_t n);  // n >= 2

LzEigensystem lz_eigensystem(std::size_t n);  // n >= 2

// Max-norm deviation || exp(-i epsilon lz) - delta ||_max, exponential taken
// with the in-repo Pade kernel. Small (< 1e-8) whenever the generator is
// well-formed, both parities.
double verify_exponential_relation(const RotationGenerator& gen);

}  // namespace angulon
