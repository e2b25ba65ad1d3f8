#pragma once

#include <string>
#include <vector>

#include "angulon/dense.hpp"
#include "angulon/nodes.hpp"

namespace angulon {

// Function class on which a differentiation matrix is exact:
//   polynomial     degree <= N-1
//   trigonometric  span{1, cos qx, sin qx : q <= degree}, N = 2*degree + 1
//   half_integer   e^{ix/2} * f, f trigonometric of degree <= N/2 - 1
//   sine_half      sin(x/2) * f, f trigonometric of degree <= N/2 - 1
//   parity         odd-frequency span {sin kx: k odd <= N} + {cos kx: k odd
//                  <= N-2}, exact when the nodes satisfy the cotangent
//                  stationarity condition
enum class ExactnessClass { polynomial, trigonometric, half_integer, sine_half, parity };

struct Exactness {
  ExactnessClass kind = ExactnessClass::polynomial;
  int degree = 0;
};

std::string exactness_class_name(ExactnessClass kind);

// Dense square derivative projection. entries maps function samples at
// nodes to derivative samples, exactly on the tagged class. similarity holds
// the diagonal scaling (node-product weights) used in the construction; it
// never contains zeros and lets callers rescale to the structured frame
// without recomputation.
struct OperatorMatrix {
  ComplexMatrix entries;
  NodeSet nodes;
  Exactness exactness;
  std::vector<double> similarity;

  RealMatrix real() const { return real_part(entries); }

  // Entries conjugated by the similarity diagonal: diag(1/s) * E * diag(s).
  // For the node-product weights this frame has antisymmetric off-diagonal
  // structure.
  RealMatrix scaled_frame() const;
};

// Derivative projection exact on polynomials of degree <= N-1.
// Row sums vanish (constants differentiate to zero).
OperatorMatrix poly_diff_matrix(const NodeSet& nodes);

// Derivative projection for 2*pi-periodic sampling, built from half-angle
// cotangent/cosecant entries. Exactness depends on parity of N:
//   N odd: trigonometric degree (N-1)/2;
//   N even with 0 and pi among the nodes: half_integer class;
//   N even with 0 but not pi: sine_half class;
//   N even with neither: rejected.
OperatorMatrix trig_diff_matrix(const NodeSet& nodes);

// Derivative-scheme matrix on nodes in (0, pi) built from full-angle
// cotangent entries, with sine-product diagonal scaling. Tagged with the
// parity class of degree N; the exactness holds at nodes satisfying the
// cotangent condition, not at arbitrary placements.
OperatorMatrix parity_diff_matrix(const NodeSet& nodes);

// k-fold product projecting the k-th derivative; k = 0 is the identity.
// The exactness tag is unchanged: the tagged class is closed under
// differentiation.
OperatorMatrix matrix_power(const OperatorMatrix& op, unsigned k);

}  // namespace angulon
